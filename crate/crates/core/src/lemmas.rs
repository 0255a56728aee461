//! Structural facts about optimal and extremal broadcasts on paths and
//! cycles, checked against the solver's witness lists.
//!
//! Each check returns how many broadcasts it inspected, or a description of
//! the first counterexample.

use crate::broadcast::{hear_counts, Broadcast};
use crate::formulas::Family;
use crate::graph::Graph;
use crate::solver::{Parameter, Solver};

/// Upper bound on witness lists gathered by the checks.
pub const WITNESS_LIMIT: usize = 1_000_000;

pub type LemmaResult = Result<usize, String>;

fn witnesses(g: &Graph, p: Parameter, optimal_only: bool) -> Result<Vec<Broadcast>, String> {
    let s = Solver::new(g);
    let w = if optimal_only {
        s.solve_all_witnesses(p.spec(), WITNESS_LIMIT)
    } else {
        s.all_satisfying(p.spec(), WITNESS_LIMIT)
    }
    .map_err(|e| format!("{g} {p}: {e}"))?;
    if w.truncated {
        return Err(format!("{g} {p}: more than {WITNESS_LIMIT} witnesses"));
    }
    Ok(w.broadcasts)
}

fn dominated(g: &Graph, f: &Broadcast) -> Vec<bool> {
    hear_counts(g, f.values()).iter().map(|&c| c > 0).collect()
}

/// (a) In an optimal `IR_b` broadcast on a cycle no two undominated
/// vertices are adjacent.
pub fn isolated_holes(g: &Graph) -> LemmaResult {
    let list = witnesses(g, Parameter::UpperBroadcastIrredundance, true)?;
    for f in &list {
        let dom = dominated(g, f);
        if let Some(u) = g.vertices().find(|&u| !dom[u] && g.neighbors(u).iter().any(|&w| !dom[w])) {
            return Err(format!("(a) {g} {f}: x_{u} and a neighbour are both undominated"));
        }
    }
    Ok(list.len())
}

/// (b) In every maximal irredundant broadcast on `P_n`, `x_2` and `x_{n-1}`
/// are dominated and every undominated vertex has a dominated neighbour.
pub fn maximal_irredundant_coverage(g: &Graph) -> LemmaResult {
    let n = g.order();
    let list = witnesses(g, Parameter::BroadcastIrredundance, false)?;
    for f in &list {
        let dom = dominated(g, f);
        if !dom[1] || !dom[n - 2] {
            return Err(format!("(b) {g} {f}: x_2 or x_{} is undominated", n - 1));
        }
        if let Some(u) = g.vertices().find(|&u| !dom[u] && !g.neighbors(u).iter().any(|&w| dom[w])) {
            return Err(format!("(b) {g} {f}: x_{} has no dominated neighbour", u + 1));
        }
    }
    Ok(list.len())
}

/// (c) Shape of optimal `i_b` broadcasts on `P_n` with at least two
/// broadcast vertices `x_{i_1}, ..., x_{i_t}`:
/// 1. `f(x_{i_1}) >= f(x_{i_2})` and `f(x_{i_t}) >= f(x_{i_{t-1}})`;
/// 2. the end broadcasts reach the end vertices;
/// 3. consecutive gaps lie in `[max + 1, sum + 1]`;
/// 4. the first and last gaps are `f(x_{i_1}) + 1` and `f(x_{i_t}) + 1`.
pub fn lower_independence_shape(g: &Graph) -> LemmaResult {
    let n = g.order();
    let mut seen = 0;
    for f in witnesses(g, Parameter::LowerBroadcastIndependence, true)? {
        let vs = f.broadcast_vertices();
        let t = vs.len();
        if t < 2 {
            continue;
        }
        let x = |k: usize| f.get(vs[k]) as usize;
        let gap = |k: usize| vs[k + 1] - vs[k];
        let items = [
            x(0) >= x(1) && x(t - 1) >= x(t - 2),
            vs[0] <= x(0) && n - 1 - vs[t - 1] <= x(t - 1),
            (0..t - 1).all(|k| x(k).max(x(k + 1)) < gap(k) && gap(k) <= x(k) + x(k + 1) + 1),
            gap(0) == x(0) + 1 && gap(t - 2) == x(t - 1) + 1,
        ];
        if let Some(item) = items.iter().position(|ok| !ok) {
            return Err(format!("(c) {g} {f}: item {} fails", item + 1));
        }
        seen += 1;
    }
    Ok(seen)
}

/// (d) Some optimal `p_b` broadcast on `P_n` is 0/1-valued with consecutive
/// broadcast vertices 3, 4 or 5 apart.
pub fn flat_packing_exists(g: &Graph) -> LemmaResult {
    let list = witnesses(g, Parameter::LowerBroadcastPacking, true)?;
    let flat = |f: &Broadcast| {
        let vs = f.broadcast_vertices();
        vs.iter().all(|&v| f.get(v) == 1) && vs.windows(2).all(|w| (3..=5).contains(&(w[1] - w[0])))
    };
    if list.iter().any(flat) {
        Ok(list.len())
    } else {
        Err(format!("(d) {g}: no flat optimal p_b broadcast among {}", list.len()))
    }
}

/// (e) Some optimal `i_b` broadcast on `P_n` uses only the value 1.
pub fn unit_independence_exists(g: &Graph) -> LemmaResult {
    let list = witnesses(g, Parameter::LowerBroadcastIndependence, true)?;
    if list.iter().any(|f| f.values().iter().all(|&x| x <= 1)) {
        Ok(list.len())
    } else {
        Err(format!("(e) {g}: no 0/1 optimal i_b broadcast among {}", list.len()))
    }
}

/// The checks that apply to one member of a family, labelled `a`..`e`.
pub fn suite(family: Family, g: &Graph) -> Vec<(char, LemmaResult)> {
    match family {
        Family::Cycle => vec![('a', isolated_holes(g))],
        Family::Path => {
            let mut out = vec![('b', maximal_irredundant_coverage(g))];
            if g.order() >= 3 {
                out.push(('c', lower_independence_shape(g)));
            }
            out.push(('d', flat_packing_exists(g)));
            out.push(('e', unit_independence_exists(g)));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path};

    #[test]
    fn small_instances() {
        assert_eq!(isolated_holes(&make_cycle(5).unwrap()), Ok(15));
        assert!(maximal_irredundant_coverage(&make_path(6).unwrap()).is_ok());
        assert!(lower_independence_shape(&make_path(7).unwrap()).is_ok());
        assert!(flat_packing_exists(&make_path(8).unwrap()).is_ok());
        assert!(unit_independence_exists(&make_path(2).unwrap()).is_ok());
        assert_eq!(suite(Family::Path, &make_path(2).unwrap()).len(), 3);
    }
}
