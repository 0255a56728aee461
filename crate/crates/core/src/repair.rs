//! Cost-preserving rewrites that turn optimal non-dominating broadcasts on
//! paths and cycles into dominating ones.
//!
//! Every rewrite is re-certified after it is applied. A rewrite that breaks
//! its postcondition is reported as a consistency error, never returned.

use serde::Serialize;
use thiserror::Error;

use crate::broadcast::{hear_counts, kind_holds, maximal_unchecked, validate, Broadcast, Cap, Kind};
use crate::formulas::{formula_value, Family};
use crate::graph::{Graph, Vertex};
use crate::solver::Parameter;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepairError {
    /// The input does not meet the operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A rewrite failed its own certification.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairStep {
    pub description: String,
    pub before: Broadcast,
    pub after: Broadcast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairTrace {
    pub steps: Vec<RepairStep>,
    #[serde(rename = "final")]
    pub result: Broadcast,
}

fn domain(msg: impl Into<String>) -> RepairError {
    RepairError::Domain(msg.into())
}

fn undominated_of(g: &Graph, values: &[u32]) -> Vec<Vertex> {
    let counts = hear_counts(g, values);
    g.vertices().filter(|&u| counts[u] == 0).collect()
}

fn hearers_of(g: &Graph, values: &[u32], u: Vertex) -> Vec<Vertex> {
    g.vertices().filter(|&v| values[v] > 0 && g.dist(u, v) <= values[v]).collect()
}

fn is_maximal_irredundant(g: &Graph, values: &[u32]) -> bool {
    kind_holds(g, values, Kind::Irredundant) && maximal_unchecked(g, values, Kind::Irredundant, Cap::Eccentricity)
}

fn require_family(g: &Graph, family: Family, f: &Broadcast) -> Result<(), RepairError> {
    if Family::of(g) != Some(family) {
        return Err(domain(format!("expected a {family}, got {g}")));
    }
    match validate(g, f) {
        Ok(true) => Ok(()),
        Ok(false) => Err(domain(format!("{f} exceeds an eccentricity on {g}"))),
        Err(e) => Err(domain(e.to_string())),
    }
}

/// Shifts dominators on `C_n` toward undominated vertices until every
/// vertex is dominated.
///
/// `f` must be irredundant with cost `IR_b(C_n)`. Each step moves the
/// dominator `x_j` of a neighbour of an undominated `x_i` one position
/// toward `x_i`: `g(x_j) = 0` and `g(x_{j±1}) = f(x_j)`. The final
/// broadcast is dominating and irredundant, hence minimal dominating.
pub fn repair_irredundant_cycle(g: &Graph, f: &Broadcast) -> Result<RepairTrace, RepairError> {
    require_family(g, Family::Cycle, f)?;
    let n = g.order();
    let target = formula_value(Family::Cycle, Parameter::UpperBroadcastIrredundance, n).expect("cycle order in guard");
    if !kind_holds(g, f.values(), Kind::Irredundant) {
        return Err(domain(format!("{f} is not irredundant")));
    }
    if f.cost() != target {
        return Err(domain(format!("cost {} differs from IR_b(C_{n}) = {target}", f.cost())));
    }

    let mut steps = Vec::new();
    let mut current = f.values().to_vec();
    loop {
        let holes = undominated_of(g, &current);
        let Some(&i) = holes.first() else { break };
        let next = cycle_shift(g, &current, i, holes.len())
            .ok_or_else(|| RepairError::Consistency(format!("no certified shift toward x_{i} in {}", Broadcast::new(current.clone()))))?;
        steps.push(RepairStep { description: next.1, before: Broadcast::new(current), after: Broadcast::new(next.0.clone()) });
        current = next.0;
        if steps.len() > n {
            return Err(RepairError::Consistency("repair did not terminate within n steps".into()));
        }
    }

    let result = Broadcast::new(current);
    if !kind_holds(g, result.values(), Kind::Dominating) || !kind_holds(g, result.values(), Kind::Irredundant) {
        return Err(RepairError::Consistency(format!("{result} is not minimal dominating")));
    }
    Ok(RepairTrace { steps, result })
}

// One certified shift toward the undominated vertex `i`, trying the left
// neighbour's dominators before the right neighbour's.
fn cycle_shift(g: &Graph, values: &[u32], i: Vertex, holes: usize) -> Option<(Vec<u32>, String)> {
    let n = g.order();
    let cost: u32 = values.iter().sum();
    let dominated_before: Vec<bool> = hear_counts(g, values).iter().map(|&c| c > 0).collect();
    for (side, a) in [("left", (i + n - 1) % n), ("right", (i + 1) % n)] {
        for j in hearers_of(g, values, a) {
            if values[j] != g.dist(j, a) {
                continue;
            }
            let Some(&step) = g.neighbors(j).iter().find(|&&w| g.dist(w, i) + 1 == g.dist(j, i)) else {
                continue;
            };
            let mut w = values.to_vec();
            w[step] = values[j];
            w[j] = 0;
            let counts = hear_counts(g, &w);
            let certified = w.iter().sum::<u32>() == cost
                && kind_holds(g, &w, Kind::Irredundant)
                && counts.iter().filter(|&&c| c == 0).count() < holes
                && (0..n).all(|u| !dominated_before[u] || counts[u] > 0);
            if certified {
                let text = format!("x_{i} undominated; shift x_{j} (value {}) to x_{step} via {side} neighbour x_{a}", values[j]);
                return Some((w, text));
            }
        }
    }
    None
}

fn require_ir_b_path(g: &Graph, f: &Broadcast) -> Result<(), RepairError> {
    require_family(g, Family::Path, f)?;
    let n = g.order();
    let target = formula_value(Family::Path, Parameter::BroadcastIrredundance, n).expect("path order in guard");
    if f.cost() != target {
        return Err(domain(format!("cost {} differs from ir_b(P_{n}) = {target}", f.cost())));
    }
    if !is_maximal_irredundant(g, f.values()) {
        return Err(domain(format!("{f} is not maximal irredundant")));
    }
    Ok(())
}

/// Makes both endpoints of `P_n` dominated.
///
/// `f` must be maximal irredundant with cost `ir_b(P_n)`. If `x_1` is
/// undominated, a dominator `x_i` of `x_2` is moved to `x_{i-1}`; the same
/// is then done, mirrored, for `x_n`.
pub fn endpoint_repair_path(g: &Graph, f: &Broadcast) -> Result<Broadcast, RepairError> {
    require_ir_b_path(g, f)?;
    let n = g.order();
    let mut current = f.values().to_vec();
    current = shift_toward_start(g, &current, "x_1")?;
    current.reverse();
    current = shift_toward_start(g, &current, "x_n")?;
    current.reverse();
    let counts = hear_counts(g, &current);
    if counts[0] == 0 || counts[n - 1] == 0 {
        return Err(RepairError::Consistency(format!("endpoint still undominated in {}", Broadcast::new(current))));
    }
    Ok(Broadcast::new(current))
}

fn shift_toward_start(g: &Graph, values: &[u32], label: &str) -> Result<Vec<u32>, RepairError> {
    if hear_counts(g, values)[0] > 0 {
        return Ok(values.to_vec());
    }
    let cost: u32 = values.iter().sum();
    for i in hearers_of(g, values, 1) {
        if i < 2 || values[i] as usize != i - 1 {
            continue;
        }
        let mut h = values.to_vec();
        h[i - 1] = values[i];
        h[i] = 0;
        if h.iter().sum::<u32>() == cost && hear_counts(g, &h)[0] > 0 && is_maximal_irredundant(g, &h) {
            return Ok(h);
        }
    }
    Err(RepairError::Consistency(format!("no certified endpoint shift for {label} in {}", Broadcast::new(values.to_vec()))))
}

/// Rewrites a maximal irredundant broadcast of cost `ir_b(P_n)` with
/// dominated `x_1, x_2, x_{n-1}, x_n` into a dominating one.
///
/// With `x_i` the leftmost undominated vertex, `x_j` the dominator of
/// `x_{i-1}`, `x_{j'}` the nearest broadcast vertex left of `x_j` and
/// `x_{j'^p}` its left bordering private neighbour, each step sets
/// `g(x_j) = 0`, moves `x_{j'}` to `x_{j'^p+1}` with value 1 when they
/// differ, and places `f(x_j)` on `x_{j+1}` if `x_{i+1}` is dominated or on
/// `x_{j+2}` otherwise.
pub fn repair_irredundant_path(g: &Graph, f: &Broadcast) -> Result<RepairTrace, RepairError> {
    require_ir_b_path(g, f)?;
    let n = g.order();
    let counts = hear_counts(g, f.values());
    if let Some(&v) = [0, 1, n - 2, n - 1].iter().find(|&&v| counts[v] == 0) {
        return Err(domain(format!("x_{} is undominated; run the endpoint repair first", v + 1)));
    }

    let mut steps = Vec::new();
    let mut current = f.values().to_vec();
    loop {
        let holes = undominated_of(g, &current);
        let Some(&i) = holes.first() else { break };
        let (next, description) = path_step(g, &current, i, holes.len())?;
        steps.push(RepairStep { description, before: Broadcast::new(current), after: Broadcast::new(next.clone()) });
        current = next;
        if steps.len() > n {
            return Err(RepairError::Consistency("repair did not terminate within n steps".into()));
        }
    }
    let result = Broadcast::new(current);
    if !kind_holds(g, result.values(), Kind::Dominating) {
        return Err(RepairError::Consistency(format!("{result} is not dominating")));
    }
    Ok(RepairTrace { steps, result })
}

// Vertex names in messages are 1-based to match the x_1..x_n convention.
fn path_step(g: &Graph, f: &[u32], i: Vertex, holes: usize) -> Result<(Vec<u32>, String), RepairError> {
    let n = g.order();
    let shown = |w: &[u32]| Broadcast::new(w.to_vec()).to_string();
    let dominators = hearers_of(g, f, i - 1);
    let &[j] = dominators.as_slice() else {
        return Err(domain(format!("x_{} has {} dominators in {}", i, dominators.len(), shown(f))));
    };
    let Some(jl) = (0..j).rev().find(|&k| f[k] > 0) else {
        return Err(domain(format!("dominator x_{} of x_{} is the leftmost broadcast vertex in {}", j + 1, i, shown(f))));
    };
    let left_border = left_private_border(g, f, jl);
    let Some(jp) = left_border else {
        return Err(domain(format!("x_{} has no left bordering private neighbour in {}", jl + 1, shown(f))));
    };

    let mut w = f.to_vec();
    let value = f[j];
    w[j] = 0;
    let mut case = if jl == jp + 1 { 'a' } else { 'c' };
    if jl != jp + 1 {
        w[jl] = 0;
        w[jp + 1] = 1;
    }
    let next_dominated = hear_counts(g, f)[i + 1] > 0;
    let target = if next_dominated { j + 1 } else { j + 2 };
    if !next_dominated {
        case = if case == 'a' { 'b' } else { 'd' };
    }
    if target >= n {
        return Err(RepairError::Consistency(format!("placement x_{} falls off the path in {}", target + 1, shown(f))));
    }
    w[target] = value;

    let before: u32 = f.iter().sum();
    let after: u32 = w.iter().sum();
    if after != before {
        return Err(RepairError::Consistency(format!("case ({case}) changed cost {before} -> {after} on {}", shown(f))));
    }
    let remaining = undominated_of(g, &w).len();
    if remaining >= holes {
        return Err(RepairError::Consistency(format!("case ({case}) made no progress on {}", shown(f))));
    }
    if !is_maximal_irredundant(g, &w) {
        return Err(RepairError::Consistency(format!("case ({case}) result {} is not maximal irredundant", shown(&w))));
    }
    let description = format!(
        "case ({case}): x_{i} undominated; x_{} -> 0, x_{} gets {value}{}",
        j + 1,
        target + 1,
        if jl != jp + 1 { format!(", x_{} -> 0, x_{} gets 1", jl + 1, jp + 2) } else { String::new() }
    );
    Ok((w, description))
}

// The bordering private neighbour of `v` strictly to its left, if any.
fn left_private_border(g: &Graph, f: &[u32], v: Vertex) -> Option<Vertex> {
    let counts = hear_counts(g, f);
    let u = v.checked_sub(f[v] as usize)?;
    (u < v && counts[u] == 1).then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path};

    fn b(s: &str) -> Broadcast {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_example_repairs_in_one_step() {
        let g = make_cycle(9).unwrap();
        let trace = repair_irredundant_cycle(&g, &b("330000000")).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.result, b("303000000"));
        assert!(crate::broadcast::is_minimal(&g, &trace.result, Kind::Dominating, Cap::Eccentricity).unwrap());
        assert_eq!(trace.result.cost(), 6);
    }

    #[test]
    fn cycle_preconditions() {
        let g = make_cycle(6).unwrap();
        assert!(matches!(repair_irredundant_cycle(&g, &b("110000")), Err(RepairError::Domain(_))));
        let p = make_path(6).unwrap();
        assert!(matches!(repair_irredundant_cycle(&p, &b("110000")), Err(RepairError::Domain(_))));
        let dominating = b("002200");
        let trace = repair_irredundant_cycle(&g, &dominating).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.result, dominating);
    }

    #[test]
    fn endpoint_repair() {
        let g = make_path(7).unwrap();
        let dominated = b("0100101");
        assert_eq!(endpoint_repair_path(&g, &dominated).unwrap(), dominated);
        assert!(matches!(endpoint_repair_path(&g, &b("3000003")), Err(RepairError::Domain(_))));
    }

    #[test]
    fn path_case_b_step() {
        let g = make_path(10).unwrap();
        let f = b("0110000110");
        assert_eq!(endpoint_repair_path(&g, &f).unwrap(), f);
        let trace = repair_irredundant_path(&g, &f).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert!(trace.steps[0].description.starts_with("case (b)"));
        assert_eq!(trace.result, b("0100100110"));
        let again = repair_irredundant_path(&g, &trace.result).unwrap();
        assert!(again.steps.is_empty());
    }

    #[test]
    fn endpoint_shift_then_path_repair() {
        let g = make_path(7).unwrap();
        let h = endpoint_repair_path(&g, &b("1002000")).unwrap();
        assert_eq!(h, b("1000200"));
        assert!(repair_irredundant_path(&g, &b("1002000")).is_err());
    }

    #[test]
    fn path_dominating_input_is_a_fixed_point() {
        let g = make_path(7).unwrap();
        let f = b("0100101");
        let trace = repair_irredundant_path(&g, &f).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.result, f);
    }
}
