//! Explicit optimal witnesses on paths and cycles.
//!
//! Path words are read from `x_1` and cycle words from `x_0`; both land on
//! vertex index 0 first.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::broadcast::{border_nonempty, hear_counts, kind_holds_with, maximal_unchecked, Broadcast, Kind};
use crate::formulas::{formula_value, Family, FormulaError};
use crate::graph::Graph;
use crate::solver::{Extremality, Parameter};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Domain(#[from] FormulaError),
    #[error("internal consistency error: {family} {parameter} n={n}: {reason}")]
    Consistency { family: Family, parameter: Parameter, n: usize, reason: String },
}

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    /// `(01010)^q` followed by the suffix for `n mod 5`.
    IndependenceWord(u8),
    /// `(00100100)^q` followed by the suffix for `n mod 8`.
    PackingWord(u8),
    /// A literal word for a small order.
    SmallWord,
    /// Two broadcast vertices of equal value.
    TwoVertex,
    /// One broadcast vertex carrying the whole cost.
    SingleVertex,
    /// A natural witness checked only by certification.
    Plumbing,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::IndependenceWord(r) => write!(f, "f{r}-01010"),
            Pattern::PackingWord(r) => write!(f, "f{r}-00100100"),
            Pattern::SmallWord => f.write_str("small-word"),
            Pattern::TwoVertex => f.write_str("two-vertex"),
            Pattern::SingleVertex => f.write_str("single-vertex"),
            Pattern::Plumbing => f.write_str("plumbing"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecipe {
    pub family: Family,
    pub parameter: Parameter,
    pub n: usize,
    pub pattern: Pattern,
    pub broadcast: Broadcast,
}

const INDEPENDENCE_SUFFIX: [&str; 5] = ["", "1", "10", "101", "0101"];
const PACKING_SUFFIX: [&str; 8] = ["", "1", "10", "100", "1001", "01001", "001001", "0010010"];

fn word(s: &str) -> Vec<u32> {
    s.bytes().map(|b| u32::from(b - b'0')).collect()
}

fn repeated(block: &str, q: usize, suffix: &str) -> Vec<u32> {
    let mut w = word(&block.repeat(q));
    w.extend(word(suffix));
    w
}

fn independence_word(n: usize) -> (Pattern, Vec<u32>) {
    let r = n % 5;
    (Pattern::IndependenceWord(r as u8), repeated("01010", n / 5, INDEPENDENCE_SUFFIX[r]))
}

fn packing_word(n: usize) -> (Pattern, Vec<u32>) {
    let r = n % 8;
    (Pattern::PackingWord(r as u8), repeated("00100100", n / 8, PACKING_SUFFIX[r]))
}

/// Ones at indices `1, 4, 7, ...`, plus the last vertex when `n ≡ 1 (mod 3)`.
fn spaced_ones(n: usize) -> Vec<u32> {
    let mut w = vec![0; n];
    for v in (1..n).step_by(3) {
        w[v] = 1;
    }
    if n % 3 == 1 {
        w[n - 1] = 1;
    }
    w
}

fn at(n: usize, entries: &[(usize, u32)]) -> Vec<u32> {
    let mut w = vec![0; n];
    for &(v, x) in entries {
        w[v] = x;
    }
    w
}

fn recipe(family: Family, parameter: Parameter, n: usize) -> (Pattern, Vec<u32>) {
    use Family::{Cycle, Path};
    use Parameter as P;
    let half = n / 2;
    let small = |s: &str| (Pattern::SmallWord, word(s));
    match (family, parameter) {
        (_, P::LowerBroadcastIndependence) => match (family, n) {
            (Path, 2) => small("10"),
            (_, 3) => small("010"),
            (_, 4) => small("0101"),
            _ => independence_word(n),
        },
        (Path, P::LowerBroadcastPacking) if n <= 8 => small(["10", "010", "1001", "01001", "001001", "0010010", "00100100"][n - 2]),
        (Cycle, P::LowerBroadcastPacking) if n <= 6 => small(["010", "2000", "20000", "001001"][n - 3]),
        (_, P::LowerBroadcastPacking) => packing_word(n),
        (Cycle, P::UpperBroadcastDomination | P::UpperBroadcastIrredundance | P::BroadcastIndependence) if n == 3 => {
            (Pattern::SingleVertex, word("010"))
        }
        (Cycle, P::UpperBroadcastDomination | P::UpperBroadcastIrredundance) => {
            (Pattern::TwoVertex, at(n, &[(half, half as u32 - 1), (n.div_ceil(2) + 1, half as u32 - 1)]))
        }
        (Cycle, P::BroadcastIndependence) if n == 4 => small("1010"),
        (Cycle, P::BroadcastIndependence) => (Pattern::TwoVertex, at(n, &[(0, half as u32 - 1), (half, half as u32 - 1)])),
        (Path, P::BroadcastIndependence) if n == 2 => small("10"),
        (Path, P::BroadcastIndependence) => (Pattern::Plumbing, at(n, &[(0, n as u32 - 2), (n - 1, n as u32 - 2)])),
        (Path, P::UpperBroadcastDomination | P::UpperBroadcastIrredundance) => {
            (Pattern::Plumbing, at(n, &[(0, n as u32 - 1)]))
        }
        (Path, P::BroadcastPacking) => (Pattern::SingleVertex, at(n, &[(0, n as u32 - 1)])),
        (Cycle, P::BroadcastPacking) => (Pattern::SingleVertex, at(n, &[(0, half as u32)])),
        (Cycle, P::BroadcastIrredundance) if n <= 5 => small(["010", "0200", "00200"][n - 3]),
        (_, P::BroadcastDomination | P::BroadcastIrredundance) => (Pattern::Plumbing, spaced_ones(n)),
        _ => unreachable!("classical parameters have no recipe"),
    }
}

/// Checks kind, extremality and cost of a witness for `parameter` on `g`.
///
/// Extremality uses polynomial routes only. A dominating irredundant
/// broadcast is minimal dominating, and every minimal dominating broadcast
/// is maximal irredundant. Independence and packing maximality reduce to
/// single increments.
pub fn certify(g: &Graph, f: &Broadcast, parameter: Parameter, expected_cost: u32) -> Result<(), String> {
    let spec = parameter.spec();
    let values = f.values();
    if values.len() != g.order() {
        return Err(format!("length {} on a graph of order {}", values.len(), g.order()));
    }
    if let Some(v) = g.vertices().find(|&v| values[v] > spec.cap.bound(g, v)) {
        return Err(format!("value {} at vertex {v} exceeds its cap", values[v]));
    }
    let counts = hear_counts(g, values);
    if !kind_holds_with(g, values, &counts, spec.kind) {
        return Err(format!("{f} is not {}", spec.kind));
    }
    let minimal_dominating = || {
        kind_holds_with(g, values, &counts, Kind::Dominating)
            && g.vertices().all(|v| values[v] == 0 || border_nonempty(g, values, &counts, v))
    };
    let extremal = match (spec.kind, spec.extremality) {
        (_, Extremality::None) => true,
        (Kind::Dominating, Extremality::Minimal) | (Kind::Irredundant, Extremality::Maximal) => minimal_dominating(),
        (Kind::Independent | Kind::Packing, Extremality::Maximal) => maximal_unchecked(g, values, spec.kind, spec.cap),
        (kind, ext) => return Err(format!("no cheap certificate for {ext:?} {kind}")),
    };
    if !extremal {
        return Err(format!("{f} fails the {:?} check", spec.extremality));
    }
    if f.cost() != expected_cost {
        return Err(format!("cost {} differs from {expected_cost}", f.cost()));
    }
    Ok(())
}

pub fn construct_witness(family: Family, parameter: Parameter, n: usize) -> Result<WitnessRecipe, ConstructionError> {
    let expected = formula_value(family, parameter, n)?;
    let (pattern, values) = recipe(family, parameter, n);
    let broadcast = Broadcast::new(values);
    let consistency = |reason: String| ConstructionError::Consistency { family, parameter, n, reason };
    let g = family.make(n).map_err(|e| consistency(e.to_string()))?;
    certify(&g, &broadcast, parameter, expected).map_err(consistency)?;
    Ok(WitnessRecipe { family, parameter, n, pattern, broadcast })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parameter as P;

    fn text(family: Family, p: Parameter, n: usize) -> String {
        construct_witness(family, p, n).unwrap().broadcast.to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(text(Family::Path, P::LowerBroadcastIndependence, 12), "010100101010");
        assert_eq!(text(Family::Path, P::LowerBroadcastPacking, 13), "0010010001001");
        assert_eq!(text(Family::Cycle, P::UpperBroadcastDomination, 8), "00003300");
        assert_eq!(text(Family::Cycle, P::BroadcastPacking, 9), "400000000");
        assert_eq!(text(Family::Path, P::BroadcastIndependence, 6), "400004");
        assert_eq!(text(Family::Cycle, P::BroadcastIrredundance, 5), "00200");
    }

    #[test]
    fn patterns() {
        let r = construct_witness(Family::Path, P::LowerBroadcastPacking, 13).unwrap();
        assert_eq!(r.pattern, Pattern::PackingWord(5));
        assert_eq!(r.pattern.to_string(), "f5-00100100");
        assert_eq!(construct_witness(Family::Path, P::BroadcastIndependence, 6).unwrap().pattern, Pattern::Plumbing);
        assert_eq!(construct_witness(Family::Cycle, P::LowerBroadcastPacking, 4).unwrap().broadcast.to_string(), "2000");
        assert_eq!(construct_witness(Family::Cycle, P::LowerBroadcastIndependence, 3).unwrap().broadcast.to_string(), "010");
    }

    #[test]
    fn guards() {
        assert!(matches!(
            construct_witness(Family::Path, P::BroadcastDomination, 1),
            Err(ConstructionError::Domain(FormulaError::BelowGuard { .. }))
        ));
        assert!(matches!(
            construct_witness(Family::Cycle, P::Independence, 6),
            Err(ConstructionError::Domain(FormulaError::Unsupported(_)))
        ));
    }

    #[test]
    fn certify_rejects_wrong_witnesses() {
        let g = crate::graph::make_path(6).unwrap();
        let f: Broadcast = "001100".parse().unwrap();
        assert!(certify(&g, &f, P::BroadcastIrredundance, 2).is_err());
        let f: Broadcast = "010010".parse().unwrap();
        assert!(certify(&g, &f, P::BroadcastDomination, 2).is_ok());
        assert!(certify(&g, &f, P::BroadcastDomination, 3).is_err());
    }
}
