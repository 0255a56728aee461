//! Closed-form values of the eight broadcast parameters on paths and cycles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphFamily};
use crate::solver::Parameter;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{family} order must be at least {min}, got {n}")]
    BelowGuard { family: Family, n: usize, min: usize },
    #[error("no closed form for the classical parameter {0}")]
    Unsupported(Parameter),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
}

impl Family {
    /// Smallest order for which the family is defined.
    pub fn min_order(self) -> usize {
        match self {
            Family::Path => 2,
            Family::Cycle => 3,
        }
    }

    pub fn of(g: &Graph) -> Option<Family> {
        match g.family() {
            GraphFamily::Path => Some(Family::Path),
            GraphFamily::Cycle => Some(Family::Cycle),
            _ => None,
        }
    }

    pub fn make(self, n: usize) -> Result<Graph, crate::graph::GraphError> {
        match self {
            Family::Path => crate::graph::make_path(n),
            Family::Cycle => crate::graph::make_cycle(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
        })
    }
}

impl FromStr for Family {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            _ => Err(FormulaError::UnknownFamily(s.to_string())),
        }
    }
}

/// Lower broadcast packing number, shared by paths and cycles.
fn lower_packing(n: u32) -> u32 {
    match n % 8 {
        0 => n / 4,
        1..=3 => 2 * (n / 8) + 1,
        _ => 2 * (n / 8) + 2,
    }
}

/// `⌈2n/5⌉`, except that `P_3` and `C_3` have lower broadcast independence
/// number 1 (a single centre vertex).
fn lower_independence(n: u32) -> u32 {
    if n == 3 {
        1
    } else {
        (2 * n).div_ceil(5)
    }
}

pub fn formula_value(family: Family, parameter: Parameter, n: usize) -> Result<u32, FormulaError> {
    if parameter.is_classical() {
        return Err(FormulaError::Unsupported(parameter));
    }
    if n < family.min_order() {
        return Err(FormulaError::BelowGuard { family, n, min: family.min_order() });
    }
    let n = n as u32;
    use Parameter as P;
    let value = match (family, parameter) {
        (_, P::BroadcastDomination | P::BroadcastIrredundance) => n.div_ceil(3),
        (_, P::LowerBroadcastIndependence) => lower_independence(n),
        (_, P::LowerBroadcastPacking) => lower_packing(n),
        (Family::Path, P::UpperBroadcastDomination | P::UpperBroadcastIrredundance) => n - 1,
        (Family::Cycle, P::UpperBroadcastDomination | P::UpperBroadcastIrredundance | P::BroadcastIndependence) => {
            if n == 3 {
                1
            } else {
                2 * (n / 2 - 1)
            }
        }
        (Family::Path, P::BroadcastIndependence) => {
            if n == 2 {
                1
            } else {
                2 * (n - 2)
            }
        }
        (Family::Path, P::BroadcastPacking) => n - 1,
        (Family::Cycle, P::BroadcastPacking) => n / 2,
        _ => unreachable!("classical parameters rejected above"),
    };
    Ok(value)
}

/// Formula value for a path or cycle graph; `None` for other graphs,
/// classical parameters, or orders below the guard.
pub fn formula_for_graph(g: &Graph, parameter: Parameter) -> Option<u32> {
    formula_value(Family::of(g)?, parameter, g.order()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parameter as P;

    #[test]
    fn examples() {
        assert_eq!(formula_value(Family::Path, P::LowerBroadcastIndependence, 7), Ok(3));
        assert_eq!(formula_value(Family::Cycle, P::LowerBroadcastPacking, 12), Ok(4));
        assert_eq!(formula_value(Family::Cycle, P::BroadcastIndependence, 5), Ok(2));
        assert_eq!(formula_value(Family::Cycle, P::UpperBroadcastDomination, 3), Ok(1));
        assert_eq!(formula_value(Family::Path, P::LowerBroadcastIndependence, 3), Ok(1));
        assert_eq!(formula_value(Family::Path, P::BroadcastPacking, 2), Ok(1));
        assert_eq!(formula_value(Family::Path, P::BroadcastIndependence, 2), Ok(1));
        assert_eq!(formula_value(Family::Path, P::BroadcastIndependence, 6), Ok(8));
        assert_eq!(formula_value(Family::Cycle, P::BroadcastIndependence, 4), Ok(2));
        assert_eq!(formula_value(Family::Cycle, P::BroadcastPacking, 9), Ok(4));
    }

    #[test]
    fn guards_and_unsupported() {
        assert_eq!(
            formula_value(Family::Path, P::BroadcastDomination, 1),
            Err(FormulaError::BelowGuard { family: Family::Path, n: 1, min: 2 })
        );
        assert!(formula_value(Family::Cycle, P::BroadcastDomination, 2).is_err());
        assert_eq!(formula_value(Family::Path, P::Domination, 5), Err(FormulaError::Unsupported(P::Domination)));
        assert!("tree".parse::<Family>().is_err());
    }

    #[test]
    fn cycle_row_at_three_is_all_ones() {
        for &p in Parameter::broadcast() {
            assert_eq!(formula_value(Family::Cycle, p, 3), Ok(1), "{p}");
        }
    }

    #[test]
    fn lower_packing_cases() {
        let expected = [(2, 1), (3, 1), (4, 2), (5, 2), (7, 2), (8, 2), (9, 3), (11, 3), (12, 4), (13, 4), (16, 4), (24, 6)];
        for (n, v) in expected {
            assert_eq!(lower_packing(n), v, "n = {n}");
        }
    }

    #[test]
    fn radius_gap_grows_on_cycles() {
        for n in [8usize, 16, 24] {
            let rad = (n / 2) as u32;
            let pb = formula_value(Family::Cycle, P::LowerBroadcastPacking, n).unwrap();
            assert_eq!(rad - pb, (n / 4) as u32);
        }
    }

    #[test]
    fn family_identities() {
        for n in 3..=300 {
            let both = |p| (formula_value(Family::Path, p, n).unwrap(), formula_value(Family::Cycle, p, n).unwrap());
            for p in [P::BroadcastDomination, P::LowerBroadcastIndependence, P::LowerBroadcastPacking] {
                let (a, b) = both(p);
                assert_eq!(a, b);
            }
            for f in [Family::Path, Family::Cycle] {
                assert_eq!(
                    formula_value(f, P::UpperBroadcastDomination, n),
                    formula_value(f, P::UpperBroadcastIrredundance, n)
                );
                assert_eq!(formula_value(f, P::BroadcastDomination, n), formula_value(f, P::BroadcastIrredundance, n));
            }
        }
    }
}
