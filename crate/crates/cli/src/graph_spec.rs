use std::path::PathBuf;
use std::str::FromStr;

use broadcasts::graph::{make_cycle, make_mynhardt_roux, make_path, read_edge_list};
use broadcasts::{Graph, GraphError};

/// `path:N`, `cycle:N`, `mr:R` or `file:PATH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    MynhardtRoux(usize),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s.split_once(':').ok_or_else(|| format!("expected KIND:ARG, got {s:?}"))?;
        let number = || arg.parse::<usize>().map_err(|_| format!("bad order {arg:?} in {s:?}"));
        match kind {
            "path" => Ok(GraphSpec::Path(number()?)),
            "cycle" => Ok(GraphSpec::Cycle(number()?)),
            "mr" => Ok(GraphSpec::MynhardtRoux(number()?)),
            "file" if !arg.is_empty() => Ok(GraphSpec::File(PathBuf::from(arg))),
            _ => Err(format!("unknown graph {s:?}; use path:N, cycle:N, mr:R or file:PATH")),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            GraphSpec::Path(n) => make_path(*n),
            GraphSpec::Cycle(n) => make_cycle(*n),
            GraphSpec::MynhardtRoux(r) => make_mynhardt_roux(*r),
            GraphSpec::File(p) => read_edge_list(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("path:5".parse(), Ok(GraphSpec::Path(5)));
        assert_eq!("mr:4".parse(), Ok(GraphSpec::MynhardtRoux(4)));
        assert_eq!("file:g.txt".parse(), Ok(GraphSpec::File("g.txt".into())));
        for bad in ["path", "path:x", "tree:4", "file:", "cycle:-3"] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
        assert!("cycle:2".parse::<GraphSpec>().unwrap().build().is_err());
    }
}
