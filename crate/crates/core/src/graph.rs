//! Small simple connected graphs with eagerly computed metric data.
//!
//! Vertices are indexed `0..n`. For paths, vertex `i` is the `(i+1)`-th
//! vertex from the left end; for cycles, vertex `i` is the `i`-th vertex in
//! cyclic order starting at 0.

use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("graph is not connected (vertex {0} unreachable from vertex 0)")]
    Disconnected(Vertex),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Where a graph came from. Only used for display and formula lookups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GraphFamily {
    Path,
    Cycle,
    MynhardtRoux(usize),
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    size: usize,
    adjacency: Vec<Vec<Vertex>>,
    dist: Vec<Vec<u32>>,
    ecc: Vec<u32>,
    diameter: u32,
    radius: u32,
    min_degree: usize,
    family: GraphFamily,
}

impl Graph {
    fn from_adjacency(adjacency: Vec<Vec<Vertex>>, family: GraphFamily) -> Result<Self, GraphError> {
        let order = adjacency.len();
        if order == 0 {
            return Err(GraphError::Domain("graph must have at least one vertex".into()));
        }
        let dist = all_pairs_bfs(&adjacency);
        if let Some(v) = dist[0].iter().position(|&d| d == u32::MAX) {
            return Err(GraphError::Disconnected(v));
        }
        let ecc: Vec<u32> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
        let size = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            order,
            size,
            diameter: *ecc.iter().max().unwrap(),
            radius: *ecc.iter().min().unwrap(),
            min_degree: adjacency.iter().map(Vec::len).min().unwrap(),
            adjacency,
            dist,
            ecc,
            family,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adjacency
    }

    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u][v]
    }

    pub fn distances(&self) -> &[Vec<u32>] {
        &self.dist
    }

    #[inline]
    pub fn ecc(&self, v: Vertex) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.dist[u][v] == 1
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GraphFamily::Path => write!(f, "path:{}", self.order),
            GraphFamily::Cycle => write!(f, "cycle:{}", self.order),
            GraphFamily::MynhardtRoux(r) => write!(f, "mr:{r}"),
            GraphFamily::Custom => write!(f, "custom(n={}, m={})", self.order, self.size),
        }
    }
}

/// Breadth-first search from every vertex. Unreachable entries are `u32::MAX`.
pub fn all_pairs_bfs(adjacency: &[Vec<Vertex>]) -> Vec<Vec<u32>> {
    let n = adjacency.len();
    let mut dist = vec![vec![u32::MAX; n]; n];
    let mut queue = VecDeque::with_capacity(n);
    for (s, row) in dist.iter_mut().enumerate() {
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// The path `P_n`, `n >= 2`.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::Domain(format!("path order must be at least 2, got {n}")));
    }
    let adjacency = (0..n)
        .map(|i| {
            let mut nb = Vec::with_capacity(2);
            if i > 0 {
                nb.push(i - 1);
            }
            if i + 1 < n {
                nb.push(i + 1);
            }
            nb
        })
        .collect();
    Graph::from_adjacency(adjacency, GraphFamily::Path)
}

/// The cycle `C_n`, `n >= 3`.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Domain(format!("cycle order must be at least 3, got {n}")));
    }
    let adjacency = (0..n)
        .map(|i| {
            let mut nb = vec![(i + n - 1) % n, (i + 1) % n];
            nb.sort_unstable();
            nb
        })
        .collect();
    Graph::from_adjacency(adjacency, GraphFamily::Cycle)
}

/// Two copies of `K_{r+1}` joined by `r` independent edges.
///
/// Block A is `0..=r`, block B is `r+1..=2r+1`; vertex `i < r` of A is
/// matched with `r + 1 + i`. Vertices `r` and `2r + 1` are unmatched.
pub fn make_mynhardt_roux(r: usize) -> Result<Graph, GraphError> {
    if r < 3 {
        return Err(GraphError::Domain(format!("Mynhardt-Roux parameter must be at least 3, got {r}")));
    }
    let k = r + 1;
    let mut edges = Vec::with_capacity(k * r + r);
    for block in [0, k] {
        for a in 0..k {
            for b in a + 1..k {
                edges.push((block + a, block + b));
            }
        }
    }
    edges.extend((0..r).map(|i| (i, k + i)));
    let mut g = make_from_edges(2 * k, &edges)?;
    g.family = GraphFamily::MynhardtRoux(r);
    Ok(g)
}

/// Builds a simple connected graph from an edge list.
pub fn make_from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(GraphError::Format(format!("edge ({u}, {v}) out of range for order {n}")));
        }
        if u == v {
            return Err(GraphError::Format(format!("loop at vertex {u}")));
        }
        if adjacency[u].contains(&v) {
            return Err(GraphError::Format(format!("duplicate edge ({u}, {v})")));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for nb in &mut adjacency {
        nb.sort_unstable();
    }
    Graph::from_adjacency(adjacency, GraphFamily::Custom)
}

/// Parses the edge-list text format: first line `n`, then one `u v` pair per
/// line. `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, first) = lines
        .next()
        .ok_or_else(|| GraphError::Format("missing vertex count".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| GraphError::Format(format!("bad vertex count {first:?}")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(GraphError::Format(format!("line {lineno}: expected `u v`, got {line:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| GraphError::Format(format!("line {lineno}: bad vertex {s:?}")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    make_from_edges(n, &edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| GraphError::Io(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_metric_consistent(g: &Graph) {
        let recomputed = all_pairs_bfs(g.adjacency());
        assert_eq!(recomputed, g.distances());
        let n = g.order();
        for u in 0..n {
            assert_eq!(g.dist(u, u), 0);
            for v in 0..n {
                assert_eq!(g.dist(u, v), g.dist(v, u));
                for w in 0..n {
                    assert!(g.dist(u, w) <= g.dist(u, v) + g.dist(v, w));
                }
            }
            assert_eq!(g.ecc(u), (0..n).map(|v| g.dist(u, v)).max().unwrap());
        }
        assert_eq!(g.diameter(), *g.eccentricities().iter().max().unwrap());
        assert_eq!(g.radius(), *g.eccentricities().iter().min().unwrap());
    }

    #[test]
    fn path_examples() {
        let p9 = make_path(9).unwrap();
        assert_eq!(p9.diameter(), 8);
        assert_eq!(p9.ecc(0), 8);
        assert_eq!(p9.ecc(4), 4);
        assert_eq!(make_path(2).unwrap().radius(), 1);
        assert!(matches!(make_path(1), Err(GraphError::Domain(_))));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(make_cycle(7).unwrap().dist(0, 5), 2);
        assert_eq!(make_cycle(4).unwrap().diameter(), 2);
        let c3 = make_cycle(3).unwrap();
        assert!(c3.eccentricities().iter().all(|&e| e == 1));
        assert!(matches!(make_cycle(2), Err(GraphError::Domain(_))));
    }

    #[test]
    fn closed_forms_up_to_500() {
        for n in 2..=500 {
            let p = make_path(n).unwrap();
            assert_eq!(p.diameter() as usize, n - 1);
            assert_eq!(p.size(), n - 1);
            for i in [0, n / 3, n / 2, n - 1] {
                assert_eq!(p.ecc(i) as usize, i.max(n - 1 - i));
                for j in [0, n / 2, n - 1] {
                    assert_eq!(p.dist(i, j) as usize, i.abs_diff(j));
                }
            }
        }
        for n in 3..=500 {
            let c = make_cycle(n).unwrap();
            assert_eq!(c.diameter() as usize, n / 2);
            assert_eq!(c.radius() as usize, n / 2);
            assert_eq!(c.min_degree(), 2);
            for i in [0, n / 3, n - 1] {
                for j in [0, n / 2, n - 1] {
                    let d = i.abs_diff(j);
                    assert_eq!(c.dist(i, j) as usize, d.min(n - d));
                }
            }
        }
    }

    #[test]
    fn metrics_match_bfs() {
        for n in 2..=12 {
            assert_metric_consistent(&make_path(n).unwrap());
        }
        for n in 3..=12 {
            assert_metric_consistent(&make_cycle(n).unwrap());
        }
        for r in 3..=8 {
            assert_metric_consistent(&make_mynhardt_roux(r).unwrap());
        }
    }

    #[test]
    fn mynhardt_roux_shape() {
        let g3 = make_mynhardt_roux(3).unwrap();
        assert_eq!(g3.order(), 8);
        assert_eq!(g3.diameter(), 3);
        assert_eq!(make_mynhardt_roux(4).unwrap().size(), 24);
        for r in 3..=8 {
            let g = make_mynhardt_roux(r).unwrap();
            assert_eq!(g.order(), 2 * (r + 1));
            assert_eq!(g.min_degree(), r);
            assert_eq!(g.diameter(), 3);
            assert_eq!(g.size(), r * (r + 1) + r);
            let unmatched: Vec<_> = g.vertices().filter(|&v| g.neighbors(v).len() == r).collect();
            assert_eq!(unmatched, vec![r, 2 * r + 1]);
        }
        assert!(make_mynhardt_roux(2).is_err());
    }

    #[test]
    fn from_edges() {
        let p3 = make_from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.distances(), make_path(3).unwrap().distances());
        let c4 = make_from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let reference = make_cycle(4).unwrap();
        assert_eq!(c4.distances(), reference.distances());
        assert_eq!(c4.adjacency(), reference.adjacency());
        assert_eq!(make_from_edges(4, &[(0, 1), (2, 3)]), Err(GraphError::Disconnected(2)));
        assert!(matches!(make_from_edges(3, &[(0, 1), (1, 0)]), Err(GraphError::Format(_))));
        assert!(matches!(make_from_edges(3, &[(1, 1)]), Err(GraphError::Format(_))));
        assert!(matches!(make_from_edges(3, &[(0, 3)]), Err(GraphError::Format(_))));
    }

    #[test]
    fn edge_list_text() {
        let g = parse_edge_list("# star K_{1,3}\n4\n0 1\n0 2  # spoke\n\n0 3\n").unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(g.radius(), 1);
        assert!(matches!(parse_edge_list(""), Err(GraphError::Format(_))));
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(GraphError::Format(_))));
        assert!(matches!(parse_edge_list("x\n"), Err(GraphError::Format(_))));
    }
}
