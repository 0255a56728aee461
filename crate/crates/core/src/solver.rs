//! Exact optimisation of the sixteen broadcast and vertex-set parameters.
//!
//! The search assigns values to vertices `0, 1, …` in order, trying values in
//! increasing order, so leaves are visited in lexicographic order of their
//! value sequences. Pruning:
//!
//! * irredundance, independence and packing are checked on each prefix
//!   (unassigned vertices count as 0; assigning further values only adds
//!   hearers, so a violation among assigned vertices is final);
//! * minimal dominating broadcasts are irredundant, so the same prefix test
//!   applies to them;
//! * cost bounds: completions never cost less than the prefix, and never more
//!   than the prefix plus the remaining caps. For domination, each
//!   undominated vertex still needs some later vertex to reach it.
//!
//! Extremality filters are evaluated only at leaves. The first vertex's
//! value splits the tree across rayon workers; every branch keeps its own
//! incumbent, so results and node counts do not depend on scheduling.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::broadcast::{self, Broadcast, Cap, Kind};
use crate::graph::Graph;

/// Default budget for both the plain enumerator (box size) and the pruned
/// search (explored nodes).
pub const DEFAULT_LIMIT: u64 = 10_000_000_000;

/// Environment variable overriding [`DEFAULT_LIMIT`].
pub const LIMIT_ENV: &str = "BROADCASTS_NODE_LIMIT";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("search space of {estimate} exceeds the limit of {limit} (set {LIMIT_ENV} to override)")]
    SpaceTooLarge { estimate: u128, limit: u64 },
    #[error("search aborted after exploring more than {limit} nodes (set {LIMIT_ENV} to override)")]
    NodeLimit { limit: u64 },
    #[error("internal error: no broadcast satisfies {0}")]
    Infeasible(ParameterSpec),
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremality {
    None,
    Minimal,
    Maximal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParameterSpec {
    pub kind: Kind,
    pub objective: Objective,
    pub extremality: Extremality,
    pub cap: Cap,
}

impl fmt::Display for ParameterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let filter = match self.extremality {
            Extremality::None => "",
            Extremality::Minimal => "minimal ",
            Extremality::Maximal => "maximal ",
        };
        let objective = match self.objective {
            Objective::Min => "min",
            Objective::Max => "max",
        };
        let cap = match self.cap {
            Cap::Eccentricity => "broadcast",
            Cap::One => "0/1",
        };
        write!(f, "{objective} cost {filter}{} {cap}", self.kind)
    }
}

/// The named parameters. The first eight are broadcast parameters, the last
/// eight their 0/1 (vertex set) counterparts, in the same order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parameter {
    /// γ_b: minimum cost of a dominating broadcast.
    BroadcastDomination,
    /// Γ_b: maximum cost of a minimal dominating broadcast.
    UpperBroadcastDomination,
    /// ir_b: minimum cost of a maximal irredundant broadcast.
    BroadcastIrredundance,
    /// IR_b: maximum cost of an irredundant broadcast.
    UpperBroadcastIrredundance,
    /// i_b: minimum cost of a maximal independent broadcast.
    LowerBroadcastIndependence,
    /// β_b: maximum cost of an independent broadcast.
    BroadcastIndependence,
    /// p_b: minimum cost of a maximal packing broadcast.
    LowerBroadcastPacking,
    /// P_b: maximum cost of a packing broadcast.
    BroadcastPacking,
    Domination,
    UpperDomination,
    Irredundance,
    UpperIrredundance,
    IndependentDomination,
    Independence,
    LowerPacking,
    Packing,
}

impl Parameter {
    pub const ALL: [Parameter; 16] = [
        Parameter::BroadcastDomination,
        Parameter::UpperBroadcastDomination,
        Parameter::BroadcastIrredundance,
        Parameter::UpperBroadcastIrredundance,
        Parameter::LowerBroadcastIndependence,
        Parameter::BroadcastIndependence,
        Parameter::LowerBroadcastPacking,
        Parameter::BroadcastPacking,
        Parameter::Domination,
        Parameter::UpperDomination,
        Parameter::Irredundance,
        Parameter::UpperIrredundance,
        Parameter::IndependentDomination,
        Parameter::Independence,
        Parameter::LowerPacking,
        Parameter::Packing,
    ];

    pub fn broadcast() -> &'static [Parameter] {
        &Self::ALL[..8]
    }

    pub fn classical() -> &'static [Parameter] {
        &Self::ALL[8..]
    }

    pub fn is_classical(self) -> bool {
        Self::ALL.iter().position(|&p| p == self).unwrap() >= 8
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::BroadcastDomination => "gamma_b",
            Parameter::UpperBroadcastDomination => "Gamma_b",
            Parameter::BroadcastIrredundance => "ir_b",
            Parameter::UpperBroadcastIrredundance => "IR_b",
            Parameter::LowerBroadcastIndependence => "i_b",
            Parameter::BroadcastIndependence => "beta_b",
            Parameter::LowerBroadcastPacking => "p_b",
            Parameter::BroadcastPacking => "P_b",
            Parameter::Domination => "gamma",
            Parameter::UpperDomination => "Gamma",
            Parameter::Irredundance => "ir",
            Parameter::UpperIrredundance => "IR",
            Parameter::IndependentDomination => "i",
            Parameter::Independence => "beta0",
            Parameter::LowerPacking => "p",
            Parameter::Packing => "P",
        }
    }

    pub fn spec(self) -> ParameterSpec {
        use Extremality as E;
        use Objective::{Max, Min};
        let (kind, objective, extremality) = match self {
            Parameter::BroadcastDomination | Parameter::Domination => (Kind::Dominating, Min, E::None),
            Parameter::UpperBroadcastDomination | Parameter::UpperDomination => (Kind::Dominating, Max, E::Minimal),
            Parameter::BroadcastIrredundance | Parameter::Irredundance => (Kind::Irredundant, Min, E::Maximal),
            Parameter::UpperBroadcastIrredundance | Parameter::UpperIrredundance => (Kind::Irredundant, Max, E::None),
            Parameter::LowerBroadcastIndependence | Parameter::IndependentDomination => {
                (Kind::Independent, Min, E::Maximal)
            }
            Parameter::BroadcastIndependence | Parameter::Independence => (Kind::Independent, Max, E::None),
            Parameter::LowerBroadcastPacking | Parameter::LowerPacking => (Kind::Packing, Min, E::Maximal),
            Parameter::BroadcastPacking | Parameter::Packing => (Kind::Packing, Max, E::None),
        };
        let cap = if self.is_classical() { Cap::One } else { Cap::Eccentricity };
        ParameterSpec { kind, objective, extremality, cap }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = SolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| SolveError::UnknownParameter(s.to_string()))
    }
}

impl Serialize for Parameter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: u32,
    pub witness: Broadcast,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub all_optimal_count: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub value: u32,
    pub broadcasts: Vec<Broadcast>,
    pub truncated: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub limit: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { limit: DEFAULT_LIMIT }
    }
}

impl SolverConfig {
    /// Reads the limit from [`LIMIT_ENV`] when set and parseable.
    pub fn from_env() -> Self {
        let limit = std::env::var(LIMIT_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_LIMIT);
        SolverConfig { limit }
    }
}

fn box_size(g: &Graph, cap: Cap) -> u128 {
    g.vertices().fold(1u128, |acc, v| acc.saturating_mul(cap.bound(g, v) as u128 + 1))
}

/// Every broadcast in the capped family, each exactly once, in
/// lexicographic order of value sequences.
pub fn enumerate(g: &Graph, cap: Cap, config: SolverConfig) -> Result<BoxEnumerator, SolveError> {
    let estimate = box_size(g, cap);
    if estimate > config.limit as u128 {
        return Err(SolveError::SpaceTooLarge { estimate, limit: config.limit });
    }
    Ok(BoxEnumerator { upper: cap.bounds(g), next: Some(vec![0; g.order()]) })
}

pub struct BoxEnumerator {
    upper: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxEnumerator {
    type Item = Broadcast;

    fn next(&mut self) -> Option<Broadcast> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.upper[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Broadcast::new(current))
    }
}

/// Whether `f` belongs to the family described by `spec` (kind plus
/// extremality filter), using the broadcast predicates directly.
pub fn satisfies(g: &Graph, f: &Broadcast, spec: ParameterSpec) -> bool {
    let Ok(true) = broadcast::is_kind(g, f, spec.kind) else {
        return false;
    };
    if f.values().iter().enumerate().any(|(v, &x)| x > spec.cap.bound(g, v)) {
        return false;
    }
    match spec.extremality {
        Extremality::None => true,
        Extremality::Minimal => broadcast::is_minimal(g, f, spec.kind, spec.cap).unwrap_or(false),
        Extremality::Maximal => broadcast::is_maximal(g, f, spec.kind, spec.cap).unwrap_or(false),
    }
}

/// Plain filtered enumeration: the unpruned reference answer, with the
/// same lexicographic tie-break as [`solve`].
pub fn brute_force(g: &Graph, spec: ParameterSpec, config: SolverConfig) -> Result<(u32, Broadcast), SolveError> {
    let mut best: Option<(u32, Broadcast)> = None;
    for f in enumerate(g, spec.cap, config)? {
        if !satisfies(g, &f, spec) {
            continue;
        }
        let cost = f.cost();
        let better = match (&best, spec.objective) {
            (None, _) => true,
            (Some((b, _)), Objective::Min) => cost < *b,
            (Some((b, _)), Objective::Max) => cost > *b,
        };
        if better {
            best = Some((cost, f));
        }
    }
    best.ok_or(SolveError::Infeasible(spec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Optimize,
    Exact(u32),
    Any,
}

#[derive(Clone, Copy)]
enum Prefix {
    None,
    Irredundant,
    Independent,
    Packing,
}

type MaximalCache = Mutex<HashMap<(Cap, Vec<u32>), bool>>;

/// Exact solver for one graph. Holds a memo of maximal-irredundance
/// verdicts shared by every query on that graph.
pub struct Solver<'g> {
    g: &'g Graph,
    config: SolverConfig,
    cache: MaximalCache,
}

struct Outcome {
    best: Option<(u32, Vec<u32>)>,
    collected: Vec<Vec<u32>>,
    truncated: bool,
    nodes: u64,
}

struct Search<'a> {
    g: &'a Graph,
    spec: ParameterSpec,
    prefix: Prefix,
    target: Target,
    limit: usize,
    bounds: Vec<u32>,
    suffix_caps: Vec<u32>,
    values: Vec<u32>,
    counts: Vec<u32>,
    cost: u32,
    best: Option<(u32, Vec<u32>)>,
    collected: Vec<Vec<u32>>,
    truncated: bool,
    nodes: u64,
    unflushed: u64,
    shared_nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    node_limit: u64,
    cache: &'a MaximalCache,
}

impl<'a> Search<'a> {
    fn stopped(&self) -> bool {
        self.truncated || self.abort.load(Ordering::Relaxed)
    }

    fn count_node(&mut self) {
        self.nodes += 1;
        self.unflushed += 1;
        if self.unflushed == 256 {
            let total = self.shared_nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
            self.unflushed = 0;
            if total > self.node_limit {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
    }

    fn apply(&mut self, k: usize, val: u32, delta: i32) {
        let g = self.g;
        for (u, c) in self.counts.iter_mut().enumerate() {
            if g.dist(u, k) <= val {
                *c = (*c as i32 + delta) as u32;
            }
        }
    }

    fn prefix_ok(&self, k: usize) -> bool {
        let val = self.values[k];
        if val == 0 {
            return true;
        }
        let g = self.g;
        match self.prefix {
            Prefix::None => true,
            Prefix::Packing => g.vertices().all(|u| g.dist(u, k) > val || self.counts[u] <= 1),
            Prefix::Independent => (0..=k).all(|w| self.values[w] == 0 || self.counts[w] == 1),
            Prefix::Irredundant => {
                (0..=k).all(|w| self.values[w] == 0 || broadcast::border_nonempty(g, &self.values, &self.counts, w))
            }
        }
    }

    /// Lower bound on the extra cost any completion of vertices `0..=k`
    /// needs, `None` when no completion can be of the kind.
    fn extra_cost_lower_bound(&self, k: usize) -> Option<u32> {
        if self.spec.kind != Kind::Dominating {
            return Some(0);
        }
        let g = self.g;
        let n = g.order();
        let mut lb = 0;
        for u in 0..n {
            if self.counts[u] > 0 {
                continue;
            }
            let need = (k + 1..n).filter(|&w| g.dist(u, w) <= self.bounds[w]).map(|w| g.dist(u, w).max(1)).min();
            lb = lb.max(need?);
        }
        Some(lb)
    }

    fn bounded_out(&self, k: usize) -> bool {
        let Some(extra) = self.extra_cost_lower_bound(k) else {
            return true;
        };
        let lo = self.cost + extra;
        let hi = self.cost + self.suffix_caps[k + 1];
        match self.target {
            Target::Any => false,
            Target::Exact(v) => lo > v || hi < v,
            Target::Optimize => match (&self.best, self.spec.objective) {
                (None, _) => false,
                (Some((b, _)), Objective::Min) => lo >= *b,
                (Some((b, _)), Objective::Max) => hi <= *b,
            },
        }
    }

    fn try_value(&mut self, k: usize, val: u32) {
        self.count_node();
        self.values[k] = val;
        if val > 0 {
            self.apply(k, val, 1);
            self.cost += val;
        }
        if self.prefix_ok(k) && !self.bounded_out(k) {
            if k + 1 == self.values.len() {
                self.leaf();
            } else {
                self.descend(k + 1);
            }
        }
        if val > 0 {
            self.apply(k, val, -1);
            self.cost -= val;
        }
        self.values[k] = 0;
    }

    fn descend(&mut self, k: usize) {
        for val in 0..=self.bounds[k] {
            if self.stopped() {
                return;
            }
            self.try_value(k, val);
        }
    }

    fn leaf(&mut self) {
        let g = self.g;
        if !broadcast::kind_holds_with(g, &self.values, &self.counts, self.spec.kind) {
            return;
        }
        let keep = match self.spec.extremality {
            Extremality::None => true,
            Extremality::Minimal => broadcast::minimal_unchecked(g, &self.values, self.spec.kind),
            Extremality::Maximal if self.spec.kind == Kind::Irredundant => {
                let key = (self.spec.cap, self.values.clone());
                let cached = self.cache.lock().unwrap().get(&key).copied();
                match cached {
                    Some(v) => v,
                    None => {
                        let v = broadcast::maximal_unchecked(g, &self.values, self.spec.kind, self.spec.cap);
                        self.cache.lock().unwrap().insert(key, v);
                        v
                    }
                }
            }
            Extremality::Maximal => broadcast::maximal_unchecked(g, &self.values, self.spec.kind, self.spec.cap),
        };
        if !keep {
            return;
        }
        match self.target {
            Target::Optimize => {
                let better = match (&self.best, self.spec.objective) {
                    (None, _) => true,
                    (Some((b, _)), Objective::Min) => self.cost < *b,
                    (Some((b, _)), Objective::Max) => self.cost > *b,
                };
                if better {
                    self.best = Some((self.cost, self.values.clone()));
                }
            }
            Target::Exact(_) | Target::Any => {
                if self.collected.len() == self.limit {
                    self.truncated = true;
                } else {
                    self.collected.push(self.values.clone());
                }
            }
        }
    }
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_config(g, SolverConfig::from_env())
    }

    pub fn with_config(g: &'g Graph, config: SolverConfig) -> Self {
        Solver { g, config, cache: Mutex::new(HashMap::new()) }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    fn run(&self, spec: ParameterSpec, target: Target, limit: usize) -> Result<Outcome, SolveError> {
        let g = self.g;
        let n = g.order();
        let bounds = spec.cap.bounds(g);
        let mut suffix_caps = vec![0; n + 1];
        for k in (0..n).rev() {
            suffix_caps[k] = suffix_caps[k + 1] + bounds[k];
        }
        let prefix = match (spec.kind, spec.extremality) {
            (Kind::Irredundant, _) | (Kind::Dominating, Extremality::Minimal) => Prefix::Irredundant,
            (Kind::Independent, _) => Prefix::Independent,
            (Kind::Packing, _) => Prefix::Packing,
            (Kind::Dominating, _) => Prefix::None,
        };
        let shared_nodes = AtomicU64::new(0);
        let abort = AtomicBool::new(false);
        let outcomes: Vec<Outcome> = (0..=bounds[0])
            .into_par_iter()
            .map(|val| {
                let mut s = Search {
                    g,
                    spec,
                    prefix,
                    target,
                    limit,
                    bounds: bounds.clone(),
                    suffix_caps: suffix_caps.clone(),
                    values: vec![0; n],
                    counts: vec![0; n],
                    cost: 0,
                    best: None,
                    collected: Vec::new(),
                    truncated: false,
                    nodes: 0,
                    unflushed: 0,
                    shared_nodes: &shared_nodes,
                    abort: &abort,
                    node_limit: self.config.limit,
                    cache: &self.cache,
                };
                s.try_value(0, val);
                Outcome { best: s.best, collected: s.collected, truncated: s.truncated, nodes: s.nodes }
            })
            .collect();
        if abort.load(Ordering::Relaxed) {
            return Err(SolveError::NodeLimit { limit: self.config.limit });
        }
        let mut merged = Outcome { best: None, collected: Vec::new(), truncated: false, nodes: 0 };
        for o in outcomes {
            merged.nodes += o.nodes;
            merged.truncated |= o.truncated;
            if let Some((v, w)) = o.best {
                let better = match (&merged.best, spec.objective) {
                    (None, _) => true,
                    (Some((b, _)), Objective::Min) => v < *b,
                    (Some((b, _)), Objective::Max) => v > *b,
                };
                if better {
                    merged.best = Some((v, w));
                }
            }
            merged.collected.extend(o.collected);
        }
        if merged.collected.len() > limit {
            merged.collected.truncate(limit);
            merged.truncated = true;
        }
        Ok(merged)
    }

    /// Exact optimum with the lexicographically smallest optimal witness.
    pub fn solve(&self, spec: ParameterSpec) -> Result<SolveResult, SolveError> {
        let start = Instant::now();
        let outcome = self.run(spec, Target::Optimize, 0)?;
        let (value, witness) = outcome.best.ok_or(SolveError::Infeasible(spec))?;
        Ok(SolveResult {
            value,
            witness: Broadcast::new(witness),
            nodes_explored: outcome.nodes,
            elapsed: start.elapsed(),
            all_optimal_count: None,
        })
    }

    pub fn solve_parameter(&self, p: Parameter) -> Result<SolveResult, SolveError> {
        self.solve(p.spec())
    }

    /// Like [`Solver::solve`], additionally counting every optimal broadcast.
    pub fn solve_counting(&self, spec: ParameterSpec) -> Result<SolveResult, SolveError> {
        let mut result = self.solve(spec)?;
        let all = self.run(spec, Target::Exact(result.value), usize::MAX)?;
        result.all_optimal_count = Some(all.collected.len() as u64);
        Ok(result)
    }

    /// Every optimal broadcast for `spec`, in lexicographic order, up to
    /// `limit` of them.
    pub fn solve_all_witnesses(&self, spec: ParameterSpec, limit: usize) -> Result<Witnesses, SolveError> {
        let value = self.solve(spec)?.value;
        let outcome = self.run(spec, Target::Exact(value), limit)?;
        Ok(Witnesses {
            value,
            broadcasts: outcome.collected.into_iter().map(Broadcast::new).collect(),
            truncated: outcome.truncated,
        })
    }

    /// Every broadcast of the spec's kind passing its extremality filter,
    /// regardless of cost. The objective is ignored.
    pub fn all_satisfying(&self, spec: ParameterSpec, limit: usize) -> Result<Witnesses, SolveError> {
        let outcome = self.run(spec, Target::Any, limit)?;
        Ok(Witnesses {
            value: 0,
            broadcasts: outcome.collected.into_iter().map(Broadcast::new).collect(),
            truncated: outcome.truncated,
        })
    }

    pub fn chain_report(&self) -> Result<ChainReport, SolveError> {
        let mut values = BTreeMap::new();
        for p in Parameter::ALL {
            values.insert(p, self.solve_parameter(p)?.value);
        }
        Ok(ChainReport::from_values(self.g, values))
    }
}

pub fn solve(g: &Graph, spec: ParameterSpec) -> Result<SolveResult, SolveError> {
    Solver::new(g).solve(spec)
}

pub fn solve_all_witnesses(g: &Graph, spec: ParameterSpec, limit: usize) -> Result<Witnesses, SolveError> {
    Solver::new(g).solve_all_witnesses(spec, limit)
}

pub fn chain_report(g: &Graph) -> Result<ChainReport, SolveError> {
    Solver::new(g).chain_report()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub relation: String,
    pub holds: bool,
}

/// All sixteen parameter values of one graph and the verdict of every
/// known inequality between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub values: BTreeMap<Parameter, u32>,
    pub checks: Vec<ChainCheck>,
}

/// A path (maximum degree at most 2 on a tree) or a star `K_{1,k}`, `k >= 1`.
pub fn is_path_or_star(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 || g.size() != n - 1 {
        return false;
    }
    let max_degree = g.vertices().map(|v| g.neighbors(v).len()).max().unwrap();
    max_degree <= 2 || max_degree == n - 1
}

impl ChainReport {
    pub fn from_values(g: &Graph, values: BTreeMap<Parameter, u32>) -> Self {
        use Parameter as P;
        let v = |p: P| values[&p];
        let rad = g.radius();
        let diam = g.diameter();
        let m = g.size() as u32;
        let n_minus_delta = (g.order() - g.min_degree()) as u32;
        let mut checks = Vec::new();
        let mut le = |a: (&str, u32), b: (&str, u32)| {
            checks.push(ChainCheck { relation: format!("{} <= {}", a.0, b.0), holds: a.1 <= b.1 });
        };
        let named = |p: P| (p.name(), v(p));
        // ir_b <= gamma_b <= gamma <= Gamma <= Gamma_b <= IR_b
        let chain = [P::BroadcastIrredundance, P::BroadcastDomination, P::Domination, P::UpperDomination, P::UpperBroadcastDomination, P::UpperBroadcastIrredundance];
        for w in chain.windows(2) {
            le(named(w[0]), named(w[1]));
        }
        // gamma_b <= i_b <= beta_b >= i >= gamma >= gamma_b
        le(named(P::BroadcastDomination), named(P::LowerBroadcastIndependence));
        le(named(P::LowerBroadcastIndependence), named(P::BroadcastIndependence));
        le(named(P::IndependentDomination), named(P::BroadcastIndependence));
        le(named(P::Domination), named(P::IndependentDomination));
        le(named(P::BroadcastDomination), named(P::Domination));
        // p <= P <= P_b and p_b <= rad <= diam <= P_b <= beta_b
        le(named(P::LowerPacking), named(P::Packing));
        le(named(P::Packing), named(P::BroadcastPacking));
        le(named(P::LowerBroadcastPacking), ("rad", rad));
        le(("rad", rad), ("diam", diam));
        le(("diam", diam), named(P::BroadcastPacking));
        le(named(P::BroadcastPacking), named(P::BroadcastIndependence));
        // packing broadcasts are irredundant
        le(named(P::BroadcastPacking), named(P::UpperBroadcastIrredundance));
        le(named(P::UpperBroadcastDomination), ("m", m));
        le(named(P::UpperBroadcastDomination), ("n - delta", n_minus_delta));
        let equality = v(P::UpperBroadcastDomination) == m;
        checks.push(ChainCheck {
            relation: "Gamma_b = m iff G is a path or a star".into(),
            holds: equality == is_path_or_star(g),
        });
        ChainReport { values, checks }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn violations(&self) -> Vec<&ChainCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }

    pub fn value(&self, p: Parameter) -> u32 {
        self.values[&p]
    }
}
