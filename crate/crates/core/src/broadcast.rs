//! Broadcast functions and the sets and predicates derived from them.
//!
//! A broadcast assigns each vertex `v` a value `f(v)` with
//! `0 <= f(v) <= e(v)`. Vertex `u` hears `v` when `f(v) > 0` and
//! `d(u, v) <= f(v)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BroadcastError {
    #[error("format error: {0}")]
    Format(String),
    #[error("broadcast has {got} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid broadcast: f({vertex}) = {value} exceeds the bound {bound}")]
    Invalid { vertex: Vertex, value: u32, bound: u32 },
    #[error("vertex {0} is not a broadcast vertex")]
    NotBroadcastVertex(Vertex),
    #[error("broadcast is not {0}")]
    NotOfKind(Kind),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Broadcast(Vec<u32>);

impl Broadcast {
    pub fn new(values: Vec<u32>) -> Self {
        Broadcast(values)
    }

    pub fn zeros(n: usize) -> Self {
        Broadcast(vec![0; n])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0[v]
    }

    pub fn cost(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `V^+_f`, in increasing order.
    pub fn broadcast_vertices(&self) -> Vec<Vertex> {
        self.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(v, _)| v).collect()
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Broadcast) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn with(&self, v: Vertex, value: u32) -> Broadcast {
        let mut values = self.0.clone();
        values[v] = value;
        Broadcast(values)
    }

    pub fn reversed(&self) -> Broadcast {
        Broadcast(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<u32>> for Broadcast {
    fn from(values: Vec<u32>) -> Self {
        Broadcast(values)
    }
}

/// Digit string when every value is at most 9, comma-separated otherwise.
/// A lone value above 9 gets a trailing comma so it does not read back as
/// several digits.
impl fmt::Display for Broadcast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))?;
            if parts.len() == 1 {
                f.write_str(",")?;
            }
            Ok(())
        }
    }
}

impl FromStr for Broadcast {
    type Err = BroadcastError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(BroadcastError::Format("empty broadcast".into()));
        }
        let values = if s.contains(',') {
            s.strip_suffix(',').unwrap_or(s).split(',')
                .map(|p| {
                    let p = p.trim();
                    if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(BroadcastError::Format(format!("bad value {p:?}")));
                    }
                    p.parse::<u32>().map_err(|e| BroadcastError::Format(format!("bad value {p:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| BroadcastError::Format(format!("bad digit {c:?}"))))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(Broadcast(values))
    }
}

pub fn parse_broadcast(text: &str) -> Result<Broadcast, BroadcastError> {
    text.parse()
}

pub fn format_broadcast(f: &Broadcast) -> String {
    f.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Dominating,
    Irredundant,
    Independent,
    Packing,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Dominating, Kind::Irredundant, Kind::Independent, Kind::Packing];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Dominating => "dominating",
            Kind::Irredundant => "irredundant",
            Kind::Independent => "independent",
            Kind::Packing => "packing",
        })
    }
}

impl FromStr for Kind {
    type Err = BroadcastError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dominating" => Ok(Kind::Dominating),
            "irredundant" => Ok(Kind::Irredundant),
            "independent" => Ok(Kind::Independent),
            "packing" => Ok(Kind::Packing),
            _ => Err(BroadcastError::Format(format!("unknown kind {s:?}"))),
        }
    }
}

/// Upper bound on the value of each vertex: its eccentricity (broadcasts)
/// or 1 (vertex sets).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Cap {
    #[default]
    Eccentricity,
    One,
}

impl Cap {
    #[inline]
    pub fn bound(self, g: &Graph, v: Vertex) -> u32 {
        match self {
            Cap::Eccentricity => g.ecc(v),
            Cap::One => g.ecc(v).min(1),
        }
    }

    pub fn bounds(self, g: &Graph) -> Vec<u32> {
        g.vertices().map(|v| self.bound(g, v)).collect()
    }
}

fn check_len(g: &Graph, f: &Broadcast) -> Result<(), BroadcastError> {
    if f.len() != g.order() {
        return Err(BroadcastError::LengthMismatch { expected: g.order(), got: f.len() });
    }
    Ok(())
}

fn check_valid(g: &Graph, f: &Broadcast, cap: Cap) -> Result<(), BroadcastError> {
    check_len(g, f)?;
    for v in g.vertices() {
        let bound = cap.bound(g, v);
        if f.get(v) > bound {
            return Err(BroadcastError::Invalid { vertex: v, value: f.get(v), bound });
        }
    }
    Ok(())
}

/// True iff `f(v) <= e(v)` everywhere.
pub fn validate(g: &Graph, f: &Broadcast) -> Result<bool, BroadcastError> {
    check_len(g, f)?;
    Ok(g.vertices().all(|v| f.get(v) <= g.ecc(v)))
}

// Unchecked helpers on raw value slices, shared with the solver.

pub(crate) fn hear_counts(g: &Graph, values: &[u32]) -> Vec<u32> {
    let mut counts = vec![0; values.len()];
    for (v, &fv) in values.iter().enumerate() {
        if fv > 0 {
            for (u, c) in counts.iter_mut().enumerate() {
                if g.dist(u, v) <= fv {
                    *c += 1;
                }
            }
        }
    }
    counts
}

/// `PB_f(v) != ∅` given hear counts. For `f(v) = 1` the border is non-empty
/// exactly when `PN_f(v)` is (it is `{v}` or contains a neighbour).
#[inline]
pub(crate) fn border_nonempty(g: &Graph, values: &[u32], counts: &[u32], v: Vertex) -> bool {
    let fv = values[v];
    debug_assert!(fv > 0);
    if fv == 1 {
        counts[v] == 1 || g.neighbors(v).iter().any(|&u| counts[u] == 1)
    } else {
        (0..values.len()).any(|u| counts[u] == 1 && g.dist(u, v) == fv)
    }
}

pub(crate) fn kind_holds(g: &Graph, values: &[u32], kind: Kind) -> bool {
    let counts = hear_counts(g, values);
    kind_holds_with(g, values, &counts, kind)
}

pub(crate) fn kind_holds_with(g: &Graph, values: &[u32], counts: &[u32], kind: Kind) -> bool {
    match kind {
        Kind::Dominating => counts.iter().all(|&c| c >= 1),
        Kind::Packing => counts.iter().all(|&c| c <= 1),
        Kind::Independent => values.iter().zip(counts).all(|(&x, &c)| x == 0 || c == 1),
        Kind::Irredundant => (0..values.len()).all(|v| values[v] == 0 || border_nonempty(g, values, counts, v)),
    }
}

/// `H_f(u)`: broadcast vertices heard by `u`.
pub fn hearers(g: &Graph, f: &Broadcast, u: Vertex) -> Result<Vec<Vertex>, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    Ok(hearers_of(g, f.values(), u))
}

fn hearers_of(g: &Graph, values: &[u32], u: Vertex) -> Vec<Vertex> {
    (0..values.len()).filter(|&v| values[v] > 0 && g.dist(u, v) <= values[v]).collect()
}

/// `N_f(v)`: vertices hearing `v`.
pub fn broadcast_neighborhood(g: &Graph, f: &Broadcast, v: Vertex) -> Result<Vec<Vertex>, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    if f.get(v) == 0 {
        return Err(BroadcastError::NotBroadcastVertex(v));
    }
    Ok(g.vertices().filter(|&u| g.dist(u, v) <= f.get(v)).collect())
}

/// `N_f(V^+_f)`: every vertex hearing at least one broadcast.
pub fn coverage(g: &Graph, f: &Broadcast) -> Result<Vec<Vertex>, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    let counts = hear_counts(g, f.values());
    Ok(g.vertices().filter(|&u| counts[u] > 0).collect())
}

/// `PN_f(v)`: vertices whose only hearer is `v`.
pub fn private_neighborhood(g: &Graph, f: &Broadcast, v: Vertex) -> Result<Vec<Vertex>, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    if f.get(v) == 0 {
        return Err(BroadcastError::NotBroadcastVertex(v));
    }
    Ok(private_nbhd_of(g, f.values(), v))
}

fn private_nbhd_of(g: &Graph, values: &[u32], v: Vertex) -> Vec<Vertex> {
    (0..values.len()).filter(|&u| hearers_of(g, values, u) == [v]).collect()
}

fn private_border_of(g: &Graph, values: &[u32], v: Vertex) -> Vec<Vertex> {
    let pn = private_nbhd_of(g, values, v);
    if values[v] == 1 && pn == [v] {
        vec![v]
    } else {
        pn.into_iter().filter(|&u| g.dist(u, v) == values[v]).collect()
    }
}

/// `PB_f(v)`, the private border of a broadcast vertex: `{v}` when
/// `f(v) = 1` and `PN_f(v) = {v}`, otherwise the private neighbours at
/// distance exactly `f(v)`.
pub fn private_border(g: &Graph, f: &Broadcast, v: Vertex) -> Result<Vec<Vertex>, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    if f.get(v) == 0 {
        return Err(BroadcastError::NotBroadcastVertex(v));
    }
    Ok(private_border_of(g, f.values(), v))
}

/// Vertices hearing no broadcast.
pub fn undominated(g: &Graph, f: &Broadcast) -> Result<Vec<Vertex>, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    let counts = hear_counts(g, f.values());
    Ok(g.vertices().filter(|&u| counts[u] == 0).collect())
}

pub fn is_kind(g: &Graph, f: &Broadcast, kind: Kind) -> Result<bool, BroadcastError> {
    check_valid(g, f, Cap::Eccentricity)?;
    Ok(kind_holds(g, f.values(), kind))
}

pub fn is_dominating(g: &Graph, f: &Broadcast) -> Result<bool, BroadcastError> {
    is_kind(g, f, Kind::Dominating)
}

pub fn is_irredundant(g: &Graph, f: &Broadcast) -> Result<bool, BroadcastError> {
    is_kind(g, f, Kind::Irredundant)
}

pub fn is_independent(g: &Graph, f: &Broadcast) -> Result<bool, BroadcastError> {
    is_kind(g, f, Kind::Independent)
}

pub fn is_packing(g: &Graph, f: &Broadcast) -> Result<bool, BroadcastError> {
    is_kind(g, f, Kind::Packing)
}

fn check_family_member(g: &Graph, f: &Broadcast, kind: Kind, cap: Cap) -> Result<(), BroadcastError> {
    check_valid(g, f, cap)?;
    if !kind_holds(g, f.values(), kind) {
        return Err(BroadcastError::NotOfKind(kind));
    }
    Ok(())
}

/// No other broadcast of the same kind lies pointwise below `f` in the
/// capped family.
///
/// Domination is upward closed, so single decrements suffice. Independence
/// and packing are downward closed, so only the zero broadcast is minimal.
/// Irredundance gets a full search of the downward box.
pub fn is_minimal(g: &Graph, f: &Broadcast, kind: Kind, cap: Cap) -> Result<bool, BroadcastError> {
    check_family_member(g, f, kind, cap)?;
    Ok(minimal_unchecked(g, f.values(), kind))
}

pub(crate) fn minimal_unchecked(g: &Graph, values: &[u32], kind: Kind) -> bool {
    match kind {
        Kind::Dominating => {
            let mut w = values.to_vec();
            (0..w.len()).all(|v| {
                if w[v] == 0 {
                    return true;
                }
                w[v] -= 1;
                let still = kind_holds(g, &w, Kind::Dominating);
                w[v] += 1;
                !still
            })
        }
        Kind::Independent | Kind::Packing => values.iter().all(|&x| x == 0),
        Kind::Irredundant => {
            let mut found = false;
            let lower = vec![0; values.len()];
            for_each_in_box(&lower, values, |w| {
                if w != values && kind_holds(g, w, Kind::Irredundant) {
                    found = true;
                }
                !found
            });
            !found
        }
    }
}

/// No other broadcast of the same kind lies pointwise above `f` in the
/// capped family.
///
/// Independence and packing are downward closed among broadcasts, so single
/// increments suffice. Irredundance is not: `[0,0,1,1,0,0]` on `P_6`
/// survives every single increment, yet `[0,0,2,2,0,0]` is irredundant. It
/// gets a (pruned) search of the whole upward box.
pub fn is_maximal(g: &Graph, f: &Broadcast, kind: Kind, cap: Cap) -> Result<bool, BroadcastError> {
    check_family_member(g, f, kind, cap)?;
    Ok(maximal_unchecked(g, f.values(), kind, cap))
}

pub(crate) fn maximal_unchecked(g: &Graph, values: &[u32], kind: Kind, cap: Cap) -> bool {
    match kind {
        Kind::Dominating => g.vertices().all(|v| values[v] == cap.bound(g, v)),
        Kind::Independent | Kind::Packing => !one_step_increment_exists(g, values, kind, cap),
        Kind::Irredundant => {
            !one_step_increment_exists(g, values, kind, cap) && irredundant_above_unchecked(g, values, cap).is_none()
        }
    }
}

fn one_step_increment_exists(g: &Graph, values: &[u32], kind: Kind, cap: Cap) -> bool {
    let mut w = values.to_vec();
    (0..w.len()).any(|v| {
        if w[v] >= cap.bound(g, v) {
            return false;
        }
        w[v] += 1;
        let ok = kind_holds(g, &w, kind);
        w[v] -= 1;
        ok
    })
}

/// Single-coordinate `+1` raises of `f` that stay of the given kind.
pub fn single_increments(g: &Graph, f: &Broadcast, kind: Kind, cap: Cap) -> Result<Vec<Broadcast>, BroadcastError> {
    check_valid(g, f, cap)?;
    Ok(g.vertices()
        .filter(|&v| f.get(v) < cap.bound(g, v))
        .map(|v| f.with(v, f.get(v) + 1))
        .filter(|h| kind_holds(g, h.values(), kind))
        .collect())
}

/// An irredundant broadcast `h != f` with `f <= h` pointwise inside the
/// capped family, if one exists. Lexicographically smallest such `h`.
pub fn irredundant_above(g: &Graph, f: &Broadcast, cap: Cap) -> Result<Option<Broadcast>, BroadcastError> {
    check_valid(g, f, cap)?;
    Ok(irredundant_above_unchecked(g, f.values(), cap).map(Broadcast))
}

pub(crate) fn irredundant_above_unchecked(g: &Graph, values: &[u32], cap: Cap) -> Option<Vec<u32>> {
    let bounds = cap.bounds(g);
    let mut w = values.to_vec();
    if raise_dfs(g, values, &bounds, &mut w, 0) {
        Some(w)
    } else {
        None
    }
}

// Coordinates `< k` are fixed, the rest sit at their lower bound. Raising
// any coordinate only adds hearers, so the private neighbourhood of a fixed
// broadcast vertex can only shrink: an empty border among fixed vertices is
// final.
fn raise_dfs(g: &Graph, lower: &[u32], bounds: &[u32], w: &mut [u32], k: usize) -> bool {
    let n = w.len();
    if k == n {
        return w != lower && kind_holds(g, w, Kind::Irredundant);
    }
    for val in lower[k]..=bounds[k].max(lower[k]) {
        w[k] = val;
        if val > 0 {
            let counts = hear_counts(g, w);
            let fixed_ok = if val == lower[k] {
                border_nonempty(g, w, &counts, k)
            } else {
                (0..=k).all(|v| w[v] == 0 || border_nonempty(g, w, &counts, v))
            };
            if !fixed_ok {
                continue;
            }
        }
        if raise_dfs(g, lower, bounds, w, k + 1) {
            return true;
        }
    }
    w[k] = lower[k];
    false
}

/// Visits every vector in `∏ [lower[v], upper[v]]` in lexicographic order
/// until the visitor returns `false`.
pub(crate) fn for_each_in_box(lower: &[u32], upper: &[u32], mut visit: impl FnMut(&[u32]) -> bool) {
    let n = lower.len();
    if lower.iter().zip(upper).any(|(l, u)| l > u) {
        return;
    }
    let mut w = lower.to_vec();
    loop {
        if !visit(&w) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if w[i] < upper[i] {
                w[i] += 1;
                break;
            }
            w[i] = lower[i];
        }
    }
}

/// Definitional minimality: scans the whole downward box with no shortcuts.
pub fn is_minimal_exhaustive(g: &Graph, f: &Broadcast, kind: Kind, cap: Cap) -> Result<bool, BroadcastError> {
    check_family_member(g, f, kind, cap)?;
    let lower = vec![0; f.len()];
    let mut found = false;
    for_each_in_box(&lower, f.values(), |w| {
        found = w != f.values() && kind_holds(g, w, kind);
        !found
    });
    Ok(!found)
}

/// Definitional maximality: scans the whole upward box with no shortcuts.
pub fn is_maximal_exhaustive(g: &Graph, f: &Broadcast, kind: Kind, cap: Cap) -> Result<bool, BroadcastError> {
    check_family_member(g, f, kind, cap)?;
    let upper = cap.bounds(g);
    let mut found = false;
    for_each_in_box(f.values(), &upper, |w| {
        found = w != f.values() && kind_holds(g, w, kind);
        !found
    });
    Ok(!found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KindFlags {
    pub dominating: bool,
    pub irredundant: bool,
    pub independent: bool,
    pub packing: bool,
}

impl KindFlags {
    pub fn get(&self, kind: Kind) -> bool {
        match kind {
            Kind::Dominating => self.dominating,
            Kind::Irredundant => self.irredundant,
            Kind::Independent => self.independent,
            Kind::Packing => self.packing,
        }
    }
}

/// Minimal/maximal verdicts for one kind. A broadcast not of the kind is
/// neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalityFlags {
    pub minimal: bool,
    pub maximal: bool,
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub extremality: Vec<Kind>,
    pub cap: Cap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub broadcast: Broadcast,
    pub cost: u32,
    pub broadcast_vertices: Vec<Vertex>,
    pub hears: Vec<Vec<Vertex>>,
    pub coverage: Vec<Vertex>,
    pub undominated: Vec<Vertex>,
    pub private_nbhd: BTreeMap<Vertex, Vec<Vertex>>,
    pub private_border: BTreeMap<Vertex, Vec<Vertex>>,
    pub kinds: KindFlags,
    pub extremality: BTreeMap<Kind, ExtremalityFlags>,
}

pub fn analyze(g: &Graph, f: &Broadcast, options: &AnalysisOptions) -> Result<AnalysisReport, BroadcastError> {
    check_valid(g, f, options.cap)?;
    let values = f.values();
    let hears: Vec<Vec<Vertex>> = g.vertices().map(|u| hearers_of(g, values, u)).collect();
    let broadcast_vertices = f.broadcast_vertices();
    let kinds = KindFlags {
        dominating: kind_holds(g, values, Kind::Dominating),
        irredundant: kind_holds(g, values, Kind::Irredundant),
        independent: kind_holds(g, values, Kind::Independent),
        packing: kind_holds(g, values, Kind::Packing),
    };
    let extremality = options
        .extremality
        .iter()
        .map(|&kind| {
            let flags = if kinds.get(kind) {
                ExtremalityFlags {
                    minimal: minimal_unchecked(g, values, kind),
                    maximal: maximal_unchecked(g, values, kind, options.cap),
                }
            } else {
                ExtremalityFlags { minimal: false, maximal: false }
            };
            (kind, flags)
        })
        .collect();
    Ok(AnalysisReport {
        broadcast: f.clone(),
        cost: f.cost(),
        coverage: g.vertices().filter(|&u| !hears[u].is_empty()).collect(),
        undominated: g.vertices().filter(|&u| hears[u].is_empty()).collect(),
        private_nbhd: broadcast_vertices.iter().map(|&v| (v, private_nbhd_of(g, values, v))).collect(),
        private_border: broadcast_vertices.iter().map(|&v| (v, private_border_of(g, values, v))).collect(),
        broadcast_vertices,
        hears,
        kinds,
        extremality,
    })
}
