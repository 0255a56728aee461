//! Exact computation and verification of broadcast parameters on small
//! graphs: domination, irredundance, independence and packing, in both the
//! broadcast setting and the classical 0/1 setting, with closed forms and
//! explicit optimal broadcasts for paths and cycles.

pub mod broadcast;
pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod lemmas;
pub mod repair;
pub mod solver;

pub use broadcast::{Broadcast, BroadcastError, Cap, Kind};
pub use graph::{Graph, GraphError, GraphFamily, Vertex};
pub use solver::{Parameter, ParameterSpec, SolveError, SolveResult, Solver};
