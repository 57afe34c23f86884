//! Generalised colouring numbers: weak/strong reachability, admissibility,
//! exact solvers for small graphs, tree-decomposition orders, extremal
//! constructions, neighbourhood covers and supporting experiments.

pub mod cover;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod expansion;
pub mod extremal;
pub mod graph;
pub mod heuristics;
pub mod order;
pub mod packing;
pub mod reach;
pub mod reduction;
pub mod td;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph, Vertex};
pub use order::LinearOrder;

/// Exact rational arithmetic used for reported statistics.
pub type Rational = num_rational::Ratio<i64>;
