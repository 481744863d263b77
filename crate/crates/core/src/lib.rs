//! Exact machinery for hamiltonian-type results on graphs that forbid an
//! induced edge plus `k` isolated vertices.

pub mod class;
pub mod families;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod proof;

pub use graph::{Graph, GraphError, InducedSubgraph, OrientedCycle, OrientedPath};
