//! Exact graph invariants: δ, ω(G − S), κ, α, toughness, Hamiltonicity,
//! Hamiltonian-connectedness and longest cycles and paths.
//!
//! Everything exponential works on `u64` vertex masks and therefore refuses
//! graphs with more than [`MASK_LIMIT`](crate::graph::MASK_LIMIT) vertices.

mod connectivity;
mod hamilton;
mod independence;
mod toughness;

pub use connectivity::{local_connectivity, vertex_connectivity};
pub use hamilton::{
    hamiltonian_ab_path, hamiltonian_ab_path_with, hamiltonian_cycle, hamiltonian_cycle_with,
    is_hamiltonian_connected, is_hamiltonian_connected_with, longest_ab_path, longest_ab_path_with,
    longest_cycle, longest_cycle_with, HamiltonConnectivity, SolverConfig,
};
pub use independence::{independence_number, Independence};
pub(crate) use independence::{independent_mask_of_size, max_independent_mask};
pub use toughness::{is_t_tough, toughness, Toughness, ToughnessReport};

use crate::graph::{Graph, MASK_LIMIT};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("needs at least {needed} vertices, the graph has {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("exact solvers support at most {limit} vertices, the graph has {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("endpoints must differ, both are {0}")]
    SameEndpoints(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{a} and {b} lie in different components")]
    Disconnected { a: usize, b: usize },
}

pub(crate) fn masks(g: &Graph) -> Result<Vec<u64>, InvariantError> {
    g.masks().ok_or(InvariantError::TooLarge { n: g.order(), limit: MASK_LIMIT })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// δ(G).
pub fn min_degree(g: &Graph) -> Result<usize, InvariantError> {
    (0..g.order())
        .map(|v| g.degree(v))
        .min()
        .ok_or(InvariantError::EmptyGraph)
}

/// ω(G − removed): number of components left after deleting `removed`.
/// Indices outside the graph are ignored.
pub fn component_count(g: &Graph, removed: &[usize]) -> usize {
    g.components_without(removed).len()
}
