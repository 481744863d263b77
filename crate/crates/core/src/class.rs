//! Recognition of graphs with no induced `K₂ ∪ kK₁`, and the neighbourhood
//! structure such graphs impose on independent sets.

use crate::graph::{mask_to_vec, Graph};
use crate::invariants::{independent_mask_of_size, max_independent_mask, InvariantError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} and {1} are adjacent, so the set is not independent")]
    NotIndependent(usize, usize),
    #[error("the graph contains an induced edge plus {} isolated vertices: {:?}", .0.isolated.len(), .0.vertices())]
    NotFree(PatternWitness),
    #[error("vertex {vertex} has {count} neighbours in X, more than the allowed {limit}")]
    TooManyNeighbours { vertex: usize, count: usize, limit: usize },
    #[error("vertex {vertex} has {count} neighbours in X, strictly between 0 and {floor}")]
    Dichotomy { vertex: usize, count: usize, floor: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// An induced copy of `K₂ ∪ kK₁`: the edge plus `k` vertices that are
/// pairwise non-adjacent and adjacent to neither end of the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub edge: (usize, usize),
    pub isolated: Vec<usize>,
}

impl PatternWitness {
    /// All `k + 2` vertices, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all = vec![self.edge.0, self.edge.1];
        all.extend(&self.isolated);
        all.sort_unstable();
        all
    }

    /// Whether the vertices induce exactly one edge, namely `edge`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let (u, v) = self.edge;
        let all = self.vertices();
        let mut distinct = all.clone();
        distinct.dedup();
        if distinct.len() != all.len() || all.iter().any(|&w| w >= g.order()) || !g.has_edge(u, v) {
            return false;
        }
        match g.induced_subgraph(&all) {
            Ok(sub) => sub.graph.size() == 1,
            Err(_) => false,
        }
    }
}

fn check_k(k: usize) -> Result<(), ClassError> {
    if k == 0 {
        Err(ClassError::ZeroK)
    } else {
        Ok(())
    }
}

fn check_set(g: &Graph, set: &[usize]) -> Result<(), ClassError> {
    match set.iter().find(|&&v| v >= g.order()) {
        Some(&vertex) => Err(ClassError::VertexOutOfRange { vertex, n: g.order() }),
        None => Ok(()),
    }
}

fn first_edge_in(g: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    set.iter()
        .enumerate()
        .flat_map(|(i, &u)| set[i + 1..].iter().map(move |&v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v))
}

/// Vertices outside `N[u] ∪ N[v]`, as a mask.
fn residual(adj: &[u64], n: usize, u: usize, v: usize) -> u64 {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    all & !(adj[u] | adj[v] | 1 << u | 1 << v)
}

/// Finds an induced `K₂ ∪ kK₁`, scanning edges in lexicographic order and
/// testing `α(G − N[u] − N[v]) ≥ k` for each.
pub fn contains_induced_pattern(g: &Graph, k: usize) -> Result<Option<PatternWitness>, ClassError> {
    check_k(k)?;
    let adj = crate::invariants::masks(g)?;
    for (u, v) in g.edges() {
        if let Some(found) = independent_mask_of_size(&adj, residual(&adj, g.order(), u, v), k) {
            let isolated = mask_to_vec(found).into_iter().take(k).collect();
            return Ok(Some(PatternWitness { edge: (u, v), isolated }));
        }
    }
    Ok(None)
}

pub fn is_pattern_free(g: &Graph, k: usize) -> Result<bool, ClassError> {
    Ok(contains_induced_pattern(g, k)?.is_none())
}

/// The least `k ≥ 1` for which the graph is free: one more than the largest
/// independence number left after deleting the closed neighbourhoods of an
/// edge, or 1 for edgeless graphs.
pub fn freeness_threshold(g: &Graph) -> Result<usize, ClassError> {
    let adj = crate::invariants::masks(g)?;
    let widest = g
        .edges()
        .map(|(u, v)| max_independent_mask(&adj, residual(&adj, g.order(), u, v)).count_ones() as usize)
        .max();
    Ok(widest.map_or(1, |w| w + 1))
}

/// Split of the vertices by how many neighbours they have in an independent
/// set `X` of a free graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dichotomy {
    /// Vertices outside `X` with no neighbour in `X`.
    pub detached: Vec<usize>,
    /// Vertices with at least `|X| − k + 1` neighbours in `X`.
    pub attached: Vec<usize>,
    /// `max(|X| − k + 1, 1)`.
    pub floor: usize,
}

fn require_independent(g: &Graph, set: &[usize]) -> Result<(), ClassError> {
    check_set(g, set)?;
    match first_edge_in(g, set) {
        Some((u, v)) => Err(ClassError::NotIndependent(u, v)),
        None => Ok(()),
    }
}

fn require_free(g: &Graph, k: usize) -> Result<(), ClassError> {
    match contains_induced_pattern(g, k)? {
        Some(w) => Err(ClassError::NotFree(w)),
        None => Ok(()),
    }
}

/// Every vertex has either no neighbour in `X` or at least `|X| − k + 1`.
/// A vertex strictly in between is reported as [`ClassError::Dichotomy`],
/// which cannot happen in a free graph.
pub fn neighbor_dichotomy(g: &Graph, x: &[usize], k: usize) -> Result<Dichotomy, ClassError> {
    check_k(k)?;
    require_independent(g, x)?;
    require_free(g, k)?;
    let in_x = membership(g, x);
    let floor = (x.len() + 1).saturating_sub(k).max(1);
    let mut detached = Vec::new();
    let mut attached = Vec::new();
    for v in (0..g.order()).filter(|v| !in_x[*v]) {
        let count = g.neighbors(v).filter(|&w| in_x[w]).count();
        if count == 0 {
            detached.push(v);
        } else if count >= floor {
            attached.push(v);
        } else {
            return Err(ClassError::Dichotomy { vertex: v, count, floor });
        }
    }
    Ok(Dichotomy { detached, attached, floor })
}

fn membership(g: &Graph, set: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    for &v in set {
        inside[v] = true;
    }
    inside
}

/// If every `w ∈ W` has at most `|X| − k` neighbours in the independent set
/// `X` of a free graph, then `X ∪ W` is independent. Returns `true` after
/// confirming it; an edge inside `X ∪ W` yields the induced pattern it
/// forms as [`ClassError::NotFree`].
pub fn low_degree_extension(g: &Graph, x: &[usize], w: &[usize], k: usize) -> Result<bool, ClassError> {
    check_k(k)?;
    require_independent(g, x)?;
    check_set(g, w)?;
    let in_x = membership(g, x);
    let limit = x.len().saturating_sub(k);
    for &v in w {
        let count = g.neighbors(v).filter(|&u| in_x[u]).count();
        if count > limit {
            return Err(ClassError::TooManyNeighbours { vertex: v, count, limit });
        }
    }
    let mut union: Vec<usize> = x.iter().chain(w).copied().collect();
    union.sort_unstable();
    union.dedup();
    if let Some((u, v)) = first_edge_in(g, &union) {
        let isolated: Vec<usize> = x
            .iter()
            .copied()
            .filter(|&t| t != u && t != v && !g.has_edge(t, u) && !g.has_edge(t, v))
            .take(k)
            .collect();
        let witness = PatternWitness { edge: (u, v), isolated };
        if witness.isolated.len() == k && witness.is_valid_in(g) {
            return Err(ClassError::NotFree(witness));
        }
        require_free(g, k)?;
        return Err(ClassError::NotIndependent(u, v));
    }
    Ok(true)
}
