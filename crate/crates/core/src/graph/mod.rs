//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one packed bitset row per vertex. A [`Graph`] is
//! immutable once built; every derived graph (union, join, induced subgraph)
//! is a fresh value.

mod canon;
pub mod format;
mod views;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, is_petersen};
pub use views::{AugmentedCycle, OrientedCycle, OrientedPath, Ring};

use thiserror::Error;

/// Largest order for which the exponential solvers run on `u64` vertex masks.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} appears in both sides of the join")]
    OverlappingSides(usize),
    #[error("vertex {0} listed twice")]
    RepeatedVertex(usize),
    #[error("{0} and {1} are consecutive but not adjacent")]
    MissingEdge(usize, usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("a path needs at least {expected} vertices, got {got}")]
    PathTooShort { expected: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus both index maps.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is `Some(i)` when host vertex `v` became vertex `i`.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the host vertex behind subgraph vertex `i`.
    pub new_to_old: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_host(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.new_to_old[v]).collect()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either order)
    /// collapse to one edge; self-loops and out-of-range endpoints are errors.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_vertices(&self, vs: &[usize]) -> Result<(), GraphError> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            BitIter(w).map(move |b| wi * 64 + b)
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency rows as `u64` masks; `None` when the graph has more than
    /// [`MASK_LIMIT`] vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= MASK_LIMIT).then(|| (0..self.n).map(|v| self.bits[v * self.words]).collect())
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + shift, v + shift);
        }
        g
    }

    /// Adds every edge between `a` and `b`.
    pub fn join_all(&self, a: &[usize], b: &[usize]) -> Result<Graph, GraphError> {
        self.check_vertices(a)?;
        self.check_vertices(b)?;
        if let Some(&v) = a.iter().find(|v| b.contains(v)) {
            return Err(GraphError::OverlappingSides(v));
        }
        let mut g = self.clone();
        for &u in a {
            for &v in b {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The subgraph induced by `vertices`, reindexed in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        self.check_vertices(vertices)?;
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if old_to_new[v].replace(i).is_some() {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        let mut graph = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for w in self.neighbors(u) {
                if let Some(j) = old_to_new[w] {
                    if i < j {
                        graph.insert_edge(i, j);
                    }
                }
            }
        }
        Ok(InducedSubgraph {
            graph,
            old_to_new,
            new_to_old: vertices.to_vec(),
        })
    }

    /// True iff no edge has both endpoints in `set`. Out-of-range vertices are
    /// never adjacent to anything.
    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices not in `removed`, grouped into connected components. Each
    /// component is sorted; components are ordered by their smallest vertex.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                seen[v] = true;
            }
        }
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_without(&[]).len() == 1
    }

    /// `N(S)`: vertices outside `set` adjacent to some vertex of `set`, sorted.
    pub fn neighborhood_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut hit = vec![false; self.n];
        for &v in set {
            for w in self.neighbors(v) {
                if !inside[w] {
                    hit[w] = true;
                }
            }
        }
        (0..self.n).filter(|&v| hit[v]).collect()
    }

    /// Shortest path from `from` to `to` whose internal vertices all satisfy
    /// `allowed`. Endpoints are not tested against `allowed`.
    pub fn shortest_path_through(
        &self,
        from: usize,
        to: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if parent[w] != usize::MAX {
                    continue;
                }
                if w == to {
                    parent[w] = u;
                    let mut path = vec![to];
                    let mut cur = u;
                    while cur != from {
                        path.push(cur);
                        cur = parent[cur];
                    }
                    path.push(from);
                    path.reverse();
                    return Some(path);
                }
                if allowed(w) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// Iterator over set bit positions of a word.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    BitIter(mask).collect()
}
