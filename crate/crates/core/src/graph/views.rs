//! Oriented cycle and path views over a host graph.
//!
//! A [`Ring`] is a cyclic vertex order with successor/predecessor arithmetic
//! and arc extraction. [`OrientedCycle`] is a ring whose consecutive vertices
//! are all adjacent in the host. [`AugmentedCycle`] closes an a–b path into a
//! ring through the pair `ab`, which need not be an edge of the host.

use super::{Graph, GraphError};

const OFF: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Ring {
    /// A cyclic order of distinct vertices drawn from `0..host_order`.
    pub fn new(host_order: usize, order: Vec<usize>) -> Result<Self, GraphError> {
        let mut position = vec![OFF; host_order];
        for (i, &v) in order.iter().enumerate() {
            if v >= host_order {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: host_order });
            }
            if position[v] != OFF {
                return Err(GraphError::RepeatedVertex(v));
            }
            position[v] = i;
        }
        Ok(Ring { order, position })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.order
    }

    pub fn host_order(&self) -> usize {
        self.position.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.position.len() && self.position[v] != OFF
    }

    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.contains(v).then(|| self.position[v])
    }

    fn pos(&self, v: usize) -> usize {
        match self.index_of(v) {
            Some(p) => p,
            None => panic!("vertex {v} is not on the ring"),
        }
    }

    /// `v⁺ʰ`. Panics if `v` is not on the ring.
    pub fn succ_by(&self, v: usize, h: usize) -> usize {
        let len = self.order.len();
        self.order[(self.pos(v) + h % len) % len]
    }

    /// `v⁻ʰ`. Panics if `v` is not on the ring.
    pub fn pred_by(&self, v: usize, h: usize) -> usize {
        let len = self.order.len();
        self.order[(self.pos(v) + len - h % len) % len]
    }

    pub fn succ(&self, v: usize) -> usize {
        self.succ_by(v, 1)
    }

    pub fn pred(&self, v: usize) -> usize {
        self.pred_by(v, 1)
    }

    /// Number of forward steps from `u` to `v`.
    pub fn forward_distance(&self, u: usize, v: usize) -> usize {
        let len = self.order.len();
        (self.pos(v) + len - self.pos(u)) % len
    }

    /// Vertices of `u →C v`, from `u` to `v` along the orientation.
    pub fn forward(&self, u: usize, v: usize) -> Vec<usize> {
        let steps = self.forward_distance(u, v);
        let start = self.pos(u);
        let len = self.order.len();
        (0..=steps).map(|i| self.order[(start + i) % len]).collect()
    }

    /// Vertices met walking from `u` against the orientation until `v`.
    /// As a vertex set this is `v →C u`.
    pub fn backward(&self, u: usize, v: usize) -> Vec<usize> {
        let mut arc = self.forward(v, u);
        arc.reverse();
        arc
    }

    /// `I⁺`.
    pub fn successors_of(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&v| self.succ(v)).collect()
    }

    /// `I⁻`.
    pub fn predecessors_of(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&v| self.pred(v)).collect()
    }

    /// Consecutive pairs `(v, v⁺)` in ring order, including the closing pair.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.order.len();
        (0..len).map(move |i| (self.order[i], self.order[(i + 1) % len]))
    }
}

/// A cycle of the host graph with a fixed orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCycle {
    ring: Ring,
}

impl OrientedCycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::CycleTooShort(vertices.len()));
        }
        let ring = Ring::new(g.order(), vertices)?;
        if let Some((u, v)) = ring.pairs().find(|&(u, v)| !g.has_edge(u, v)) {
            return Err(GraphError::MissingEdge(u, v));
        }
        Ok(OrientedCycle { ring })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Same cycle, opposite orientation, starting from the same vertex.
    pub fn reversed(&self) -> OrientedCycle {
        let mut order = self.ring.order.clone();
        order[1..].reverse();
        OrientedCycle {
            ring: Ring::new(self.ring.host_order(), order).expect("reversal keeps vertices distinct"),
        }
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.ring.order
    }
}

impl std::ops::Deref for OrientedCycle {
    type Target = Ring;

    fn deref(&self) -> &Ring {
        &self.ring
    }
}

/// A path of the host graph oriented from its first to its last vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedPath {
    vertices: Vec<usize>,
    position: Vec<usize>,
}

impl OrientedPath {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::PathTooShort { expected: 1, got: 0 });
        }
        let ring = Ring::new(g.order(), vertices)?;
        if let Some(w) = ring.order.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(GraphError::MissingEdge(w[0], w[1]));
        }
        Ok(OrientedPath {
            vertices: ring.order,
            position: ring.position,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.position.len() && self.position[v] != OFF
    }

    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.contains(v).then(|| self.position[v])
    }

    /// `v⁺`, undefined at the last vertex.
    pub fn succ(&self, v: usize) -> Option<usize> {
        self.index_of(v).and_then(|i| self.vertices.get(i + 1).copied())
    }

    /// `v⁻`, undefined at the first vertex.
    pub fn pred(&self, v: usize) -> Option<usize> {
        self.index_of(v)
            .and_then(|i| i.checked_sub(1))
            .map(|i| self.vertices[i])
    }

    /// `xPy`: the subpath between `x` and `y`, listed from `x` to `y`.
    pub fn segment(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Some(if i <= j {
            self.vertices[i..=j].to_vec()
        } else {
            self.vertices[j..=i].iter().rev().copied().collect()
        })
    }

    pub fn reversed(&self) -> OrientedPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut position = self.position.clone();
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        OrientedPath { vertices, position }
    }
}

/// `C = P + ab`: an a–b path closed into a ring through the pair `ab`.
///
/// The ring orientation follows the path, so `b⁺ = a` and `a⁻ = b`. The
/// closing pair is virtual: the host graph may or may not contain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedCycle {
    path: OrientedPath,
    ring: Ring,
}

impl AugmentedCycle {
    pub fn new(path: OrientedPath) -> Result<Self, GraphError> {
        if path.len() < 2 {
            return Err(GraphError::PathTooShort { expected: 2, got: path.len() });
        }
        let ring = Ring {
            order: path.vertices.clone(),
            position: path.position.clone(),
        };
        Ok(AugmentedCycle { path, ring })
    }

    pub fn path(&self) -> &OrientedPath {
        &self.path
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The pair `(a, b)`.
    pub fn virtual_edge(&self) -> (usize, usize) {
        (self.path.first(), self.path.last())
    }

    pub fn is_virtual_pair(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.virtual_edge();
        (u, v) == (a, b) || (u, v) == (b, a)
    }
}
