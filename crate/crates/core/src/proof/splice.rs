//! Assembling cycles from arcs of an oriented frame and explicit connectors,
//! with full validation of the result.

use crate::graph::{AugmentedCycle, Graph, OrientedCycle, OrientedPath, Ring};
use thiserror::Error;

/// The oriented structure a splice draws its arcs from: a cycle of the graph,
/// or an `a–b` path closed into a ring through the pair `ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Frame {
    Cycle(OrientedCycle),
    Path(AugmentedCycle),
}

impl Frame {
    pub fn ring(&self) -> &Ring {
        match self {
            Frame::Cycle(c) => c.ring(),
            Frame::Path(p) => p.ring(),
        }
    }

    pub fn len(&self) -> usize {
        self.ring().len()
    }

    pub fn is_empty(&self) -> bool {
        self.ring().is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.ring().contains(v)
    }

    pub fn vertices(&self) -> &[usize] {
        self.ring().vertices()
    }

    /// `(a, b)` in path mode.
    pub fn virtual_edge(&self) -> Option<(usize, usize)> {
        match self {
            Frame::Cycle(_) => None,
            Frame::Path(p) => Some(p.virtual_edge()),
        }
    }

    pub fn is_virtual_pair(&self, u: usize, v: usize) -> bool {
        match self {
            Frame::Cycle(_) => false,
            Frame::Path(p) => p.is_virtual_pair(u, v),
        }
    }

    /// Consecutive pairs that are real edges of the frame: every ring pair in
    /// cycle mode, every pair except `ba` in path mode.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.ring().pairs().filter(|&(u, v)| !self.is_virtual_pair(u, v)).collect()
    }

    /// Successor along the underlying cycle or path (`None` past `b`).
    pub fn path_succ(&self, v: usize) -> Option<usize> {
        match self {
            Frame::Cycle(c) => Some(c.succ(v)),
            Frame::Path(p) => p.path().succ(v),
        }
    }

    /// Predecessor along the underlying cycle or path (`None` before `a`).
    pub fn path_pred(&self, v: usize) -> Option<usize> {
        match self {
            Frame::Cycle(c) => Some(c.pred(v)),
            Frame::Path(p) => p.path().pred(v),
        }
    }
}

/// One piece of a splice. Arcs are taken along the frame's ring; an arc with
/// equal endpoints is the single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segment {
    Vertex(usize),
    /// `from →C to`.
    Forward { from: usize, to: usize },
    /// Walk from `from` against the orientation to `to` (`from ←C to` read
    /// right to left).
    Backward { from: usize, to: usize },
    /// Explicit vertices, typically a connector through vertices off the frame.
    Walk(Vec<usize>),
}

/// A named closed sequence of segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceSpec {
    pub name: &'static str,
    pub segments: Vec<Segment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpliceError {
    #[error("arc endpoint {0} is not on the frame")]
    OffFrame(usize),
    #[error("vertex {0} is outside the graph")]
    OutOfRange(usize),
    #[error("no edge joins {0} and {1}")]
    MissingConnector(usize, usize),
    #[error("vertex {0} is visited twice")]
    RepeatedVertex(usize),
    #[error("the splice closes into only {0} vertices")]
    TooShort(usize),
    #[error("the splice never crosses the virtual pair")]
    VirtualEdgeUnused,
    #[error("the splice crosses the virtual pair more than once")]
    VirtualEdgeReused,
}

/// A validated splice: a cycle of the graph, or in path mode the `a–b` path
/// left after cutting the virtual pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spliced {
    Cycle(OrientedCycle),
    Path(OrientedPath),
}

impl Spliced {
    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        match self {
            Spliced::Cycle(c) => c.vertices(),
            Spliced::Path(p) => p.vertices(),
        }
    }
}

/// Expands the segments into a vertex sequence without validation.
pub fn expand(frame: &Frame, spec: &SpliceSpec) -> Result<Vec<usize>, SpliceError> {
    let ring = frame.ring();
    let on = |v: usize| if ring.contains(v) { Ok(v) } else { Err(SpliceError::OffFrame(v)) };
    let mut seq = Vec::new();
    for seg in &spec.segments {
        match seg {
            Segment::Vertex(v) => seq.push(*v),
            Segment::Forward { from, to } => seq.extend(ring.forward(on(*from)?, on(*to)?)),
            Segment::Backward { from, to } => seq.extend(ring.backward(on(*from)?, on(*to)?)),
            Segment::Walk(vs) => seq.extend(vs),
        }
    }
    Ok(seq)
}

/// Builds the closed walk described by `spec` and validates it: distinct
/// vertices, at least three of them, every consecutive pair an edge of `g`.
/// In path mode the pair `ab` must be crossed exactly once (whether or not it
/// is an edge of `g`), and the result is the path obtained by cutting there,
/// oriented from `a` to `b`.
pub fn splice_cycle(g: &Graph, frame: &Frame, spec: &SpliceSpec) -> Result<Spliced, SpliceError> {
    let seq = expand(frame, spec)?;
    let mut seen = vec![false; g.order()];
    for &v in &seq {
        if v >= g.order() {
            return Err(SpliceError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(SpliceError::RepeatedVertex(v));
        }
    }
    if seq.len() < 3 {
        return Err(SpliceError::TooShort(seq.len()));
    }
    let len = seq.len();
    let mut cut = None;
    for i in 0..len {
        let (u, v) = (seq[i], seq[(i + 1) % len]);
        if frame.is_virtual_pair(u, v) {
            if cut.replace(i).is_some() {
                return Err(SpliceError::VirtualEdgeReused);
            }
        } else if !g.has_edge(u, v) {
            return Err(SpliceError::MissingConnector(u, v));
        }
    }
    match frame.virtual_edge() {
        None => Ok(Spliced::Cycle(OrientedCycle::new(g, seq).expect("validated above"))),
        Some((a, _)) => {
            let i = cut.ok_or(SpliceError::VirtualEdgeUnused)?;
            let mut path: Vec<usize> = seq[i + 1..].iter().chain(&seq[..=i]).copied().collect();
            if path[0] != a {
                path.reverse();
            }
            Ok(Spliced::Path(OrientedPath::new(g, path).expect("validated above")))
        }
    }
}
