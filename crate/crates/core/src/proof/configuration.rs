//! The structure around one vertex `x` off a longest cycle or path: its
//! neighbours on the frame in ring order, the set `X` of `x` and their
//! successors, and the mirror set `Y` of predecessors.

use super::attachment::{attachment_violations, check_component_trivial};
use super::splice::Frame;
use super::ProofError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutsideConfiguration {
    frame: Frame,
    x: usize,
    k: usize,
    anchors: Vec<usize>,
    x_set: Vec<usize>,
    ys: Vec<usize>,
    y_set: Vec<usize>,
}

impl OutsideConfiguration {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of anchors: `deg(x)`, or `|N(x) ∖ {b}|` in path mode.
    pub fn d(&self) -> usize {
        self.anchors.len()
    }

    /// `x₁, …, x_d` in ring order starting from the ring's first vertex.
    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// `X = {x, x₁⁺, …, x_d⁺}` with `x` first.
    pub fn x_set(&self) -> &[usize] {
        &self.x_set
    }

    /// `y_i = x_i`, except `y_i = b` where `x_i = a` in path mode.
    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    /// `Y = {x, y₁⁻, …, y_d⁻}` with `x` first.
    pub fn y_set(&self) -> &[usize] {
        &self.y_set
    }
}

/// Assembles the configuration for `x`. When `X` is not independent the
/// frame cannot be longest and the error carries a longer cycle or path.
pub fn build_outside_configuration(
    g: &Graph,
    frame: Frame,
    x: usize,
    k: usize,
) -> Result<OutsideConfiguration, ProofError> {
    if x >= g.order() {
        return Err(ProofError::VertexOutOfRange { vertex: x, n: g.order() });
    }
    if frame.ring().host_order() != g.order() {
        return Err(ProofError::Inconsistent("the frame belongs to a graph of another order"));
    }
    if frame.contains(x) {
        return Err(ProofError::OnFrame(x));
    }
    if let Some(c) = check_component_trivial(g, &frame).into_iter().find(|c| !c.trivial) {
        return Err(ProofError::NontrivialComponent(c.vertices));
    }
    let b = frame.virtual_edge().map(|(_, b)| b);
    let ring = frame.ring();
    let anchors: Vec<usize> =
        ring.vertices().iter().copied().filter(|&v| g.has_edge(x, v) && Some(v) != b).collect();
    if anchors.is_empty() {
        return Err(ProofError::NoAnchors(x));
    }
    let x_set: Vec<usize> = std::iter::once(x).chain(anchors.iter().map(|&v| ring.succ(v))).collect();
    if let Some((u, v)) = first_edge(g, &x_set) {
        let found = attachment_violations(g, &frame, &[x])?;
        return Err(match found.into_iter().next() {
            Some(e) => ProofError::NotLongest(Box::new(e)),
            None => ProofError::NotIndependent(u, v),
        });
    }
    let ys: Vec<usize> = match frame.virtual_edge() {
        Some((a, b)) => anchors.iter().map(|&v| if v == a { b } else { v }).collect(),
        None => anchors.clone(),
    };
    let y_set = std::iter::once(x).chain(ys.iter().map(|&v| ring.pred(v))).collect();
    Ok(OutsideConfiguration { frame, x, k, anchors, x_set, ys, y_set })
}

pub(crate) fn first_edge(g: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    set.iter()
        .enumerate()
        .flat_map(|(i, &u)| set[i + 1..].iter().map(move |&v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v))
}

impl OutsideConfiguration {
    /// Checks that the recorded sets still describe `g`.
    pub(crate) fn validate(&self, g: &Graph) -> Result<(), ProofError> {
        let rebuilt = build_outside_configuration(g, self.frame.clone(), self.x, self.k).map_err(|e| match e {
            ProofError::NotLongest(_) | ProofError::NotIndependent(..) => {
                ProofError::Inconsistent("X is not independent in this graph")
            }
            ProofError::NontrivialComponent(_) => ProofError::Inconsistent("a component off the frame is not trivial"),
            other => other,
        })?;
        if rebuilt != *self {
            return Err(ProofError::Inconsistent("anchors differ from the neighbours of x"));
        }
        Ok(())
    }
}
