//! How a component off a longest cycle or path may attach to it: no two
//! attachment vertices are consecutive, and no two successors (or two
//! predecessors) of attachment vertices are joined by a path avoiding the
//! frame. Every violation is turned into a longer cycle or path.

use super::splice::Frame;
use super::templates::{apply_template, Side, Template};
use super::{Extension, ProofError};
use crate::graph::{AugmentedCycle, Graph, OrientedCycle, OrientedPath};

/// One component of `G − C` and whether it is a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCheck {
    pub vertices: Vec<usize>,
    pub trivial: bool,
}

pub fn check_component_trivial(g: &Graph, frame: &Frame) -> Vec<ComponentCheck> {
    g.components_without(frame.vertices())
        .into_iter()
        .map(|vertices| ComponentCheck { trivial: vertices.len() == 1, vertices })
        .collect()
}

pub fn cycle_attachment_violations(
    g: &Graph,
    cycle: &OrientedCycle,
    component: &[usize],
) -> Result<Vec<Extension>, ProofError> {
    attachment_violations(g, &Frame::Cycle(cycle.clone()), component)
}

/// Path counterpart: every violation carries a longer path with the same
/// ends.
pub fn path_attachment_violations(
    g: &Graph,
    path: &OrientedPath,
    component: &[usize],
) -> Result<Vec<Extension>, ProofError> {
    attachment_violations(g, &Frame::Path(AugmentedCycle::new(path.clone())?), component)
}

pub(crate) fn attachment_violations(
    g: &Graph,
    frame: &Frame,
    component: &[usize],
) -> Result<Vec<Extension>, ProofError> {
    let mut h = component.to_vec();
    h.sort_unstable();
    if !g.components_without(frame.vertices()).contains(&h) {
        return Err(ProofError::NotAComponent(h));
    }
    let mut in_h = vec![false; g.order()];
    for &v in &h {
        in_h[v] = true;
    }
    let attach = g.neighborhood_of_set(&h);
    let mut is_attach = vec![false; g.order()];
    for &v in &attach {
        is_attach[v] = true;
    }
    let through_h = |u: usize, v: usize| interior_through(g, &in_h, u, v);
    let mut out = Vec::new();
    let mut push = |template: Template| {
        if let Ok(result) = apply_template(g, frame, &template) {
            out.push(Extension { template, result });
        }
    };

    for &u in &attach {
        if let Some(s) = frame.path_succ(u).filter(|&s| is_attach[s]) {
            push(Template::AdjacentAttachment { u, connector: through_h(u, s) });
        }
    }

    let off_frame_outside_h = |w: usize| !frame.contains(w) && !in_h[w];
    for (i, &u) in attach.iter().enumerate() {
        for &v in &attach[i + 1..] {
            for side in [Side::Successors, Side::Predecessors] {
                let step = |w: usize| match side {
                    Side::Successors => frame.path_succ(w),
                    Side::Predecessors => frame.path_pred(w),
                };
                let (Some(su), Some(sv)) = (step(u), step(v)) else { continue };
                if is_attach[su] || is_attach[sv] || su == v || sv == u {
                    continue;
                }
                let Some(q) = g.shortest_path_through(su, sv, off_frame_outside_h) else { continue };
                push(Template::BridgedAttachments {
                    u,
                    v,
                    through: through_h(u, v),
                    bridge: q[1..q.len() - 1].to_vec(),
                    side,
                });
            }
        }
    }
    Ok(out)
}

/// Interior of a shortest `u–v` path whose interior is non-empty and lies in
/// the component marked by `in_h`.
fn interior_through(g: &Graph, in_h: &[bool], u: usize, v: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for h in g.neighbors(u).filter(|&h| in_h[h]) {
        parent[h] = h;
        queue.push_back(h);
    }
    while let Some(h) = queue.pop_front() {
        if g.has_edge(h, v) {
            let mut path = vec![h];
            let mut cur = h;
            while parent[cur] != cur {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for w in g.neighbors(h) {
            if in_h[w] && parent[w] == usize::MAX {
                parent[w] = h;
                queue.push_back(w);
            }
        }
    }
    unreachable!("both ends attach to the same connected component")
}
