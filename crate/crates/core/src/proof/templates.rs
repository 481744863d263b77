//! The catalogue of rotation–extension constructions. Each template names
//! the concrete vertices it pivots on; ring arithmetic (`v⁺`, `v⁻`) is
//! resolved against the frame when the splice is built.

use super::splice::{splice_cycle, Frame, Segment, SpliceError, SpliceSpec, Spliced};
use crate::graph::Graph;
use thiserror::Error;

/// Which neighbours of two attachment vertices a bridge joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Successors,
    Predecessors,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    /// `u P u⁺ →C u`: `u` and `u⁺` both reach an off-frame component;
    /// `connector` lists the internal vertices of a `u–u⁺` path through it.
    AdjacentAttachment { u: usize, connector: Vec<usize> },
    /// `u P v ←C u⁺ Q v⁺ →C u` (or the predecessor mirror
    /// `u P v →C u⁻ Q v⁻ ←C u`). `through` is the interior of `P`, `bridge`
    /// the interior of `Q`, both off the frame.
    BridgedAttachments { u: usize, v: usize, through: Vec<usize>, bridge: Vec<usize>, side: Side },
    /// `u xi⁺ →C xj x xi ←C v xj⁺ →C u` with `v = u⁺`.
    CrossedChords { x: usize, u: usize, v: usize, xi: usize, xj: usize },
    /// `x x_next →C u xl⁺ ←C xr⁺ v →C xr x`, for `xl⁺² = x_next`.
    ShortGap { x: usize, u: usize, v: usize, xl: usize, xr: usize, x_next: usize },
    /// `x xr ←C xj⁺ xl⁺² →C u xl⁺ ←C xr⁺ v →C xj x`.
    LowChord { x: usize, u: usize, v: usize, xl: usize, xr: usize, xj: usize },
    /// `x xj ←C xl⁺² xj⁺ →C u xl⁺ ←C xr⁺ v →C xr x`.
    HighChord { x: usize, u: usize, v: usize, xl: usize, xr: usize, xj: usize },
    /// `x yk →C yd⁻ xk1⁺ →C yk⁻ xd yd xd⁺ →C xk1 x`, where `xk1` is the
    /// anchor before `xk`; `xd yd` is one vertex when they coincide.
    WideEndgame { x: usize, xk1: usize, xk: usize, xd: usize, yk: usize, yd: usize },
    /// `x y1 →C x1⁺ x2⁺² →C y3⁻² y1⁻ ←C x3⁺ x1⁺² →C x2⁺ y3⁻ →C x3 x`.
    PetersenEndgame { x: usize, anchors: [usize; 3], ys: [usize; 3] },
    /// `x x2 x2⁺ x1⁻ x3⁺ x2⁻ x1⁺ x3⁻ x3 [via] x1 x` on a nine-vertex cycle.
    HubDetour { x: usize, anchors: [usize; 3], via: Option<usize> },
    /// The `a–b` path `a x1⁺ b⁻ x2⁺ x1⁻ x1 x x2 x2⁻ a⁺ b` with `a = x3`.
    PathClosure { x: usize, anchors: [usize; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("{0} must lie on the frame")]
    OffFrame(usize),
    #[error("{0} must lie off the frame")]
    OnFrame(usize),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error(transparent)]
    Splice(#[from] SpliceError),
    #[error("the result has {output} vertices, not more than the frame's {input}")]
    NotLonger { input: usize, output: usize },
}

impl Template {
    pub fn name(&self) -> &'static str {
        match self {
            Template::AdjacentAttachment { .. } => "adjacent-attachment",
            Template::BridgedAttachments { side: Side::Successors, .. } => "bridged-successors",
            Template::BridgedAttachments { side: Side::Predecessors, .. } => "bridged-predecessors",
            Template::CrossedChords { .. } => "crossed-chords",
            Template::ShortGap { .. } => "short-gap",
            Template::LowChord { .. } => "low-chord",
            Template::HighChord { .. } => "high-chord",
            Template::WideEndgame { .. } => "wide-endgame",
            Template::PetersenEndgame { .. } => "petersen-endgame",
            Template::HubDetour { .. } => "hub-detour",
            Template::PathClosure { .. } => "path-closure",
        }
    }

    fn on_frame(&self) -> Vec<usize> {
        match self {
            Template::AdjacentAttachment { u, .. } => vec![*u],
            Template::BridgedAttachments { u, v, .. } => vec![*u, *v],
            Template::CrossedChords { u, v, xi, xj, .. } => vec![*u, *v, *xi, *xj],
            Template::ShortGap { u, v, xl, xr, x_next, .. } => vec![*u, *v, *xl, *xr, *x_next],
            Template::LowChord { u, v, xl, xr, xj, .. } | Template::HighChord { u, v, xl, xr, xj, .. } => {
                vec![*u, *v, *xl, *xr, *xj]
            }
            Template::WideEndgame { xk1, xk, xd, yk, yd, .. } => vec![*xk1, *xk, *xd, *yk, *yd],
            Template::PetersenEndgame { anchors, ys, .. } => anchors.iter().chain(ys).copied().collect(),
            Template::HubDetour { anchors, .. } | Template::PathClosure { anchors, .. } => anchors.to_vec(),
        }
    }

    fn off_frame(&self) -> Vec<usize> {
        match self {
            Template::AdjacentAttachment { connector, .. } => connector.clone(),
            Template::BridgedAttachments { through, bridge, .. } => through.iter().chain(bridge).copied().collect(),
            Template::CrossedChords { x, .. }
            | Template::ShortGap { x, .. }
            | Template::LowChord { x, .. }
            | Template::HighChord { x, .. }
            | Template::WideEndgame { x, .. }
            | Template::PetersenEndgame { x, .. }
            | Template::PathClosure { x, .. } => vec![*x],
            Template::HubDetour { x, via, .. } => std::iter::once(*x).chain(*via).collect(),
        }
    }

    /// Resolves the template against `frame` into a splice.
    pub fn spec(&self, frame: &Frame) -> Result<SpliceSpec, TemplateError> {
        for v in self.on_frame() {
            if !frame.contains(v) {
                return Err(TemplateError::OffFrame(v));
            }
        }
        for v in self.off_frame() {
            if frame.contains(v) {
                return Err(TemplateError::OnFrame(v));
            }
        }
        let ring = frame.ring();
        let s = |v: usize| ring.succ(v);
        let p = |v: usize| ring.pred(v);
        use Segment::{Backward, Forward, Vertex, Walk};
        let segments = match self {
            Template::AdjacentAttachment { u, connector } => {
                vec![Walk(connector.clone()), Forward { from: s(*u), to: *u }]
            }
            Template::BridgedAttachments { u, v, through, bridge, side } => {
                let (u, v) = (*u, *v);
                match side {
                    Side::Successors => vec![
                        Walk(through.clone()),
                        Backward { from: v, to: s(u) },
                        Walk(bridge.clone()),
                        Forward { from: s(v), to: u },
                    ],
                    Side::Predecessors => vec![
                        Walk(through.clone()),
                        Forward { from: v, to: p(u) },
                        Walk(bridge.clone()),
                        Backward { from: p(v), to: u },
                    ],
                }
            }
            Template::CrossedChords { x, u, v, xi, xj } => {
                if s(*u) != *v {
                    return Err(TemplateError::Precondition("v must follow u on the frame"));
                }
                vec![
                    Forward { from: s(*xi), to: *xj },
                    Vertex(*x),
                    Backward { from: *xi, to: *v },
                    Forward { from: s(*xj), to: *u },
                ]
            }
            Template::ShortGap { x, u, v, xl, xr, x_next } => {
                if s(*u) != *v {
                    return Err(TemplateError::Precondition("v must follow u on the frame"));
                }
                if ring.succ_by(*xl, 2) != *x_next {
                    return Err(TemplateError::Precondition("the next anchor must be two steps past xl"));
                }
                vec![
                    Vertex(*x),
                    Forward { from: *x_next, to: *u },
                    Backward { from: s(*xl), to: s(*xr) },
                    Forward { from: *v, to: *xr },
                ]
            }
            Template::LowChord { x, u, v, xl, xr, xj } => {
                if s(*u) != *v {
                    return Err(TemplateError::Precondition("v must follow u on the frame"));
                }
                vec![
                    Vertex(*x),
                    Backward { from: *xr, to: s(*xj) },
                    Forward { from: ring.succ_by(*xl, 2), to: *u },
                    Backward { from: s(*xl), to: s(*xr) },
                    Forward { from: *v, to: *xj },
                ]
            }
            Template::HighChord { x, u, v, xl, xr, xj } => {
                if s(*u) != *v {
                    return Err(TemplateError::Precondition("v must follow u on the frame"));
                }
                vec![
                    Vertex(*x),
                    Backward { from: *xj, to: ring.succ_by(*xl, 2) },
                    Forward { from: s(*xj), to: *u },
                    Backward { from: s(*xl), to: s(*xr) },
                    Forward { from: *v, to: *xr },
                ]
            }
            Template::WideEndgame { x, xk1, xk: _, xd, yk, yd } => {
                let mut segs = vec![
                    Vertex(*x),
                    Forward { from: *yk, to: p(*yd) },
                    Forward { from: s(*xk1), to: p(*yk) },
                    Vertex(*xd),
                ];
                if yd != xd {
                    segs.push(Vertex(*yd));
                }
                segs.push(Forward { from: s(*xd), to: *xk1 });
                segs
            }
            Template::PetersenEndgame { x, anchors: [x1, x2, x3], ys: [y1, _, y3] } => vec![
                Vertex(*x),
                Forward { from: *y1, to: s(*x1) },
                Forward { from: ring.succ_by(*x2, 2), to: ring.pred_by(*y3, 2) },
                Backward { from: p(*y1), to: s(*x3) },
                Forward { from: ring.succ_by(*x1, 2), to: s(*x2) },
                Forward { from: p(*y3), to: *x3 },
            ],
            Template::HubDetour { x, anchors: [x1, x2, x3], via } => {
                let mut walk = vec![*x, *x2, s(*x2), p(*x1), s(*x3), p(*x2), s(*x1), p(*x3), *x3];
                walk.extend(*via);
                walk.push(*x1);
                vec![Walk(walk)]
            }
            Template::PathClosure { x, anchors: [x1, x2, x3] } => {
                let (a, b) = frame
                    .virtual_edge()
                    .ok_or(TemplateError::Precondition("path closure needs a path frame"))?;
                if *x3 != a {
                    return Err(TemplateError::Precondition("the third anchor must be a"));
                }
                vec![Walk(vec![a, s(*x1), p(b), s(*x2), p(*x1), *x1, *x]), Walk(vec![*x2, p(*x2), s(a), b])]
            }
        };
        Ok(SpliceSpec { name: self.name(), segments })
    }
}

/// Builds and validates the template's splice, requiring a strictly longer
/// cycle (or, in path mode, a strictly longer `a–b` path).
pub fn apply_template(g: &Graph, frame: &Frame, template: &Template) -> Result<Spliced, TemplateError> {
    let spec = template.spec(frame)?;
    let out = splice_cycle(g, frame, &spec)?;
    let input = match frame {
        Frame::Cycle(c) => c.len(),
        Frame::Path(p) => p.path().len(),
    };
    if out.len() <= input {
        return Err(TemplateError::NotLonger { input, output: out.len() });
    }
    Ok(out)
}
