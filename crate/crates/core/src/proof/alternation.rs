//! Replays the case analysis along the frame: every edge should join a
//! vertex of `N(X)` to one outside it. An edge with both ends outside gives
//! an induced `K₂ ∪ kK₁`; an edge with both ends inside is fed through the
//! template catalogue until a longer cycle appears or the k = 3 endgame
//! pins the graph down as Petersen.

use super::attachment::attachment_violations;
use super::configuration::{build_outside_configuration, OutsideConfiguration};
use super::splice::Frame;
use super::templates::{apply_template, Template};
use super::{Extension, ProofError};
use crate::class::PatternWitness;
use crate::graph::{is_petersen, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlternationOutcome {
    /// A construction produced a strictly longer cycle or `a–b` path.
    LongerCycle(Extension),
    /// Membership in `N(X)` alternates along the frame; the sorted set
    /// `N(X) ∩ V(C)` is recorded.
    Alternating { in_nx: Vec<usize> },
    /// The endgame wiring is complete and the graph is Petersen.
    PetersenDetected,
    /// An edge with both ends outside `N(X)` together with `k` vertices of
    /// `X` induces the forbidden pattern.
    FreenessViolation(PatternWitness),
    /// An edge inside `N(X)` that no template resolves. Only reachable when
    /// the degree or freeness hypotheses fail.
    Stuck { edge: (usize, usize), reason: &'static str },
}

/// Actual against predicted neighbourhoods of `y_i⁻` in `X` and of `x_i⁺` in
/// `Y`, with anchor indices taken modulo `d`. A prediction is only meaningful
/// when the vertex meets the other set at all, so it is `None` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorDiagnostic {
    pub index: usize,
    pub pred_in_x: Vec<usize>,
    pub pred_in_x_expected: Option<Vec<usize>>,
    pub succ_in_y: Vec<usize>,
    pub succ_in_y_expected: Option<Vec<usize>>,
}

impl AnchorDiagnostic {
    pub fn consistent(&self) -> bool {
        self.pred_in_x_expected.as_ref().is_none_or(|e| *e == self.pred_in_x)
            && self.succ_in_y_expected.as_ref().is_none_or(|e| *e == self.succ_in_y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationReport {
    pub outcome: AlternationOutcome,
    pub diagnostics: Vec<AnchorDiagnostic>,
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn diagnostics(g: &Graph, cfg: &OutsideConfiguration) -> Vec<AnchorDiagnostic> {
    let ring = cfg.frame().ring();
    let (d, k) = (cfg.d(), cfg.k());
    let succ: Vec<usize> = cfg.anchors().iter().map(|&v| ring.succ(v)).collect();
    let pred: Vec<usize> = cfg.ys().iter().map(|&v| ring.pred(v)).collect();
    let hits = |v: usize, set: &[usize]| sorted(set.iter().copied().filter(|&w| g.has_edge(v, w)).collect());
    (0..d)
        .map(|i| {
            let pred_in_x = hits(pred[i], cfg.x_set());
            let succ_in_y = hits(succ[i], cfg.y_set());
            let width = (d + 2).saturating_sub(k);
            let pred_in_x_expected = (!pred_in_x.is_empty())
                .then(|| sorted((0..width).map(|t| succ[(i + k - 2 + t) % d]).collect()));
            let succ_in_y_expected =
                (!succ_in_y.is_empty()).then(|| sorted((1..=width).map(|t| pred[(i + t) % d]).collect()));
            AnchorDiagnostic { index: i, pred_in_x, pred_in_x_expected, succ_in_y, succ_in_y_expected }
        })
        .collect()
}

/// Runs the alternation analysis for one configuration.
pub fn analyze_alternation(g: &Graph, cfg: &OutsideConfiguration) -> Result<AlternationReport, ProofError> {
    cfg.validate(g)?;
    if cfg.k() < 2 {
        return Err(ProofError::Inconsistent("k must be at least 2"));
    }
    let diagnostics = diagnostics(g, cfg);
    let outcome = outcome(g, cfg)?;
    Ok(AlternationReport { outcome, diagnostics })
}

fn outcome(g: &Graph, cfg: &OutsideConfiguration) -> Result<AlternationOutcome, ProofError> {
    let frame = cfg.frame();
    if let Some(e) = attachment_violations(g, frame, &[cfg.x()])?.into_iter().next() {
        return Ok(AlternationOutcome::LongerCycle(e));
    }
    let in_nx = {
        let mut hit = vec![false; g.order()];
        for v in g.neighborhood_of_set(cfg.x_set()) {
            hit[v] = true;
        }
        hit
    };
    for (u, v) in frame.edges() {
        match (in_nx[u], in_nx[v]) {
            (false, false) => return Ok(both_outside(g, cfg, u, v)),
            (true, true) => return both_inside(g, cfg, u, v),
            _ => {}
        }
    }
    let on_frame = sorted(frame.vertices().iter().copied().filter(|&v| in_nx[v]).collect());
    Ok(AlternationOutcome::Alternating { in_nx: on_frame })
}

fn both_outside(g: &Graph, cfg: &OutsideConfiguration, u: usize, v: usize) -> AlternationOutcome {
    let k = cfg.k();
    let isolated: Vec<usize> = cfg.x_set().iter().copied().filter(|&w| w != u && w != v).take(k).collect();
    let witness = PatternWitness { edge: (u.min(v), u.max(v)), isolated };
    if witness.isolated.len() == k && witness.is_valid_in(g) {
        AlternationOutcome::FreenessViolation(witness)
    } else {
        AlternationOutcome::Stuck { edge: (u, v), reason: "both ends miss N(X) but X has fewer than k other vertices" }
    }
}

/// Anchor roles relative to one rotation: `xs[i] = x_{i+1}`.
struct Roles<'a> {
    frame: &'a Frame,
    x: usize,
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl Roles<'_> {
    fn rotated(cfg: &OutsideConfiguration, start: usize) -> Roles<'_> {
        let d = cfg.d();
        Roles {
            frame: cfg.frame(),
            x: cfg.x(),
            xs: (0..d).map(|i| cfg.anchors()[(start + i) % d]).collect(),
            ys: (0..d).map(|i| cfg.ys()[(start + i) % d]).collect(),
        }
    }

    fn plus(&self, i: usize) -> usize {
        self.frame.ring().succ(self.xs[i])
    }
}

fn both_inside(g: &Graph, cfg: &OutsideConfiguration, u: usize, v: usize) -> Result<AlternationOutcome, ProofError> {
    let frame = cfg.frame();
    let ring = frame.ring();
    let d = cfg.d();
    let b = frame.virtual_edge().map(|(_, b)| b);
    let first = (0..d)
        .min_by_key(|&i| ring.forward_distance(v, cfg.anchors()[i]))
        .expect("at least one anchor");
    let roles = Roles::rotated(cfg, first);
    let x = roles.x;
    let attempt = |t: Template| apply_template(g, frame, &t).ok().map(|result| Extension { template: t, result });
    let found = |e: Extension| Ok(AlternationOutcome::LongerCycle(e));

    for i in 0..d {
        for j in i + 1..d {
            if g.has_edge(u, roles.plus(i)) && g.has_edge(v, roles.plus(j)) {
                let t = Template::CrossedChords { x, u, v, xi: roles.xs[i], xj: roles.xs[j] };
                if let Some(e) = attempt(t) {
                    return found(e);
                }
            }
        }
    }

    let r = (0..d).rev().find(|&i| g.has_edge(v, roles.plus(i)));
    let l = (0..d).find(|&i| g.has_edge(u, roles.plus(i)) && Some(roles.plus(i)) != b);
    let (Some(r), Some(l)) = (r, l) else {
        return Ok(AlternationOutcome::Stuck { edge: (u, v), reason: "an end of the edge misses the successors" });
    };
    let (xl, xr) = (roles.xs[l], roles.xs[r]);
    let xl2 = ring.succ_by(xl, 2);
    if l + 1 < d && xl2 == roles.xs[l + 1] {
        let t = Template::ShortGap { x, u, v, xl, xr, x_next: roles.xs[l + 1] };
        if let Some(e) = attempt(t) {
            return found(e);
        }
    }
    for j in (0..d).filter(|&j| j != l && g.has_edge(xl2, roles.plus(j))) {
        let xj = roles.xs[j];
        let t = if j < r {
            Template::LowChord { x, u, v, xl, xr, xj }
        } else if j > l {
            Template::HighChord { x, u, v, xl, xr, xj }
        } else {
            continue;
        };
        if let Some(e) = attempt(t) {
            return found(e);
        }
    }

    let k = cfg.k();
    for s in 0..d {
        let rot = Roles::rotated(cfg, s);
        if d >= k && k >= 3 {
            let t = Template::WideEndgame {
                x,
                xk1: rot.xs[k - 2],
                xk: rot.xs[k - 1],
                xd: rot.xs[d - 1],
                yk: rot.ys[k - 1],
                yd: rot.ys[d - 1],
            };
            if let Some(e) = attempt(t) {
                return found(e);
            }
        }
        if d == 3 {
            let anchors = [rot.xs[0], rot.xs[1], rot.xs[2]];
            let ys = [rot.ys[0], rot.ys[1], rot.ys[2]];
            if let Some(e) = attempt(Template::PetersenEndgame { x, anchors, ys }) {
                return found(e);
            }
            match frame {
                Frame::Cycle(_) => {
                    let vias = std::iter::once(None).chain(
                        (0..g.order())
                            .filter(|&y| y != x && !frame.contains(y))
                            .filter(|&y| g.has_edge(y, anchors[0]) && g.has_edge(y, anchors[2]))
                            .map(Some),
                    );
                    for via in vias {
                        if let Some(e) = attempt(Template::HubDetour { x, anchors, via }) {
                            return found(e);
                        }
                    }
                }
                Frame::Path(_) => {
                    if let Some(e) = attempt(Template::PathClosure { x, anchors }) {
                        return found(e);
                    }
                }
            }
        }
    }

    if petersen_wiring(g, cfg) {
        assert!(is_petersen(g), "endgame wiring confirmed but the isomorphism test disagrees");
        return Ok(AlternationOutcome::PetersenDetected);
    }
    Ok(AlternationOutcome::Stuck { edge: (u, v), reason: "no template applies" })
}

/// `E(G) = E(C) ∪ {xx₁, xx₂, xx₃, x₁⁺x₃⁻, x₂⁺x₁⁻, x₃⁺x₂⁻}` on ten vertices
/// with the anchors three apart on a nine-cycle.
fn petersen_wiring(g: &Graph, cfg: &OutsideConfiguration) -> bool {
    let frame = cfg.frame();
    if !matches!(frame, Frame::Cycle(_)) || frame.len() != 9 || g.order() != 10 || cfg.d() != 3 || g.size() != 15 {
        return false;
    }
    let ring = frame.ring();
    let a = cfg.anchors();
    if (0..3).any(|i| ring.succ_by(a[i], 3) != a[(i + 1) % 3]) {
        return false;
    }
    let mut expected: Vec<(usize, usize)> = frame.edges();
    expected.extend(a.iter().map(|&v| (cfg.x(), v)));
    expected.extend((0..3).map(|i| (ring.succ(a[i]), ring.pred(a[(i + 2) % 3]))));
    expected.iter().all(|&(u, v)| g.has_edge(u, v))
}

/// Tries every vertex off the frame in increasing order and returns the first
/// longer cycle found, or otherwise the outcome for the first vertex.
pub fn extend_via_outside_vertex(g: &Graph, frame: &Frame, k: usize) -> Result<AlternationReport, ProofError> {
    let outside: Vec<usize> = (0..g.order()).filter(|&v| !frame.contains(v)).collect();
    if outside.is_empty() {
        return Err(ProofError::NoOutsideVertex);
    }
    if let Some(c) = super::check_component_trivial(g, frame).into_iter().find(|c| !c.trivial) {
        if let Some(e) = attachment_violations(g, frame, &c.vertices)?.into_iter().next() {
            return Ok(AlternationReport { outcome: AlternationOutcome::LongerCycle(e), diagnostics: Vec::new() });
        }
        return Err(ProofError::NontrivialComponent(c.vertices));
    }
    let mut first = None;
    for &x in &outside {
        let report = match build_outside_configuration(g, frame.clone(), x, k) {
            Ok(cfg) => analyze_alternation(g, &cfg)?,
            Err(ProofError::NotLongest(e)) => {
                AlternationReport { outcome: AlternationOutcome::LongerCycle(*e), diagnostics: Vec::new() }
            }
            Err(ProofError::NoAnchors(_)) if first.is_some() => continue,
            Err(e) => return Err(e),
        };
        if matches!(report.outcome, AlternationOutcome::LongerCycle(_)) {
            return Ok(report);
        }
        first.get_or_insert(report);
    }
    Ok(first.expect("at least one outside vertex"))
}
