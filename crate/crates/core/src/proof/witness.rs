//! The independent set a non-hamiltonian graph of the class must contain:
//! the vertices of a longest cycle (or longest `a–b` path) outside `N(X)`,
//! together with every vertex off it.

use super::alternation::{analyze_alternation, AlternationOutcome};
use super::configuration::build_outside_configuration;
use super::splice::Frame;
use super::ProofError;
use crate::class::is_pattern_free;
use crate::graph::{is_petersen, AugmentedCycle, Graph};
use crate::invariants::{
    hamiltonian_ab_path, hamiltonian_cycle, longest_ab_path, longest_cycle, min_degree, vertex_connectivity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Cycle,
    Path { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Sorted and independent.
    pub set: Vec<usize>,
    pub n: usize,
    /// The longest cycle or path the set was read from.
    pub frame: Vec<usize>,
    /// The outside vertex the configuration was built around.
    pub x: usize,
}

impl Witness {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

fn hypothesis_failures(g: &Graph, k: usize, mode: Mode) -> Result<Vec<String>, ProofError> {
    let mut failed = Vec::new();
    if k < 2 {
        failed.push("k ≥ 2".to_string());
        return Ok(failed);
    }
    let (need_kappa, degree_ok) = match mode {
        Mode::Cycle => (k, 2 * min_degree(g)? >= 3 * (k - 1)),
        Mode::Path { .. } => (k + 1, 2 * min_degree(g)? + 1 >= 3 * k),
    };
    if vertex_connectivity(g) < need_kappa {
        failed.push(format!("κ ≥ {need_kappa}"));
    }
    if !is_pattern_free(g, k)? {
        failed.push(format!("K₂ ∪ {k}K₁-free"));
    }
    if !degree_ok {
        failed.push(match mode {
            Mode::Cycle => "2δ ≥ 3(k−1)".to_string(),
            Mode::Path { .. } => "2δ ≥ 3k−1".to_string(),
        });
    }
    Ok(failed)
}

/// Replays the argument on `g` and returns the independent set it produces,
/// of size more than `n/2` in cycle mode and at least `n/2` in path mode.
pub fn witness_independent_set(g: &Graph, k: usize, mode: Mode) -> Result<Witness, ProofError> {
    let n = g.order();
    if let Mode::Path { a, b } = mode {
        for v in [a, b] {
            if v >= n {
                return Err(ProofError::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(ProofError::HypothesisFailure(vec!["a ≠ b".to_string()]));
        }
    }
    let failed = hypothesis_failures(g, k, mode)?;
    if !failed.is_empty() {
        return Err(ProofError::HypothesisFailure(failed));
    }
    let frame = match mode {
        Mode::Cycle => {
            if hamiltonian_cycle(g)?.is_some() {
                return Err(ProofError::Hamiltonian);
            }
            if k == 3 && is_petersen(g) {
                return Err(ProofError::Exceptional);
            }
            Frame::Cycle(longest_cycle(g)?.ok_or_else(|| ProofError::ProofFailure("no cycle at all".into()))?)
        }
        Mode::Path { a, b } => {
            if hamiltonian_ab_path(g, a, b)?.is_some() {
                return Err(ProofError::SpanningPath(a, b));
            }
            Frame::Path(AugmentedCycle::new(longest_ab_path(g, a, b)?)?)
        }
    };
    let x = (0..n).find(|&v| !frame.contains(v)).expect("the frame is not spanning");
    let failure = |what: String| ProofError::ProofFailure(what);
    let cfg = build_outside_configuration(g, frame.clone(), x, k)
        .map_err(|e| failure(format!("configuration around {x}: {e}")))?;
    let in_nx = match analyze_alternation(g, &cfg)?.outcome {
        AlternationOutcome::Alternating { in_nx } => in_nx,
        other => return Err(failure(format!("expected alternation, got {other:?}"))),
    };
    let set: Vec<usize> = (0..n).filter(|v| !in_nx.contains(v)).collect();
    if !g.is_independent_set(&set) {
        return Err(failure(format!("{set:?} is not independent")));
    }
    let large = match mode {
        Mode::Cycle => 2 * set.len() > n,
        Mode::Path { .. } => 2 * set.len() >= n,
    };
    if !large {
        return Err(failure(format!("{} vertices do not reach half of {n}", set.len())));
    }
    Ok(Witness { set, n, frame: frame.vertices().to_vec(), x })
}
