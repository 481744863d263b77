//! Classification of a graph against one of the hamiltonicity statements or
//! open problems: which hypotheses hold, whether the conclusion holds, and
//! whether the pair is an allowed exception or a counterexample.

use crate::class::{is_pattern_free, ClassError};
use crate::graph::{is_petersen, Graph};
use crate::invariants::{
    hamiltonian_cycle_with, independence_number, is_hamiltonian_connected_with, toughness, vertex_connectivity,
    SolverConfig, Toughness,
};
use num_rational::Ratio;
use std::fmt;
use std::str::FromStr;

/// The statements a graph can be checked against, addressed by their
/// external ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// 1-tough, `K₂ ∪ 2K₁`-free, at least three vertices ⟹ hamiltonian.
    ToughHamiltonian,
    /// Free, `κ ≥ k`, `2δ ≥ 3(k−1)`, `2α ≤ n` ⟹ hamiltonian or Petersen.
    FreeHamiltonian,
    /// Whether 1-toughness and `k`-connectivity suffice below the degree bound.
    HamiltonianProblem,
    /// Whether toughness above 1 and `(k+1)`-connectivity suffice below the
    /// degree bound.
    ConnectedProblem,
    /// `K₂ ∪ 2K₁`-free with toughness above 1 ⟹ hamiltonian-connected.
    ToughConnected,
    /// Free, `κ ≥ k+1`, `2δ ≥ 3k−1`, `2α < n` ⟹ hamiltonian-connected.
    FreeConnected,
    /// For free `k`-connected graphs, `2α ≤ n` exactly when 1-tough.
    ToughAlphaEquivalence,
    /// For free `(k+1)`-connected graphs, `2α < n` exactly when `t > 1`.
    StrictEquivalence,
}

impl Statement {
    pub const ALL: [Statement; 8] = [
        Statement::ToughHamiltonian,
        Statement::FreeHamiltonian,
        Statement::HamiltonianProblem,
        Statement::ConnectedProblem,
        Statement::ToughConnected,
        Statement::FreeConnected,
        Statement::ToughAlphaEquivalence,
        Statement::StrictEquivalence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::ToughHamiltonian => "1.1",
            Statement::FreeHamiltonian => "1.4",
            Statement::HamiltonianProblem => "1.5",
            Statement::ConnectedProblem => "1.6",
            Statement::ToughConnected => "1.7",
            Statement::FreeConnected => "1.8",
            Statement::ToughAlphaEquivalence => "equivalence-tough-alpha",
            Statement::StrictEquivalence => "equivalence-strict",
        }
    }

    pub fn is_problem(self) -> bool {
        matches!(self, Statement::HamiltonianProblem | Statement::ConnectedProblem)
    }

    /// Whether `k` is meaningful for the statement: exactly 2 for the
    /// `K₂ ∪ 2K₁` results, at least 2 otherwise.
    pub fn accepts_k(self, k: usize) -> bool {
        match self {
            Statement::ToughHamiltonian | Statement::ToughConnected => k == 2,
            _ => k >= 2,
        }
    }

    /// The inclusive δ window the open problems scan, empty when `lo > hi`.
    pub fn degree_window(self, k: usize) -> Option<(usize, usize)> {
        match self {
            Statement::HamiltonianProblem => Some((k, (3 * (k - 1)).div_ceil(2).saturating_sub(1))),
            Statement::ConnectedProblem => Some((k + 1, (3 * k - 1).div_ceil(2).saturating_sub(1))),
            _ => None,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown statement id {0:?}")]
pub struct UnknownStatement(pub String);

impl FromStr for Statement {
    type Err = UnknownStatement;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL.into_iter().find(|st| st.id() == s).ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

/// One hypothesis and its truth value; `None` when evaluation stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    HypothesisFailure,
    Confirmed,
    /// The conclusion fails on the Petersen graph, which the statement allows.
    Exception,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub statement: Statement,
    pub k: usize,
    pub hypotheses: Vec<Hypothesis>,
    /// `None` when hypotheses failed and evaluation stopped early.
    pub conclusion: Option<bool>,
    pub verdict: Verdict,
}

impl Classification {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds == Some(true))
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.hypotheses.iter().filter(|h| h.holds == Some(false)).map(|h| h.name).collect()
    }
}

/// Cached invariants, each computed on first use.
struct Lazy<'a> {
    g: &'a Graph,
    solver: SolverConfig,
    kappa: Option<usize>,
    alpha: Option<usize>,
    tough: Option<Toughness>,
}

impl<'a> Lazy<'a> {
    fn kappa(&mut self) -> usize {
        *self.kappa.get_or_insert_with(|| vertex_connectivity(self.g))
    }

    fn alpha(&mut self) -> Result<usize, ClassError> {
        if let Some(a) = self.alpha {
            return Ok(a);
        }
        let a = independence_number(self.g)?.alpha;
        self.alpha = Some(a);
        Ok(a)
    }

    fn tough(&mut self) -> Result<Toughness, ClassError> {
        if let Some(t) = self.tough {
            return Ok(t);
        }
        let t = toughness(self.g)?.value;
        self.tough = Some(t);
        Ok(t)
    }

    fn delta(&self) -> usize {
        (0..self.g.order()).map(|v| self.g.degree(v)).min().unwrap_or(0)
    }

    fn hamiltonian(&self) -> Result<bool, ClassError> {
        if self.g.order() < 3 {
            return Ok(false);
        }
        Ok(hamiltonian_cycle_with(self.g, &self.solver)?.is_some())
    }

    fn hamiltonian_connected(&self) -> Result<bool, ClassError> {
        if self.g.order() < 2 {
            return Ok(true);
        }
        Ok(is_hamiltonian_connected_with(self.g, &self.solver)?.holds())
    }

    fn petersen(&self) -> bool {
        self.g.order() == 10 && self.g.size() == 15 && is_petersen(self.g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Stop at the first failing hypothesis and skip the conclusion.
    pub short_circuit: bool,
    pub solver: SolverConfig,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { short_circuit: false, solver: SolverConfig::default() }
    }
}

/// Evaluates every hypothesis and the conclusion.
pub fn classify_instance(g: &Graph, k: usize, statement: Statement) -> Result<Classification, ClassError> {
    classify_instance_with(g, k, statement, &ClassifyOptions::default())
}

type Check<'a, 'g> = (&'static str, Box<dyn FnMut(&mut Lazy<'g>) -> Result<bool, ClassError> + 'a>);

pub fn classify_instance_with(
    g: &Graph,
    k: usize,
    statement: Statement,
    opts: &ClassifyOptions,
) -> Result<Classification, ClassError> {
    if k == 0 {
        return Err(ClassError::ZeroK);
    }
    let n = g.order();
    let mut lazy = Lazy { g, solver: opts.solver, kappa: None, alpha: None, tough: None };
    let one = Ratio::from_integer(1u64);
    let free = move |k: usize| -> Box<dyn FnMut(&mut Lazy) -> Result<bool, ClassError>> {
        Box::new(move |l: &mut Lazy| is_pattern_free(l.g, k))
    };
    let window = statement.degree_window(k);
    let mut checks: Vec<Check> = Vec::new();
    match statement {
        Statement::ToughHamiltonian => {
            checks.push(("order", Box::new(move |_| Ok(n >= 3))));
            checks.push(("freeness", free(2)));
            checks.push(("toughness", Box::new(move |l| Ok(l.tough()?.at_least(one)))));
        }
        Statement::ToughConnected => {
            checks.push(("freeness", free(2)));
            checks.push(("toughness", Box::new(move |l| Ok(l.tough()?.exceeds(one)))));
        }
        Statement::FreeHamiltonian => {
            checks.push(("order", Box::new(move |_| Ok(n >= 3))));
            checks.push(("min-degree", Box::new(move |l| Ok(2 * l.delta() >= 3 * (k - 1)))));
            checks.push(("connectivity", Box::new(move |l| Ok(l.kappa() >= k))));
            checks.push(("freeness", free(k)));
            checks.push(("independence", Box::new(move |l| Ok(2 * l.alpha()? <= n))));
        }
        Statement::FreeConnected => {
            checks.push(("min-degree", Box::new(move |l| Ok(2 * l.delta() + 1 >= 3 * k))));
            checks.push(("connectivity", Box::new(move |l| Ok(l.kappa() > k))));
            checks.push(("freeness", free(k)));
            checks.push(("independence", Box::new(move |l| Ok(2 * l.alpha()? < n))));
        }
        Statement::HamiltonianProblem | Statement::ConnectedProblem => {
            let (lo, hi) = window.expect("problems carry a window");
            let hamiltonian = statement == Statement::HamiltonianProblem;
            checks.push(("order", Box::new(move |_| Ok(n >= 3))));
            checks.push(("degree-window", Box::new(move |l| Ok((lo..=hi).contains(&l.delta())))));
            let need = if hamiltonian { k } else { k + 1 };
            checks.push(("connectivity", Box::new(move |l| Ok(l.kappa() >= need))));
            checks.push(("freeness", free(k)));
            checks.push((
                "toughness",
                Box::new(move |l| {
                    let t = l.tough()?;
                    Ok(if hamiltonian { t.at_least(one) } else { t.exceeds(one) })
                }),
            ));
        }
        Statement::ToughAlphaEquivalence => {
            checks.push(("connectivity", Box::new(move |l| Ok(l.kappa() >= k))));
            checks.push(("freeness", free(k)));
        }
        Statement::StrictEquivalence => {
            checks.push(("connectivity", Box::new(move |l| Ok(l.kappa() > k))));
            checks.push(("freeness", free(k)));
        }
    }

    // the Petersen exception of the open problem sits outside its δ window,
    // so it is judged on the remaining hypotheses
    let exempt_window = statement == Statement::HamiltonianProblem && lazy.petersen();
    let mut hypotheses = Vec::with_capacity(checks.len());
    let mut stopped = false;
    for (name, mut check) in checks {
        if stopped {
            hypotheses.push(Hypothesis { name, holds: None });
            continue;
        }
        let holds = check(&mut lazy)?;
        hypotheses.push(Hypothesis { name, holds: Some(holds) });
        if !holds && opts.short_circuit && !(exempt_window && name == "degree-window") {
            stopped = true;
        }
    }
    let base_hold = hypotheses.iter().all(|h| h.holds == Some(true) || (exempt_window && h.name == "degree-window"));
    let all_hold = hypotheses.iter().all(|h| h.holds == Some(true));

    let conclusion = if all_hold || base_hold || !opts.short_circuit {
        Some(match statement {
            Statement::ToughHamiltonian | Statement::FreeHamiltonian | Statement::HamiltonianProblem => {
                lazy.hamiltonian()?
            }
            Statement::ToughConnected | Statement::FreeConnected | Statement::ConnectedProblem => {
                lazy.hamiltonian_connected()?
            }
            Statement::ToughAlphaEquivalence => (2 * lazy.alpha()? <= n) == lazy.tough()?.at_least(one),
            Statement::StrictEquivalence => (2 * lazy.alpha()? < n) == lazy.tough()?.exceeds(one),
        })
    } else {
        None
    };

    let petersen_allowed = matches!(statement, Statement::FreeHamiltonian | Statement::HamiltonianProblem);
    let verdict = if exempt_window && base_hold && conclusion == Some(false) {
        Verdict::Exception
    } else if !all_hold {
        Verdict::HypothesisFailure
    } else if conclusion == Some(true) {
        Verdict::Confirmed
    } else if petersen_allowed && lazy.petersen() {
        Verdict::Exception
    } else {
        Verdict::Counterexample
    };
    Ok(Classification { statement, k, hypotheses, conclusion, verdict })
}
