//! Verification campaigns: classify every graph of a source against one
//! statement and tally the outcome.

use super::enumerate::{chunk, enumerate_graphs_with, Filters, DEFAULT_MAX_ORDER, LONG_RUN_MAX_ORDER};
use super::report::VerificationReport;
use super::sample::sample_graph;
use super::HarnessError;
use crate::graph::{canonical_form, Graph};
use crate::invariants::SolverConfig;
use crate::proof::{classify_instance_with, ClassifyOptions, Statement, Verdict};
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    /// Every isomorphism class with `n_min ≤ n ≤ n_max` meeting the filters.
    Exhaustive { n_min: usize, n_max: usize, filters: Filters },
    /// `count` seeded samples with orders in `n_min..=n_max`.
    Sample { count: u64, n_min: usize, n_max: usize, p: f64, seed: u64 },
    /// Explicit graphs.
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub jobs: usize,
    /// Lifts the exhaustive cap to the long-run order.
    pub long_run: bool,
    pub solver: SolverConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { jobs: 1, long_run: false, solver: SolverConfig::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    scanned: u64,
    hypotheses_ok: u64,
    conclusion_ok: u64,
    exceptions: BTreeSet<Vec<u8>>,
    counterexamples: BTreeSet<Vec<u8>>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.scanned += other.scanned;
        self.hypotheses_ok += other.hypotheses_ok;
        self.conclusion_ok += other.conclusion_ok;
        self.exceptions.extend(other.exceptions);
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

fn materialize(sources: &[Source], cfg: &RunConfig) -> Result<Vec<Graph>, HarnessError> {
    let cap = if cfg.long_run { LONG_RUN_MAX_ORDER } else { DEFAULT_MAX_ORDER };
    for source in sources {
        if let Source::Exhaustive { n_min, n_max, .. } = source {
            if n_min > n_max {
                return Err(HarnessError::EmptyRange { lo: *n_min, hi: *n_max });
            }
            if *n_min == 0 || *n_max > cap {
                return Err(HarnessError::OrderOutOfRange { n: if *n_min == 0 { 0 } else { *n_max }, cap });
            }
        }
    }
    let mut graphs = Vec::new();
    for source in sources {
        match source {
            Source::Exhaustive { n_min, n_max, filters } => {
                for n in *n_min..=*n_max {
                    graphs.extend(enumerate_graphs_with(n, filters.clone(), cap, cfg.jobs)?.into_graphs());
                }
            }
            Source::Sample { count, n_min, n_max, p, seed } => {
                for i in 0..*count {
                    graphs.push(sample_graph(*seed, i, *n_min, *n_max, *p)?);
                }
            }
            Source::Graphs(list) => graphs.extend(list.iter().cloned()),
        }
    }
    Ok(graphs)
}

fn describe(sources: &[Source], graphs: &[Graph]) -> ([usize; 2], Vec<String>, Option<u64>) {
    let lo = graphs.iter().map(Graph::order).min().unwrap_or(0);
    let hi = graphs.iter().map(Graph::order).max().unwrap_or(0);
    let mut filters = Vec::new();
    let mut seed = None;
    for source in sources {
        match source {
            Source::Exhaustive { filters: f, .. } => filters.extend(f.labels()),
            Source::Sample { p, seed: s, count, .. } => {
                filters.push(format!("sample={count}"));
                filters.push(format!("p={p}"));
                seed = Some(*s);
            }
            Source::Graphs(list) => filters.push(format!("explicit={}", list.len())),
        }
    }
    ([lo, hi], filters, seed)
}

fn classify_all(statement: Statement, k: usize, graphs: &[Graph], cfg: &RunConfig) -> Result<Tally, HarnessError> {
    let opts = ClassifyOptions { short_circuit: true, solver: cfg.solver };
    let jobs = cfg.jobs.max(1);
    let parts: Vec<Result<Tally, HarnessError>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|part| {
                let (start, end) = chunk(graphs.len(), part, jobs);
                let slice = &graphs[start..end];
                s.spawn(move || {
                    let mut t = Tally::default();
                    for g in slice {
                        let c = classify_instance_with(g, k, statement, &opts)?;
                        t.scanned += 1;
                        if c.verdict != Verdict::HypothesisFailure {
                            t.hypotheses_ok += 1;
                        }
                        match c.verdict {
                            Verdict::Confirmed => t.conclusion_ok += 1,
                            Verdict::Exception => {
                                t.exceptions.insert(canonical_form(g));
                            }
                            Verdict::Counterexample => {
                                t.counterexamples.insert(canonical_form(g));
                            }
                            Verdict::HypothesisFailure => {}
                        }
                    }
                    Ok(t)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("classification worker panicked")).collect()
    });
    parts.into_iter().try_fold(Tally::default(), |acc, p| Ok(acc.merge(p?)))
}

fn run(statement: Statement, k: usize, sources: &[Source], cfg: &RunConfig) -> Result<VerificationReport, HarnessError> {
    if !statement.accepts_k(k) {
        return Err(HarnessError::UnsupportedStatement { id: statement.id().to_string(), k });
    }
    let started = Instant::now();
    let graphs = materialize(sources, cfg)?;
    let tally = classify_all(statement, k, &graphs, cfg)?;
    let (n_range, filters, seed) = describe(sources, &graphs);
    let text = |set: BTreeSet<Vec<u8>>| -> Vec<String> {
        set.into_iter().map(|f| String::from_utf8(f).expect("graph6 is ASCII")).collect()
    };
    Ok(VerificationReport {
        id: statement.id().to_string(),
        k,
        n_range,
        filters,
        seed,
        scanned: tally.scanned,
        hypotheses_ok: tally.hypotheses_ok,
        conclusion_ok: tally.conclusion_ok,
        exceptions: text(tally.exceptions),
        counterexamples: text(tally.counterexamples),
        runtime_ms: started.elapsed().as_millis() as u64,
    })
}

/// Runs one of the theorems or equivalences over the sources.
pub fn verify_theorem(
    statement: Statement,
    k: usize,
    sources: &[Source],
    cfg: &RunConfig,
) -> Result<VerificationReport, HarnessError> {
    if statement.is_problem() {
        return Err(HarnessError::UnsupportedStatement { id: statement.id().to_string(), k });
    }
    run(statement, k, sources, cfg)
}

/// Scans for counterexamples to one of the open problems: graphs in its δ
/// window meeting its weaker hypotheses whose conclusion fails.
pub fn search_problem(
    statement: Statement,
    k: usize,
    sources: &[Source],
    cfg: &RunConfig,
) -> Result<VerificationReport, HarnessError> {
    if !statement.is_problem() {
        return Err(HarnessError::UnsupportedStatement { id: statement.id().to_string(), k });
    }
    run(statement, k, sources, cfg)
}
