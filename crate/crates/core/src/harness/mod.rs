//! Enumeration, sampling and verification campaigns with JSON reports.

mod enumerate;
mod report;
mod sample;
mod verify;

pub use enumerate::{
    enumerate_graphs, enumerate_graphs_with, EnumerationStream, Filters, DEFAULT_MAX_ORDER, LONG_RUN_MAX_ORDER,
};
pub use report::{write_report, VerificationReport, REVERIFY_MAX_ORDER};
pub use sample::{random_graph, sample_graph};
pub use verify::{search_problem, verify_theorem, RunConfig, Source};

use crate::class::ClassError;
use crate::graph::format::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("order {n} outside the enumerable range 1..={cap}")]
    OrderOutOfRange { n: usize, cap: usize },
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("empty range {lo}..={hi}")]
    EmptyRange { lo: usize, hi: usize },
    #[error("statement {id} does not apply with k = {k}")]
    UnsupportedStatement { id: String, k: usize },
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("report does not re-verify: {0}")]
    Reverify(String),
}
