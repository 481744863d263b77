//! Replay of the longest-cycle arguments: attachment checks for components
//! off a cycle or path, the catalogue of longer-cycle splices, the
//! alternation analysis around an outside vertex, and extraction of the large
//! independent set that a non-hamiltonian instance must contain.

mod alternation;
mod attachment;
mod classify;
mod configuration;
mod splice;
mod templates;
mod witness;

pub use alternation::{
    analyze_alternation, extend_via_outside_vertex, AlternationOutcome, AlternationReport, AnchorDiagnostic,
};
pub use attachment::{
    check_component_trivial, cycle_attachment_violations, path_attachment_violations, ComponentCheck,
};
pub use classify::{
    classify_instance, classify_instance_with, Classification, ClassifyOptions, Hypothesis, Statement, UnknownStatement,
    Verdict,
};
pub use configuration::{build_outside_configuration, OutsideConfiguration};
pub use splice::{expand, splice_cycle, Frame, Segment, SpliceError, SpliceSpec, Spliced};
pub use templates::{apply_template, Side, Template, TemplateError};
pub use witness::{witness_independent_set, Mode, Witness};

use crate::class::ClassError;
use crate::graph::GraphError;
use crate::invariants::InvariantError;
use thiserror::Error;

/// A strictly longer cycle (or `a–b` path) together with the construction
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub template: Template,
    pub result: Spliced,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0:?} is not a component of the graph minus the frame")]
    NotAComponent(Vec<usize>),
    #[error("vertex {0} lies on the frame")]
    OnFrame(usize),
    #[error("no vertex lies outside the frame")]
    NoOutsideVertex,
    #[error("component {0:?} off the frame has more than one vertex")]
    NontrivialComponent(Vec<usize>),
    #[error("vertex {0} has no usable neighbour on the frame")]
    NoAnchors(usize),
    #[error("the frame is not longest: {} gives {} vertices", .0.template.name(), .0.result.len())]
    NotLongest(Box<Extension>),
    #[error("{0} and {1} are adjacent in X")]
    NotIndependent(usize, usize),
    #[error("configuration does not match the graph: {0}")]
    Inconsistent(&'static str),
    #[error("the graph is hamiltonian")]
    Hamiltonian,
    #[error("a spanning path joins {0} and {1}")]
    SpanningPath(usize, usize),
    #[error("the graph is the Petersen graph")]
    Exceptional,
    #[error("hypotheses fail: {}", .0.join(", "))]
    HypothesisFailure(Vec<String>),
    #[error("the argument did not go through: {0}")]
    ProofFailure(String),
}
