//! Hardness reductions as instance generators.
//!
//! * [`sat`]: 3-SAT to interval graphs, built from tracks of chained unit
//!   intervals and a fixed repertoire of gadgets, with exact rational
//!   coordinates and the witness geodetic set for a satisfying assignment.
//! * [`vc`]: vertex cover on cubic planar graphs to the partial-grid
//!   precursor graph, with the witness built from a vertex cover.

pub mod intervals;
pub mod rational;
pub mod sat;
pub mod vc;

use thiserror::Error;

use crate::graph::VertexId;

/// Failures of the reduction generators and witness builders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("interval {0} is not the root of any track")]
    NotARoot(usize),
    #[error("the start interval cannot receive an implication gadget")]
    OriginRoot,
    #[error("gadget ordering violated: {0}")]
    Ordering(String),
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("assignment does not satisfy clause {0}")]
    Unsatisfied(usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("edge ({0},{1}) is not covered")]
    NotAVertexCover(VertexId, VertexId),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(VertexId),
}
