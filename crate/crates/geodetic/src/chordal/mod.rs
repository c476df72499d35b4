//! Fixed-parameter dynamic programming for chordal and interval graphs,
//! parameterised by the clique number.
//!
//! Every bag of a tree decomposition of a chordal graph is a clique cutset,
//! and shortest paths crossing a clique cutset `X` are described by the
//! subsets of `X` their endpoints are *close to* (nearest members of `X`,
//! all other members one step further). A vertex `x ∈ X` lies on a shortest
//! path between `u` close to `A` and `v` close to `B` (on opposite sides)
//! exactly when `x ∈ A ∩ B`, or `A ∩ B = ∅` and `x ∈ A ∪ B`. Partial
//! solutions are therefore summarised by [`types::TypeTuple`]s and combined
//! bottom-up over a [`decomposition::NiceTreeDecomposition`].
//!
//! For interval graphs the decomposition is a path and the close-to sets of
//! any bag lie in a family of `O(|X|)` subsets (see
//! [`interval::interval_family_a`]), so only `2^{O(ω)}` types arise.

pub mod decomposition;
pub mod demand;
pub mod dp;
pub mod interval;
pub mod types;

use thiserror::Error;

pub use decomposition::{build_nice_tree_decomposition, NiceTreeDecomposition, NodeKind, TdNode};
pub use dp::{
    check_certificate, dp_min_geodetic_chordal, dp_min_geodetic_chordal_with, DpConfig, Exterior, DEFAULT_CHORDAL_CAP,
    DEFAULT_INTERVAL_CAP,
};
pub use interval::{dp_min_geodetic_interval, dp_min_geodetic_interval_with, interval_family_a, interval_path_decomposition};
pub use types::{
    compatible_forget, compatible_introduce, compatible_join, compatible_root, enumerate_valid_types, BagStep, Mode,
    SubsetVector, TypeTuple, MAX_BAG,
};

/// Failures of the decomposition builders and the dynamic program.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordalError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is empty or not connected")]
    Disconnected,
    #[error("bag of size {width} exceeds the configured cap {cap}")]
    CapExceeded { width: usize, cap: usize },
    #[error("interval mode requires the family of admissible subsets")]
    MissingFamily,
    #[error("bags of adjacent nodes do not differ as required")]
    BagMismatch,
    #[error("the given intervals do not pairwise intersect")]
    NotAClique,
    #[error("vertex outside the interval model")]
    VertexOutOfRange,
    #[error("work budget exhausted")]
    BudgetExhausted,
    #[error("no child type of the root (bag {{{0}}}) is compatible")]
    NoCompatibleRootType(usize),
    #[error("certificate check failed at node {node}: {why}")]
    CertificateViolation { node: usize, why: String },
}
