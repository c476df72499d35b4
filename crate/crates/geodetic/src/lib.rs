//! Minimum geodetic sets: exact and class-specialised solvers, plus
//! instance generators for the hardness reductions.
//!
//! A set `S` of vertices is *geodetic* when every vertex lies on a shortest
//! path between two members of `S`; the *geodetic number* is the minimum size
//! of such a set. The crate provides
//!
//! * [`graph`] and [`metric`]: graphs, BFS distances, blocks, chordality, and
//!   the interval operator `I(u,v)` with its closure;
//! * [`exact`]: brute-force and block-by-block ground truth;
//! * [`grid`]: the linear-time corner-sequence algorithm for solid grids;
//! * [`chordal`]: the type-based dynamic program over nice tree
//!   decompositions of chordal graphs and path decompositions of interval
//!   graphs;
//! * [`reductions`]: 3-SAT → interval graph and vertex cover → grid-precursor
//!   generators with witness builders;
//! * [`io`] and [`generate`]: text formats and seeded random corpora.

pub mod chordal;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod grid;
pub mod io;
pub mod metric;
pub mod reductions;
pub mod vset;

pub use exact::{Method, SolveBudget, SolveResult};
pub use graph::{build_graph, Distance, Graph, VertexId};
pub use vset::VertexSet;
