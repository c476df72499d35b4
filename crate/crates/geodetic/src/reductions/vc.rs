//! Vertex cover on cubic planar graphs to the partial-grid precursor graph.
//!
//! Every vertex `v` of the cubic source graph becomes a 13-vertex gadget: a
//! centre `c`, three spokes `t_0, t_1, t_2` (one per incident edge, numbered
//! counterclockwise), a 6-cycle `t_0 y_01 t_1 y_12 t_2 y_02` around the
//! centre, and three pendant paths `c – x_ij – y_ij – z_ij`. An edge whose
//! labels are `i` at `v` and `j` at `w` adds three cross edges
//! `t_i^v t_j^w`, `y_{i,i+1}^v y_{j-1,j}^w` and `y_{i-1,i}^v y_{j+1,j}^w`
//! (indices mod 3). The degree-one `z` vertices are forced into every
//! geodetic set; each further centre in the set covers its gadget, and a
//! geodetic set of size `3|V| + k` exists exactly when a vertex cover of
//! size `k` does.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::graph::{build_graph, Graph, VertexId};
use crate::vset::VertexSet;

/// Vertices per gadget.
pub const GADGET_SIZE: usize = 13;

/// The three index pairs in gadget order.
const PAIRS: [[usize; 2]; 3] = [[0, 1], [1, 2], [0, 2]];

fn pair_index(a: usize, b: usize) -> usize {
    match (a.min(b), a.max(b)) {
        (0, 1) => 0,
        (1, 2) => 1,
        (0, 2) => 2,
        other => unreachable!("not a pair of distinct indices mod 3: {other:?}"),
    }
}

/// A cubic graph with, per vertex, the counterclockwise order of its three
/// neighbours. The edge `vw` carries label `i` at `v` when `w` is
/// `rotation[v][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<[VertexId; 3]>,
}

impl RotationSystem {
    /// Validates that the graph is cubic and each rotation lists exactly the
    /// neighbours of its vertex.
    pub fn new(graph: Graph, rotation: Vec<[VertexId; 3]>) -> Result<Self, ReductionError> {
        if rotation.len() != graph.n() {
            return Err(ReductionError::InconsistentRotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                graph.n()
            )));
        }
        for v in 0..graph.n() {
            if graph.degree(v) != 3 {
                return Err(ReductionError::NotCubic { vertex: v, degree: graph.degree(v) });
            }
            let mut listed = rotation[v];
            listed.sort_unstable();
            if listed != graph.neighbors(v) {
                return Err(ReductionError::InconsistentRotation(format!(
                    "rotation {:?} of vertex {v} is not its neighbourhood {:?}",
                    rotation[v],
                    graph.neighbors(v)
                )));
            }
        }
        Ok(RotationSystem { graph, rotation })
    }

    /// Rotation from straight-line coordinates: neighbours sorted by angle.
    /// The caller is responsible for the drawing being planar.
    pub fn from_coordinates(graph: Graph, coords: &[(f64, f64)]) -> Result<Self, ReductionError> {
        if coords.len() != graph.n() {
            return Err(ReductionError::InconsistentRotation(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.n()
            )));
        }
        let mut rotation = Vec::with_capacity(graph.n());
        for v in 0..graph.n() {
            if graph.degree(v) != 3 {
                return Err(ReductionError::NotCubic { vertex: v, degree: graph.degree(v) });
            }
            let (x0, y0) = coords[v];
            let mut nb = graph.neighbors(v).to_vec();
            let angle = |w: VertexId| (coords[w].1 - y0).atan2(coords[w].0 - x0);
            nb.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
            rotation.push([nb[0], nb[1], nb[2]]);
        }
        RotationSystem::new(graph, rotation)
    }

    /// `K_4` drawn as a triangle around its centre.
    pub fn k4() -> Self {
        let g = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid");
        let coords = [(0.0, 0.0), (0.0, 10.0), (-9.0, -5.0), (9.0, -5.0)];
        RotationSystem::from_coordinates(g, &coords).expect("K4 is cubic")
    }

    /// The triangular prism drawn as two nested triangles.
    pub fn prism() -> Self {
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
        let g = build_graph(6, &edges).expect("valid");
        let coords = [(0.0, 10.0), (-9.0, -5.0), (9.0, -5.0), (0.0, 3.0), (-3.0, -2.0), (3.0, -2.0)];
        RotationSystem::from_coordinates(g, &coords).expect("prism is cubic")
    }

    /// The cube drawn as two nested squares.
    pub fn cube() -> Self {
        let edges = [
            (0, 1), (1, 2), (2, 3), (0, 3),
            (4, 5), (5, 6), (6, 7), (4, 7),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        let g = build_graph(8, &edges).expect("valid");
        let coords = [
            (-10.0, -10.0), (10.0, -10.0), (10.0, 10.0), (-10.0, 10.0),
            (-3.0, -3.0), (3.0, -3.0), (3.0, 3.0), (-3.0, 3.0),
        ];
        RotationSystem::from_coordinates(g, &coords).expect("cube is cubic")
    }

    /// The source graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Counterclockwise neighbour order of `v`.
    pub fn rotation(&self, v: VertexId) -> [VertexId; 3] {
        self.rotation[v]
    }

    /// Label of edge `vw` at `v`.
    pub fn label(&self, v: VertexId, w: VertexId) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == w)
    }
}

/// Role of a vertex of the precursor graph inside the gadget of `source`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum GadgetVertex {
    Center { source: VertexId },
    T { source: VertexId, index: usize },
    X { source: VertexId, pair: [usize; 2] },
    Y { source: VertexId, pair: [usize; 2] },
    Z { source: VertexId, pair: [usize; 2] },
}

impl fmt::Display for GadgetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetVertex::Center { source } => write!(f, "c{source}"),
            GadgetVertex::T { source, index } => write!(f, "t{source}_{index}"),
            GadgetVertex::X { source, pair } => write!(f, "x{source}_{}{}", pair[0], pair[1]),
            GadgetVertex::Y { source, pair } => write!(f, "y{source}_{}{}", pair[0], pair[1]),
            GadgetVertex::Z { source, pair } => write!(f, "z{source}_{}{}", pair[0], pair[1]),
        }
    }
}

/// The precursor graph together with its vertex labels and source graph.
#[derive(Clone, Debug)]
pub struct GridPrecursor {
    pub graph: Graph,
    pub labels: Vec<GadgetVertex>,
    pub source: Graph,
}

impl GridPrecursor {
    /// Id of the centre of `v`'s gadget.
    pub fn center(&self, v: VertexId) -> VertexId {
        center(v)
    }

    /// The `3|V|` degree-one vertices.
    pub fn z_vertices(&self) -> Vec<VertexId> {
        (0..self.source.n()).flat_map(|v| (0..3).map(move |k| z(v, k))).collect()
    }
}

fn center(v: VertexId) -> VertexId {
    v * GADGET_SIZE
}

fn t(v: VertexId, i: usize) -> VertexId {
    v * GADGET_SIZE + 1 + i
}

fn x(v: VertexId, k: usize) -> VertexId {
    v * GADGET_SIZE + 4 + k
}

fn y(v: VertexId, k: usize) -> VertexId {
    v * GADGET_SIZE + 7 + k
}

fn z(v: VertexId, k: usize) -> VertexId {
    v * GADGET_SIZE + 10 + k
}

/// Builds the precursor graph of a rotation system.
pub fn vc_to_partial_grid(rs: &RotationSystem) -> GridPrecursor {
    let n = rs.graph.n();
    let mut edges = Vec::with_capacity(18 * n + 3 * rs.graph.m());
    let mut labels = Vec::with_capacity(GADGET_SIZE * n);
    for v in 0..n {
        labels.push(GadgetVertex::Center { source: v });
        labels.extend((0..3).map(|index| GadgetVertex::T { source: v, index }));
        labels.extend(PAIRS.iter().map(|&pair| GadgetVertex::X { source: v, pair }));
        labels.extend(PAIRS.iter().map(|&pair| GadgetVertex::Y { source: v, pair }));
        labels.extend(PAIRS.iter().map(|&pair| GadgetVertex::Z { source: v, pair }));
        for i in 0..3 {
            edges.push((center(v), t(v, i)));
        }
        for (k, &[a, b]) in PAIRS.iter().enumerate() {
            edges.push((center(v), x(v, k)));
            edges.push((x(v, k), y(v, k)));
            edges.push((y(v, k), z(v, k)));
            edges.push((t(v, a), y(v, k)));
            edges.push((t(v, b), y(v, k)));
        }
    }
    let y_at = |v: VertexId, a: usize, b: usize| y(v, pair_index(a % 3, b % 3));
    for (v, w) in rs.graph.edges() {
        let i = rs.label(v, w).expect("validated rotation");
        let j = rs.label(w, v).expect("validated rotation");
        edges.push((t(v, i), t(w, j)));
        edges.push((y_at(v, i, i + 1), y_at(w, j + 2, j)));
        edges.push((y_at(v, i + 2, i), y_at(w, j + 1, j)));
    }
    let graph = build_graph(GADGET_SIZE * n, &edges).expect("gadget edges are valid");
    GridPrecursor { graph, labels, source: rs.graph.clone() }
}

/// True iff `cover` touches every edge of `g`.
pub fn is_vertex_cover(g: &Graph, cover: &VertexSet) -> bool {
    g.edges().iter().all(|&(a, b)| cover.contains(a) || cover.contains(b))
}

/// All `z` vertices plus the centres of the cover's vertices.
pub fn vc_witness_geodetic(
    f1: &GridPrecursor,
    cover: &VertexSet,
) -> Result<VertexSet, ReductionError> {
    if let Some(v) = cover.iter().find(|&v| v >= f1.source.n()) {
        return Err(ReductionError::VertexOutOfRange(v));
    }
    if let Some(&(a, b)) =
        f1.source.edges().iter().find(|&&(a, b)| !cover.contains(a) && !cover.contains(b))
    {
        return Err(ReductionError::NotAVertexCover(a, b));
    }
    let mut s = VertexSet::from_ids(f1.graph.n(), f1.z_vertices());
    for v in cover.iter() {
        s.insert(center(v));
    }
    Ok(s)
}
