//! Minimum geodetic sets of solid grids in linear time.
//!
//! A solid grid is a connected graph drawn with integer coordinates, unit
//! edges, and only unit-square bounded faces. Inside every biconnected
//! component, the *corner paths* are the boundary runs whose end-vertices
//! have degree 2 and whose interior vertices have degree 3 (no cut vertices
//! anywhere). Walking each component's outer boundary clockwise, consecutive
//! corners joined by a corner path form *corner sequences*; every geodetic set
//! must hit every corner path, which gives the lower bound
//! `t + Σ⌊|S|/2⌋` (with `t` the number of degree-1 vertices), and the set of
//! degree-1 vertices together with every second corner of every maximal
//! sequence attains it.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use thiserror::Error;

use crate::exact::{Method, SolveResult};
use crate::graph::{block_decomposition, Graph, VertexId};
use crate::vset::VertexSet;

/// Integer coordinates for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridEmbedding {
    /// `coords[v] = (x, y)`.
    pub coords: Vec<(i64, i64)>,
}

/// Reasons a grid embedding is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    /// Embedding length differs from the vertex count.
    #[error("embedding has {got} coordinates for a graph on {expected} vertices")]
    CoordinateCount { expected: usize, got: usize },
    /// Two vertices share a point.
    #[error("vertices {0} and {1} share a coordinate")]
    Collision(VertexId, VertexId),
    /// An edge is not a unit axis-parallel segment.
    #[error("edge ({0},{1}) does not have unit length")]
    NonUnitEdge(VertexId, VertexId),
    /// The graph is disconnected.
    #[error("graph is not connected")]
    Disconnected,
    /// Some bounded face is not a unit square.
    #[error("embedding has a bounded face that is not a unit square")]
    NotSolid,
}

/// A maximal boundary path with degree-2 ends and degree-3 interior, free of
/// cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerPath {
    /// Path vertices in clockwise boundary order.
    pub vertices: Vec<VertexId>,
}

/// Consecutive corners along a clockwise boundary walk, each adjacent pair
/// joined by a corner path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSequence {
    /// `u₁ … u_k`. For cyclic sequences the list is the linearisation that
    /// starts right after the smallest-id corner (which therefore comes last).
    pub corners: Vec<VertexId>,
    /// True when the corners close up into a cycle of corner paths.
    pub cyclic: bool,
}

impl CornerSequence {
    /// `f(S) = {u₂, u₄, …}`: every second corner, the last one dropped when
    /// `|S|` is odd.
    pub fn alternate_corners(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.corners.iter().skip(1).step_by(2).copied()
    }
}

/// Checks the embedding and the unit-square face condition.
///
/// Edges are unit lattice segments, so the drawing is automatically plane and
/// each unit square whose four sides are edges is a face. By Euler's formula a
/// connected plane graph has `m − n + 1` bounded faces, so all of them are
/// unit squares exactly when that many such squares exist.
pub fn validate_solid_grid(g: &Graph, emb: &GridEmbedding) -> Result<bool, GridError> {
    let at = position_index(g, emb)?;
    if !g.is_connected() {
        return Err(GridError::Disconnected);
    }
    let squares = unit_squares(g, emb, &at);
    Ok(squares == g.m() + 1 - g.n())
}

fn position_index(g: &Graph, emb: &GridEmbedding) -> Result<HashMap<(i64, i64), VertexId>, GridError> {
    if emb.coords.len() != g.n() {
        return Err(GridError::CoordinateCount {
            expected: g.n(),
            got: emb.coords.len(),
        });
    }
    let mut at = HashMap::with_capacity(g.n());
    for (v, &p) in emb.coords.iter().enumerate() {
        if let Some(u) = at.insert(p, v) {
            return Err(GridError::Collision(u, v));
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = (emb.coords[u], emb.coords[v]);
        if (a.0 - b.0).abs() + (a.1 - b.1).abs() != 1 {
            return Err(GridError::NonUnitEdge(u, v));
        }
    }
    Ok(at)
}

fn unit_squares(g: &Graph, emb: &GridEmbedding, at: &HashMap<(i64, i64), VertexId>) -> usize {
    let mut count = 0;
    for (v, &(x, y)) in emb.coords.iter().enumerate() {
        let corner = |dx, dy| at.get(&(x + dx, y + dy)).copied();
        if let (Some(a), Some(b), Some(c)) = (corner(1, 0), corner(1, 1), corner(0, 1)) {
            if g.has_edge(v, a) && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, v) {
                count += 1;
            }
        }
    }
    count
}

/// Everything the algorithm derives from a validated solid grid.
#[derive(Debug, Clone)]
struct Analysis {
    paths: Vec<CornerPath>,
    sequences: Vec<CornerSequence>,
}

/// Headings in clockwise order: north, east, south, west.
const HEADINGS: [(i64, i64); 4] = [(0, 1), (1, 0), (0, -1), (-1, 0)];

/// Clockwise walk of the outer boundary of a 2-connected block, starting at
/// its lexicographically smallest point. Uses the left-hand rule so the outer
/// face stays on the left.
fn outer_boundary(
    g: &Graph,
    emb: &GridEmbedding,
    at: &HashMap<(i64, i64), VertexId>,
    block: &HashSet<VertexId>,
) -> Vec<VertexId> {
    let start = *block
        .iter()
        .min_by_key(|&&v| emb.coords[v])
        .expect("blocks are nonempty");
    let mut cycle = vec![start];
    let mut here = start;
    // Pretend we arrived heading east so the first preference is north.
    let mut heading = 1usize;
    for _ in 0..4 * g.n() + 4 {
        let (x, y) = emb.coords[here];
        let mut moved = false;
        // Left turn, straight on, right turn, back.
        for turn in [3usize, 0, 1, 2] {
            let h = (heading + turn) % 4;
            let (dx, dy) = HEADINGS[h];
            if let Some(&next) = at.get(&(x + dx, y + dy)) {
                if block.contains(&next) && g.has_edge(here, next) {
                    heading = h;
                    here = next;
                    moved = true;
                    break;
                }
            }
        }
        assert!(moved, "boundary walk stuck at vertex {here}");
        if here == start {
            return cycle;
        }
        cycle.push(here);
    }
    panic!("boundary walk did not close");
}

fn analyse(g: &Graph, emb: &GridEmbedding) -> Result<Analysis, GridError> {
    if !validate_solid_grid(g, emb)? {
        return Err(GridError::NotSolid);
    }
    let at = position_index(g, emb)?;
    let bd = block_decomposition(g);
    let cut = &bd.cut_vertices;
    let corner_like = |v: VertexId| g.degree(v) == 2 && !cut.contains(v);
    let interior_like = |v: VertexId| g.degree(v) == 3 && !cut.contains(v);

    let mut paths = Vec::new();
    let mut sequences = Vec::new();
    for block in bd.blocks.iter().filter(|b| b.len() >= 3) {
        let members: HashSet<VertexId> = block.iter().copied().collect();
        let cycle = outer_boundary(g, emb, &at, &members);
        let len = cycle.len();
        // Forward corner path out of each boundary position, if any.
        let mut forward: Vec<Option<usize>> = vec![None; len];
        for i in 0..len {
            if !corner_like(cycle[i]) {
                continue;
            }
            let mut j = (i + 1) % len;
            let mut path = vec![cycle[i]];
            while j != i && interior_like(cycle[j]) {
                path.push(cycle[j]);
                j = (j + 1) % len;
            }
            if j != i && corner_like(cycle[j]) {
                path.push(cycle[j]);
                forward[i] = Some(j);
                paths.push(CornerPath { vertices: path });
            }
        }
        let mut is_corner = vec![false; len];
        for i in 0..len {
            if let Some(j) = forward[i] {
                is_corner[i] = true;
                is_corner[j] = true;
            }
        }
        let corners: Vec<usize> = (0..len).filter(|&i| is_corner[i]).collect();
        let r = corners.len();
        if r == 0 {
            continue;
        }
        // link[k]: a corner path joins corners[k] to corners[k+1].
        let link: Vec<bool> = (0..r)
            .map(|k| forward[corners[k]] == Some(corners[(k + 1) % r]))
            .collect();
        if link.iter().all(|&l| l) {
            let p = (0..r)
                .min_by_key(|&k| cycle[corners[k]])
                .expect("at least one corner");
            let lin = (1..=r).map(|s| cycle[corners[(p + s) % r]]).collect();
            sequences.push(CornerSequence {
                corners: lin,
                cyclic: true,
            });
            continue;
        }
        for k in 0..r {
            if link[(k + r - 1) % r] {
                continue;
            }
            let mut seq = vec![cycle[corners[k]]];
            let mut j = k;
            while link[j] {
                j = (j + 1) % r;
                seq.push(cycle[corners[j]]);
            }
            sequences.push(CornerSequence {
                corners: seq,
                cyclic: false,
            });
        }
    }
    Ok(Analysis { paths, sequences })
}

/// All corner paths, each reported once, block by block.
pub fn corner_paths(g: &Graph, emb: &GridEmbedding) -> Result<Vec<CornerPath>, GridError> {
    Ok(analyse(g, emb)?.paths)
}

/// Maximal corner sequences, block by block in clockwise boundary order.
pub fn maximal_corner_sequences(g: &Graph, emb: &GridEmbedding) -> Result<Vec<CornerSequence>, GridError> {
    Ok(analyse(g, emb)?.sequences)
}

/// `t + Σ⌊|S|/2⌋` over the maximal corner sequences (1 for the single vertex).
pub fn solid_grid_lower_bound(g: &Graph, emb: &GridEmbedding) -> Result<usize, GridError> {
    let a = analyse(g, emb)?;
    if g.n() == 1 {
        return Ok(1);
    }
    let t = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
    Ok(t + a.sequences.iter().map(|s| s.corners.len() / 2).sum::<usize>())
}

/// The degree-1 vertices together with every second corner of every maximal
/// corner sequence.
pub fn solve_solid_grid(g: &Graph, emb: &GridEmbedding) -> Result<SolveResult, GridError> {
    let start = Instant::now();
    let a = analyse(g, emb)?;
    let mut set = VertexSet::new(g.n());
    if g.n() == 1 {
        set.insert(0);
    }
    for v in (0..g.n()).filter(|&v| g.degree(v) == 1) {
        set.insert(v);
    }
    for s in &a.sequences {
        for v in s.alternate_corners() {
            set.insert(v);
        }
    }
    Ok(SolveResult::new(set, true, Method::SolidGrid, start.elapsed()))
}

/// The full `w × h` grid graph with natural coordinates; vertex `(x, y)` has
/// id `y·w + x`.
pub fn full_grid(w: usize, h: usize) -> (Graph, GridEmbedding) {
    let id = |x: usize, y: usize| y * w + x;
    let mut edges = Vec::new();
    let mut coords = Vec::new();
    for y in 0..h {
        for x in 0..w {
            coords.push((x as i64, y as i64));
            if x + 1 < w {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    let g = crate::graph::build_graph(w * h, &edges).expect("grid edges are valid");
    (g, GridEmbedding { coords })
}

/// The graph of a set of unit cells (lower-left corners): every cell side is
/// an edge. Vertices are numbered in lexicographic `(x, y)` order.
pub fn cells_to_grid(cells: &[(i64, i64)]) -> (Graph, GridEmbedding) {
    let mut points: Vec<(i64, i64)> = cells
        .iter()
        .flat_map(|&(x, y)| [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)])
        .collect();
    points.sort_unstable();
    points.dedup();
    let index: HashMap<(i64, i64), VertexId> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = Vec::new();
    for &(x, y) in cells {
        let c = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        for k in 0..4 {
            edges.push((index[&c[k]], index[&c[(k + 1) % 4]]));
        }
    }
    let g = crate::graph::build_graph(points.len(), &edges).expect("cell edges are valid");
    (g, GridEmbedding { coords: points })
}
