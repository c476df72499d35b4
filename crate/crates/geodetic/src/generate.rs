//! Seeded random corpora: chordal graphs of bounded clique number, connected
//! interval models, and solid polyominoes. Every generator is a pure
//! function of its parameters and seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{build_graph, Graph, VertexId};
use crate::grid::{cells_to_grid, validate_solid_grid, GridEmbedding};
use crate::reductions::intervals::{intersection_graph, ClosedInterval};
use crate::reductions::rational::Rational;

/// Invalid generator parameters.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("a connected graph on {n} vertices cannot have clique number {omega}")]
    BadOmega { n: usize, omega: usize },
    #[error("at least one vertex is required")]
    Empty,
    #[error("coordinate range must be nonnegative (got {range})")]
    BadRange { range: i64 },
    #[error("a solid grid needs at least 4 vertices (got {max_vertices})")]
    GridTooSmall { max_vertices: usize },
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected chordal graph on `n` vertices with clique number exactly
/// `omega` (`2 ≤ omega ≤ n`, or `n = omega = 1`).
///
/// Grows a `(omega−1)`-tree from `K_omega`: each new vertex is attached to a
/// random clique taken from an existing maximal clique — a full
/// `(omega−1)`-subclique half of the time (plain k-tree growth), otherwise a
/// random nonempty smaller one (a simplicial leaf of lower degree). Every
/// new vertex is simplicial when added, so the result is chordal.
pub fn random_chordal(n: usize, omega: usize, seed: u64) -> Result<Graph, GenerateError> {
    if omega == 0 || omega > n || (omega == 1 && n > 1) {
        return Err(GenerateError::BadOmega { n, omega });
    }
    let mut rng = rng(seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for u in 0..omega {
        for v in u + 1..omega {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<VertexId>> = vec![(0..omega).collect()];
    for v in omega..n {
        let host = cliques.choose(&mut rng).expect("at least one clique").clone();
        let mut attach = host.clone();
        attach.shuffle(&mut rng);
        let size = if rng.gen_bool(0.5) {
            omega - 1
        } else {
            rng.gen_range(1..=(omega - 1).min(host.len()))
        };
        let size = size.min(host.len());
        attach.truncate(size);
        attach.sort_unstable();
        for &u in &attach {
            edges.push((u, v));
        }
        attach.push(v);
        cliques.push(attach);
    }
    Ok(build_graph(n, &edges).expect("generated edges are valid"))
}

/// `n` closed intervals with integer endpoints in `[0, range]` whose
/// intersection graph is connected; models are redrawn until connected.
pub fn random_interval(n: usize, range: i64, seed: u64) -> Result<Vec<ClosedInterval>, GenerateError> {
    if n == 0 {
        return Err(GenerateError::Empty);
    }
    if range < 0 {
        return Err(GenerateError::BadRange { range });
    }
    let mut rng = rng(seed);
    loop {
        let rep: Vec<ClosedInterval> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..=range);
                let b = rng.gen_range(0..=range);
                ClosedInterval::new(Rational::integer(a.min(b)), Rational::integer(a.max(b)))
                    .expect("ordered endpoints")
            })
            .collect();
        if intersection_graph(&rep).is_connected() {
            return Ok(rep);
        }
    }
}

/// A random solid polyomino with at most `max_vertices` grid vertices.
///
/// Starts from one unit cell and adds random edge-adjacent cells while the
/// vertex budget allows, skipping any cell that would leave a non-solid
/// region (for instance by enclosing a hole).
pub fn random_solid_grid(max_vertices: usize, seed: u64) -> Result<(Graph, GridEmbedding), GenerateError> {
    if max_vertices < 4 {
        return Err(GenerateError::GridTooSmall { max_vertices });
    }
    let mut rng = rng(seed);
    let mut cells: Vec<(i64, i64)> = vec![(0, 0)];
    let mut best = cells_to_grid(&cells);
    let mut failures = 0;
    while failures < 32 {
        let &(x, y) = cells.choose(&mut rng).expect("nonempty");
        let (dx, dy) = *[(1, 0), (-1, 0), (0, 1), (0, -1)].choose(&mut rng).expect("four directions");
        let cell = (x + dx, y + dy);
        if cells.contains(&cell) {
            failures += 1;
            continue;
        }
        cells.push(cell);
        let (g, emb) = cells_to_grid(&cells);
        if g.n() > max_vertices || !matches!(validate_solid_grid(&g, &emb), Ok(true)) {
            cells.pop();
            failures += 1;
            continue;
        }
        failures = 0;
        best = (g, emb);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::chordality_and_peo;

    fn clique_number(g: &Graph) -> usize {
        let n = g.n();
        (1u32..1 << n)
            .filter(|&m| {
                let s: Vec<_> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                g.is_clique(&s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn chordal_graphs_have_the_requested_clique_number() {
        for seed in 0..20 {
            for omega in 2..=4 {
                let g = random_chordal(10, omega, seed).unwrap();
                assert!(g.is_connected());
                assert!(chordality_and_peo(&g).0);
                assert_eq!(clique_number(&g), omega);
            }
        }
        assert_eq!(random_chordal(12, 3, 7).unwrap().edges(), random_chordal(12, 3, 7).unwrap().edges());
        assert!(random_chordal(3, 4, 0).is_err());
        assert!(random_chordal(3, 1, 0).is_err());
        assert_eq!(random_chordal(1, 1, 0).unwrap().n(), 1);
    }

    #[test]
    fn interval_models_are_connected_and_deterministic() {
        for seed in 0..20 {
            let rep = random_interval(12, 24, seed).unwrap();
            assert!(intersection_graph(&rep).is_connected());
        }
        assert_eq!(random_interval(9, 20, 3).unwrap(), random_interval(9, 20, 3).unwrap());
        assert!(random_interval(0, 5, 0).is_err());
        assert!(random_interval(3, -1, 0).is_err());
    }

    #[test]
    fn solid_grids_respect_the_budget() {
        for seed in 0..20 {
            let (g, emb) = random_solid_grid(22, seed).unwrap();
            assert!(g.n() <= 22);
            assert_eq!(validate_solid_grid(&g, &emb), Ok(true));
        }
    }
}
