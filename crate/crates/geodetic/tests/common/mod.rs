//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls the library's metric layer: distances come from
//! Floyd–Warshall on the adjacency matrix and intervals from explicit path
//! enumeration, so agreement with the library is meaningful.

#![allow(dead_code)]

use std::collections::BTreeSet;

use geodetic::graph::{build_graph, Graph, VertexId};
use proptest::prelude::*;
use rand::Rng;

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &w in g.neighbors(u) {
            d[u][w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Vertices on some shortest `u`–`v` path, by enumerating every walk of
/// length `d(u, v)` from `u` that ends at `v`.
pub fn interval_by_enumeration(g: &Graph, d: &[Vec<u32>], u: VertexId, v: VertexId) -> BTreeSet<VertexId> {
    fn walk(g: &Graph, target: VertexId, left: u32, path: &mut Vec<VertexId>, out: &mut BTreeSet<VertexId>) {
        let last = *path.last().expect("path starts at u");
        if left == 0 {
            if last == target {
                out.extend(path.iter().copied());
            }
            return;
        }
        for &w in g.neighbors(last) {
            path.push(w);
            walk(g, target, left - 1, path, out);
            path.pop();
        }
    }
    let mut out = BTreeSet::new();
    if d[u][v] < INF {
        walk(g, v, d[u][v], &mut vec![u], &mut out);
    }
    out
}

/// Whether every vertex lies between two members of `set` (distance test).
pub fn is_geodetic_oracle(d: &[Vec<u32>], set: &[VertexId]) -> bool {
    let n = d.len();
    (0..n).all(|x| {
        set.iter()
            .any(|&a| set.iter().any(|&b| d[a][b] < INF && d[a][x] + d[x][b] == d[a][b]))
    })
}

/// Smallest geodetic set size by plain subset enumeration in size order.
pub fn geodetic_number_oracle(g: &Graph) -> usize {
    let d = floyd(g);
    let n = g.n();
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if is_geodetic_oracle(&d, &idx) {
                return k;
            }
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    n
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// other pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build_graph(n, &edges).expect("valid edges")
}

/// Strategy for connected graphs with `lo..=hi` vertices.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), parents, proptest::collection::vec(proptest::bool::weighted(0.3), pairs))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            build_graph(n, &edges).expect("valid edges")
        })
}

/// Every labelled connected graph on `n` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            build_graph(n, &e).expect("valid edges")
        })
        .filter(|g| g.n() > 0 && g.is_connected())
        .collect()
}
