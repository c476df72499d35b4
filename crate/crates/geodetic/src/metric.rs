//! Shortest-path intervals `I(u,v)`, closures `I(S)`, geodetic and
//! edge-geodetic checks, and the close-to relation with respect to a clique.

use thiserror::Error;

use crate::graph::{bfs_raw, Distance, Graph, VertexId, UNREACHED};
use crate::vset::VertexSet;

/// Errors raised by metric queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    /// The two vertices lie in different components.
    #[error("vertices {0} and {1} lie in different components")]
    DifferentComponents(VertexId, VertexId),
    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    Disconnected,
    /// A nonempty vertex set was required.
    #[error("vertex set is empty")]
    EmptySet,
    /// The reference set is not a clique.
    #[error("reference set is not a clique")]
    NotClique,
    /// The reference set is empty.
    #[error("reference clique is empty")]
    EmptyClique,
    /// A subset argument is empty or escapes the reference set.
    #[error("subset is empty or not contained in the reference clique")]
    BadSubset,
    /// Distances from a vertex to a clique spanned more than two values;
    /// impossible in a simple graph, reported rather than hidden.
    #[error("distances from {0} to the clique span more than two consecutive values")]
    TwoValueViolation(VertexId),
}

/// All-pairs hop distances, one BFS per vertex.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    /// Runs `n` breadth-first searches.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(bfs_raw(g, s));
        }
        DistanceTable { n, d }
    }

    /// Distance between `u` and `v`.
    pub fn get(&self, u: VertexId, v: VertexId) -> Distance {
        match self.raw(u, v) {
            UNREACHED => Distance::Unreachable,
            d => Distance::Finite(d),
        }
    }

    pub(crate) fn raw(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    pub(crate) fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Number of vertices covered by the table.
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Vertices `w` with `d(u,w) + d(w,v) = d(u,v)` given the two BFS rows.
fn interval_from_rows(du: &[u32], dv: &[u32], target: u32) -> VertexSet {
    let n = du.len();
    VertexSet::from_ids(
        n,
        (0..n).filter(|&w| {
            du[w] != UNREACHED && dv[w] != UNREACHED && du[w] + dv[w] == target
        }),
    )
}

/// `I(u,v)`: every vertex lying on some shortest `u`–`v` path.
pub fn interval_between(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet, MetricError> {
    let du = bfs_raw(g, u);
    if du[v] == UNREACHED {
        return Err(MetricError::DifferentComponents(u, v));
    }
    let dv = bfs_raw(g, v);
    Ok(interval_from_rows(&du, &dv, du[v]))
}

/// `I(u,v)` read from a precomputed distance table.
pub fn interval_between_with_table(
    t: &DistanceTable,
    u: VertexId,
    v: VertexId,
) -> Result<VertexSet, MetricError> {
    let target = t.raw(u, v);
    if target == UNREACHED {
        return Err(MetricError::DifferentComponents(u, v));
    }
    Ok(interval_from_rows(t.row(u), t.row(v), target))
}

/// `I(S)`, the union of `I(u,v)` over all pairs of `S` including `u = v`.
pub fn interval_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet, MetricError> {
    let members = s.to_vec();
    if members.is_empty() {
        return Err(MetricError::EmptySet);
    }
    let rows: Vec<Vec<u32>> = members.iter().map(|&u| bfs_raw(g, u)).collect();
    closure_from_rows(&members, &rows)
}

fn closure_from_rows(members: &[VertexId], rows: &[Vec<u32>]) -> Result<VertexSet, MetricError> {
    let n = rows[0].len();
    let mut out = VertexSet::new(n);
    for i in 0..members.len() {
        out.insert(members[i]);
        for j in i + 1..members.len() {
            let target = rows[i][members[j]];
            if target == UNREACHED {
                return Err(MetricError::DifferentComponents(members[i], members[j]));
            }
            out.union_with(&interval_from_rows(&rows[i], &rows[j], target));
        }
    }
    Ok(out)
}

/// True iff `I(S) = V(G)`. An empty `S` is never geodetic.
pub fn is_geodetic(g: &Graph, s: &VertexSet) -> Result<bool, MetricError> {
    if !g.is_connected() {
        return Err(MetricError::Disconnected);
    }
    if s.is_empty() {
        return Ok(false);
    }
    Ok(interval_closure(g, s)?.is_full())
}

/// True iff every edge `(a,b)` lies on a shortest path between two members
/// of `S`: `d(u,a) + 1 + d(b,v) = d(u,v)` in one of the two orientations.
pub fn is_edge_geodetic(g: &Graph, s: &VertexSet) -> Result<bool, MetricError> {
    if !g.is_connected() {
        return Err(MetricError::Disconnected);
    }
    let members = s.to_vec();
    let rows: Vec<Vec<u32>> = members.iter().map(|&u| bfs_raw(g, u)).collect();
    'edges: for (a, b) in g.edges() {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let (du, dv) = (&rows[i], &rows[j]);
                let target = du[members[j]];
                if du[a] + 1 + dv[b] == target || du[b] + 1 + dv[a] == target {
                    continue 'edges;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// The close-to relation: a vertex at distance `base_distance` from every
/// member of `members` and at distance `base_distance + 1` from the rest of
/// the clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloseSet {
    /// `d_u`, the distance from the witness vertex to the nearest clique members.
    pub base_distance: u32,
    /// The nonempty set `A` of nearest clique members.
    pub members: VertexSet,
}

/// Computes the set of `X`-members nearest to `y`.
pub fn close_set(g: &Graph, y: VertexId, x: &VertexSet) -> Result<CloseSet, MetricError> {
    let xs = x.to_vec();
    if xs.is_empty() {
        return Err(MetricError::EmptyClique);
    }
    if !g.is_clique(&xs) {
        return Err(MetricError::NotClique);
    }
    close_set_from_row(&bfs_raw(g, y), y, x)
}

pub(crate) fn close_set_from_row(
    dist: &[u32],
    y: VertexId,
    x: &VertexSet,
) -> Result<CloseSet, MetricError> {
    let xs = x.to_vec();
    let d = xs.iter().map(|&w| dist[w]).min().ok_or(MetricError::EmptyClique)?;
    if d == UNREACHED {
        return Err(MetricError::DifferentComponents(y, xs[0]));
    }
    let mut members = VertexSet::new(x.universe());
    for &w in &xs {
        if dist[w] == d {
            members.insert(w);
        } else if dist[w] != d + 1 {
            return Err(MetricError::TwoValueViolation(y));
        }
    }
    Ok(CloseSet {
        base_distance: d,
        members,
    })
}

/// The clique-cutset law: for `u`, `v` separated by the clique `X`, with `u`
/// close to `A` and `v` close to `B`, the vertices of `X` on shortest
/// `u`–`v` paths are `A ∩ B` when that is nonempty and `A ∪ B` otherwise.
pub fn covered_through_cutset(
    a: &VertexSet,
    b: &VertexSet,
    x: &VertexSet,
) -> Result<VertexSet, MetricError> {
    if a.is_empty() || b.is_empty() || !a.is_subset(x) || !b.is_subset(x) {
        return Err(MetricError::BadSubset);
    }
    let meet = a.intersection(b);
    Ok(if meet.is_empty() { a.union(b) } else { meet })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build_graph(n, &e).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build_graph(n, &e).unwrap()
    }
    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied())
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval_between(&path(3), 0, 2).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(interval_between(&cycle(4), 0, 2).unwrap().len(), 4);
        assert_eq!(interval_between(&cycle(4), 3, 3).unwrap().to_vec(), vec![3]);
        let two = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            interval_between(&two, 0, 3),
            Err(MetricError::DifferentComponents(0, 3))
        );
        let t = DistanceTable::new(&cycle(6));
        assert_eq!(
            interval_between_with_table(&t, 0, 3).unwrap(),
            interval_between(&cycle(6), 0, 3).unwrap()
        );
    }

    #[test]
    fn closure_examples() {
        assert_eq!(interval_closure(&path(5), &set(5, &[2])).unwrap().to_vec(), vec![2]);
        assert!(interval_closure(&path(5), &set(5, &[0, 4])).unwrap().is_full());
        assert_eq!(
            interval_closure(&cycle(6), &set(6, &[0, 1])).unwrap().to_vec(),
            vec![0, 1]
        );
        assert_eq!(interval_closure(&path(5), &set(5, &[])), Err(MetricError::EmptySet));
    }

    #[test]
    fn geodetic_examples() {
        assert!(is_geodetic(&path(5), &set(5, &[0, 4])).unwrap());
        let c5 = cycle(5);
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(!is_geodetic(&c5, &set(5, &[u, v])).unwrap());
            }
        }
        let e: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let k4 = build_graph(4, &e).unwrap();
        assert!(!is_geodetic(&k4, &set(4, &[0, 1, 2])).unwrap());
        assert!(is_geodetic(&k4, &set(4, &[0, 1, 2, 3])).unwrap());
        let two = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_geodetic(&two, &set(4, &[0])), Err(MetricError::Disconnected));
    }

    #[test]
    fn edge_geodetic_examples() {
        assert!(is_edge_geodetic(&path(5), &set(5, &[0, 4])).unwrap());
        assert!(is_edge_geodetic(&cycle(4), &set(4, &[0, 2])).unwrap());
        // C6 with an antipodal pair: the two shortest paths are edge-disjoint
        // and have three edges each, so all six edges are covered.
        assert!(is_edge_geodetic(&cycle(6), &set(6, &[0, 3])).unwrap());
        // A pair at distance two covers only the two edges between them.
        assert!(!is_edge_geodetic(&cycle(6), &set(6, &[0, 2])).unwrap());
    }

    #[test]
    fn close_set_examples() {
        // Triangle {0,1,2} with pendant 3 attached to 0.
        let g = build_graph(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let x = set(4, &[0, 1, 2]);
        let c = close_set(&g, 3, &x).unwrap();
        assert_eq!((c.base_distance, c.members.to_vec()), (1, vec![0]));
        let c = close_set(&g, 1, &x).unwrap();
        assert_eq!((c.base_distance, c.members.to_vec()), (0, vec![1]));
        // A vertex adjacent to the whole clique.
        let h = build_graph(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let c = close_set(&h, 2, &set(3, &[0, 1])).unwrap();
        assert_eq!((c.base_distance, c.members.to_vec()), (1, vec![0, 1]));
        assert_eq!(close_set(&path(3), 1, &set(3, &[0, 2])), Err(MetricError::NotClique));
    }

    #[test]
    fn cutset_examples() {
        let x = set(4, &[1, 2, 3]);
        let r = covered_through_cutset(&set(4, &[1, 2]), &set(4, &[2, 3]), &x).unwrap();
        assert_eq!(r.to_vec(), vec![2]);
        let r = covered_through_cutset(&set(4, &[1]), &set(4, &[2]), &x).unwrap();
        assert_eq!(r.to_vec(), vec![1, 2]);
        let r = covered_through_cutset(&set(4, &[1]), &set(4, &[1]), &x).unwrap();
        assert_eq!(r.to_vec(), vec![1]);
        assert!(covered_through_cutset(&set(4, &[]), &set(4, &[1]), &x).is_err());
    }
}
