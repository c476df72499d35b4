//! Immutable simple undirected graphs, BFS distances and the structural
//! decompositions (blocks, simplicial vertices, chordality) consumed by the
//! solvers.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vset::VertexSet;

/// Dense 0-based vertex identifier.
pub type VertexId = usize;

/// Errors raised while constructing or transforming graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// An edge endpoint is not in `[0, n)`.
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    /// A loop `(v, v)` was supplied.
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    /// `subdivide` was asked for paths with zero edges.
    #[error("subdivision factor must be at least 1")]
    ZeroSubdivision,
}

/// Hop distance with an explicit sentinel for disconnected pairs.
///
/// `Unreachable` compares greater than every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    /// A finite number of edges.
    Finite(u32),
    /// No path exists (or, for `girth`, no cycle exists).
    Unreachable,
}

impl Distance {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    /// True for `Finite(_)`.
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "unreachable"),
        }
    }
}

/// Raw BFS rows use this marker internally; it never escapes the crate as a
/// distance value (public APIs convert it to [`Distance::Unreachable`]).
pub(crate) const UNREACHED: u32 = u32::MAX;

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
/// collapse silently; loops and out-of-range endpoints are errors.
pub fn build_graph(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut m = 0;
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
        m += list.len();
    }
    Ok(Graph { adj, m: m / 2 })
}

impl Graph {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Adjacency test by binary search.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Maximum degree (0 for the empty graph).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True when every pair of distinct members of `set` is adjacent.
    pub fn is_clique(&self, set: &[VertexId]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && bfs_raw(self, 0).iter().all(|&d| d != UNREACHED)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the given
    /// order; returns the graph and the map new-id → old-id.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = build_graph(vertices.len(), &edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }
}

/// BFS returning raw rows with [`UNREACHED`] for other components.
pub(crate) fn bfs_raw(g: &Graph, s: VertexId) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Single-source hop distances from `s`.
pub fn bfs_distances(g: &Graph, s: VertexId) -> Vec<Distance> {
    bfs_raw(g, s)
        .into_iter()
        .map(|d| {
            if d == UNREACHED {
                Distance::Unreachable
            } else {
                Distance::Finite(d)
            }
        })
        .collect()
}

/// Cut vertices and biconnected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertices whose removal increases the number of components.
    pub cut_vertices: VertexSet,
    /// Vertex sets of the blocks, each sorted ascending; isolated vertices
    /// form singleton blocks. Blocks are listed in ascending order.
    pub blocks: Vec<Vec<VertexId>>,
}

/// Hopcroft–Tarjan lowpoint computation of blocks and cut vertices,
/// implemented iteratively so deep graphs cannot overflow the stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = VertexSet::new(n);
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // Frames: (vertex, parent, next neighbour index).
        let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent, idx) = *frame;
            if idx < g.degree(u) {
                frame.2 += 1;
                let w = g.neighbors(u)[idx];
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((u, w));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        if parent != root {
                            cut.insert(parent);
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, u) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    blocks.sort();
    BlockDecomposition {
        cut_vertices: cut,
        blocks,
    }
}

/// Vertices whose open neighbourhood is a clique (degree ≤ 1 included).
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_ids(
        g.n(),
        (0..g.n()).filter(|&v| g.is_clique(g.neighbors(v))),
    )
}

/// Lexicographic breadth-first search by partition refinement. Returns the
/// visit order.
pub fn lex_bfs(g: &Graph) -> Vec<VertexId> {
    if g.n() == 0 {
        return Vec::new();
    }
    lex_bfs_from(g, 0)
}

/// Lexicographic breadth-first search starting at `start`; ties are broken
/// by vertex id. On a chordal graph the reverse of the visit order is a
/// perfect elimination ordering that ends with `start`.
///
/// # Panics
/// If `start` is not a vertex of `g`.
pub fn lex_bfs_from(g: &Graph, start: VertexId) -> Vec<VertexId> {
    let n = g.n();
    assert!(start < n, "start vertex {start} out of range");
    let first: Vec<VertexId> = std::iter::once(start).chain((0..n).filter(|&v| v != start)).collect();
    let mut classes: Vec<Vec<VertexId>> = vec![first];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut mark = vec![false; n];
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                mark[w] = true;
            }
        }
        let mut refined = Vec::with_capacity(classes.len() * 2);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<_>, Vec<_>) = class.into_iter().partition(|&w| mark[w]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
    }
    order
}

/// Decides chordality. When chordal, returns a perfect elimination ordering
/// (each vertex's neighbours that come later in the ordering form a clique).
pub fn chordality_and_peo(g: &Graph) -> (bool, Option<Vec<VertexId>>) {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_ordering(g, &peo) {
        (true, Some(peo))
    } else {
        (false, None)
    }
}

/// Checks the perfect-elimination property with the standard parent test.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[VertexId]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if !later.iter().all(|&w| w == parent || g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

/// Replaces every edge by a path with `k` edges. Original vertices keep their
/// ids; the `k−1` new vertices of the `e`-th edge (in [`Graph::edges`] order)
/// get ids `n + e(k−1) … n + e(k−1) + k−2`, ordered from the smaller endpoint.
pub fn subdivide(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroSubdivision);
    }
    let n = g.n();
    let old = g.edges();
    let mut edges = Vec::with_capacity(old.len() * k);
    for (e, &(u, v)) in old.iter().enumerate() {
        let mut prev = u;
        for i in 0..k - 1 {
            let w = n + e * (k - 1) + i;
            edges.push((prev, w));
            prev = w;
        }
        edges.push((prev, v));
    }
    build_graph(n + old.len() * (k - 1), &edges)
}

/// Length of a shortest cycle, or `Unreachable` for forests.
pub fn girth(g: &Graph) -> Distance {
    let mut best = u32::MAX;
    for s in 0..g.n() {
        let mut dist = vec![UNREACHED; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Distance::Unreachable
    } else {
        Distance::Finite(best)
    }
}

/// True iff some vertex has `leaves` pairwise non-adjacent neighbours, i.e.
/// the graph contains an induced `K_{1,leaves}`.
pub fn has_induced_star(g: &Graph, leaves: usize) -> bool {
    assert!(leaves >= 1, "a star needs at least one leaf");
    (0..g.n()).any(|v| {
        g.degree(v) >= leaves && independent_set_at_least(g, g.neighbors(v).to_vec(), leaves)
    })
}

/// Branching search for an independent set of size `need` inside `cand`,
/// pruned by a greedy clique cover (a cover by `c` cliques caps the
/// independence number at `c`).
fn independent_set_at_least(g: &Graph, cand: Vec<VertexId>, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if cand.len() < need || greedy_clique_cover(g, &cand) < need {
        return false;
    }
    for (i, &v) in cand.iter().enumerate() {
        if cand.len() - i < need {
            break;
        }
        let rest: Vec<VertexId> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| !g.has_edge(v, w))
            .collect();
        if independent_set_at_least(g, rest, need - 1) {
            return true;
        }
    }
    false
}

fn greedy_clique_cover(g: &Graph, cand: &[VertexId]) -> usize {
    let mut cliques: Vec<Vec<VertexId>> = Vec::new();
    for &v in cand {
        match cliques
            .iter_mut()
            .find(|c| c.iter().all(|&w| g.has_edge(v, w)))
        {
            Some(c) => c.push(v),
            None => cliques.push(vec![v]),
        }
    }
    cliques.len()
}
