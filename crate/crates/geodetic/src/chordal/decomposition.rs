//! Nice tree decompositions of chordal graphs.
//!
//! The decomposition comes from a perfect elimination ordering `v_1, …, v_n`:
//! vertex `v` owns the clique `{v} ∪ N⁺(v)` of itself and its later
//! neighbours, and hangs below its earliest later neighbour. Each edge of
//! this elimination tree becomes a chain of forget nodes (the child's
//! eliminated vertex) and introduce nodes (the parent's extra vertices),
//! siblings are merged by binary join nodes, childless cliques grow from an
//! empty leaf, and the last vertex is forgotten into the empty root.
//!
//! The ordering is the reverse of a lexicographic BFS started at the
//! smallest simplicial vertex, so the root's child bag is `{s}` with `s`
//! simplicial: `s` then belongs to every geodetic set.

use crate::graph::{is_perfect_elimination_ordering, lex_bfs_from, simplicial_vertices, Graph, VertexId};

use super::ChordalError;

/// Kind of a node, with the vertex it introduces or forgets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// Empty bag, no children.
    Leaf,
    /// Bag = child bag ∪ {x}.
    Introduce(VertexId),
    /// Bag = child bag ∖ {x}. The root is the forget node of the last vertex.
    Forget(VertexId),
    /// Two children with the node's bag.
    Join,
}

/// One node: kind, sorted bag, children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdNode {
    pub kind: NodeKind,
    pub bag: Vec<VertexId>,
    pub children: Vec<usize>,
}

/// A nice tree decomposition. Nodes are stored children-first, so index
/// order is a post-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<TdNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    /// Largest bag size, `ω(G)` for decompositions built here.
    pub fn max_bag(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0)
    }

    /// Number of nodes of each kind: `(leaf, introduce, forget, join)`.
    pub fn kind_counts(&self) -> (usize, usize, usize, usize) {
        let mut c = (0, 0, 0, 0);
        for n in &self.nodes {
            match n.kind {
                NodeKind::Leaf => c.0 += 1,
                NodeKind::Introduce(_) => c.1 += 1,
                NodeKind::Forget(_) => c.2 += 1,
                NodeKind::Join => c.3 += 1,
            }
        }
        c
    }

    /// Checks every structural invariant against `g`: children-first
    /// storage, kinds matching bag differences, clique bags, empty root and
    /// leaves, every edge inside a bag, and connected occurrence subtrees.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let nodes = &self.nodes;
        if self.root != nodes.len().checked_sub(1).ok_or("no nodes")? {
            return Err("root must be the last node".into());
        }
        if !nodes[self.root].bag.is_empty() {
            return Err("root bag must be empty".into());
        }
        let mut parent = vec![None; nodes.len()];
        for (i, node) in nodes.iter().enumerate() {
            if node.bag.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("node {i}: bag not sorted/distinct"));
            }
            if node.bag.iter().any(|&v| v >= g.n()) {
                return Err(format!("node {i}: vertex out of range"));
            }
            if !g.is_clique(&node.bag) {
                return Err(format!("node {i}: bag is not a clique"));
            }
            for &c in &node.children {
                if c >= i {
                    return Err(format!("node {i}: child {c} not stored before parent"));
                }
                if parent[c].replace(i).is_some() {
                    return Err(format!("node {c} has two parents"));
                }
            }
            let child_bag = |k: usize| &nodes[node.children[k]].bag;
            let ok = match node.kind {
                NodeKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NodeKind::Join => node.children.len() == 2 && *child_bag(0) == node.bag && *child_bag(1) == node.bag,
                NodeKind::Introduce(x) => {
                    node.children.len() == 1
                        && node.bag.contains(&x)
                        && node.bag.iter().copied().filter(|&v| v != x).eq(child_bag(0).iter().copied())
                }
                NodeKind::Forget(x) => {
                    node.children.len() == 1
                        && child_bag(0).contains(&x)
                        && child_bag(0).iter().copied().filter(|&v| v != x).eq(node.bag.iter().copied())
                }
            };
            if !ok {
                return Err(format!("node {i}: kind {:?} inconsistent with bags", node.kind));
            }
        }
        if parent.iter().enumerate().any(|(i, p)| p.is_none() && i != self.root) {
            return Err("decomposition is not a single tree".into());
        }
        for (u, v) in g.edges() {
            if !nodes.iter().any(|n| n.bag.contains(&u) && n.bag.contains(&v)) {
                return Err(format!("edge ({u},{v}) not in any bag"));
            }
        }
        for v in 0..g.n() {
            let holders: Vec<usize> = (0..nodes.len()).filter(|&i| nodes[i].bag.contains(&v)).collect();
            if holders.is_empty() {
                return Err(format!("vertex {v} in no bag"));
            }
            // A set of tree nodes is connected iff exactly one of them has
            // its parent outside the set.
            let tops = holders
                .iter()
                .filter(|&&i| parent[i].is_none_or(|p| !nodes[p].bag.contains(&v)))
                .count();
            if tops != 1 {
                return Err(format!("occurrences of vertex {v} are not connected"));
            }
        }
        Ok(())
    }
}

/// Appends nodes while keeping the children-first order.
#[derive(Default)]
pub(crate) struct TdBuilder {
    nodes: Vec<TdNode>,
}

impl TdBuilder {
    pub(crate) fn push(&mut self, kind: NodeKind, bag: Vec<VertexId>, children: Vec<usize>) -> usize {
        self.nodes.push(TdNode { kind, bag, children });
        self.nodes.len() - 1
    }

    pub(crate) fn bag(&self, id: usize) -> &[VertexId] {
        &self.nodes[id].bag
    }

    pub(crate) fn leaf(&mut self) -> usize {
        self.push(NodeKind::Leaf, Vec::new(), Vec::new())
    }

    pub(crate) fn introduce(&mut self, child: usize, x: VertexId) -> usize {
        let mut bag = self.bag(child).to_vec();
        let at = bag.binary_search(&x).expect_err("introduced vertex already in bag");
        bag.insert(at, x);
        self.push(NodeKind::Introduce(x), bag, vec![child])
    }

    pub(crate) fn forget(&mut self, child: usize, x: VertexId) -> usize {
        let bag: Vec<VertexId> = self.bag(child).iter().copied().filter(|&v| v != x).collect();
        self.push(NodeKind::Forget(x), bag, vec![child])
    }

    /// Forgets `bag(child) ∖ target` then introduces `target ∖ bag(child)`,
    /// both in increasing vertex order.
    pub(crate) fn morph(&mut self, mut id: usize, target: &[VertexId]) -> usize {
        let drop: Vec<VertexId> = self.bag(id).iter().copied().filter(|v| !target.contains(v)).collect();
        for v in drop {
            id = self.forget(id, v);
        }
        let add: Vec<VertexId> = target.iter().copied().filter(|v| !self.bag(id).contains(v)).collect();
        for v in add {
            id = self.introduce(id, v);
        }
        id
    }

    pub(crate) fn join(&mut self, a: usize, b: usize) -> usize {
        let bag = self.bag(a).to_vec();
        self.push(NodeKind::Join, bag, vec![a, b])
    }

    pub(crate) fn finish(self, root: usize) -> NiceTreeDecomposition {
        debug_assert_eq!(root, self.nodes.len() - 1);
        NiceTreeDecomposition { nodes: self.nodes, root }
    }
}

/// Builds the nice tree decomposition of a connected chordal graph.
pub fn build_nice_tree_decomposition(g: &Graph) -> Result<NiceTreeDecomposition, ChordalError> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(ChordalError::Disconnected);
    }
    let start = simplicial_vertices(g).iter().next().ok_or(ChordalError::NotChordal)?;
    let mut peo = lex_bfs_from(g, start);
    peo.reverse();
    if !is_perfect_elimination_ordering(g, &peo) {
        return Err(ChordalError::NotChordal);
    }
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let clique = |v: VertexId| {
        let mut c: Vec<VertexId> = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]))
            .collect();
        c.sort_unstable();
        c
    };
    let mut pending: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut b = TdBuilder::default();
    let mut top = None;
    for &v in &peo {
        let bag = clique(v);
        let mut node: Option<usize> = None;
        for child in std::mem::take(&mut pending[v]) {
            let lifted = b.morph(child, &bag);
            node = Some(match node {
                None => lifted,
                Some(acc) => b.join(acc, lifted),
            });
        }
        let node = match node {
            Some(id) => id,
            None => {
                let leaf = b.leaf();
                b.morph(leaf, &bag)
            }
        };
        match g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).min_by_key(|&w| pos[w]) {
            Some(p) => pending[p].push(node),
            None => top = Some(node),
        }
    }
    let top = top.expect("the last vertex has no later neighbour");
    debug_assert_eq!(b.bag(top), [start]);
    let root = b.forget(top, start);
    Ok(b.finish(root))
}
