//! The dynamic program over a nice tree decomposition.
//!
//! Tables map each type reachable at a node to the smallest certificate of
//! that type (ties broken by the lexicographically smallest vertex list).
//! Types are never enumerated up front: a node's table holds exactly the
//! types produced from its children's tables by the transition generators.
//!
//! Two treatments of the exterior part are available (see [`Exterior`]):
//! guessing the exact exterior family at every introduce node, or creating
//! exterior claims on demand. Both are exact; the second keeps far fewer
//! types alive on wide bags.

use std::collections::HashMap;

use crate::exact::{BudgetMeter, Method, SolveBudget, SolveResult};
use crate::graph::{bfs_distances, build_graph, Graph, VertexId};
use crate::vset::VertexSet;

use super::demand::{forget_on_demand, introduce_on_demand, join_on_demand};
use super::decomposition::{build_nice_tree_decomposition, NiceTreeDecomposition, NodeKind};
use super::types::{
    compatible_root, forget_successor, full_mask, introduce_successors, is_valid_type, join_successors, BagStep, SubsetVector,
    TypeTuple, MAX_BAG,
};
use super::ChordalError;

/// Default bag-size cap for general chordal graphs.
pub const DEFAULT_CHORDAL_CAP: usize = 3;
/// Default bag-size cap for interval graphs.
pub const DEFAULT_INTERVAL_CAP: usize = 8;

/// How the exterior component `t_ext` of a type is produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exterior {
    /// `t_ext` is exactly the family of sets that solution vertices outside
    /// the subtree are close to, guessed at introduce nodes and checked
    /// against the compatibility relations.
    Guessed,
    /// `t_ext` holds claims created at forget nodes only when needed (see
    /// [`super::demand`]); `t_cov` counts only coverage inside the subtree.
    #[default]
    OnDemand,
}

/// Knobs for the dynamic program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DpConfig {
    /// Largest bag (clique) size accepted; at most [`MAX_BAG`].
    pub omega_cap: usize,
    /// Treatment of the exterior component.
    pub exterior: Exterior,
    /// Re-check every table entry against the type definition on the
    /// auxiliary graph (slow; for tests).
    pub verify_certificates: bool,
}

impl DpConfig {
    /// Defaults for chordal graphs.
    pub fn chordal() -> Self {
        DpConfig {
            omega_cap: DEFAULT_CHORDAL_CAP,
            exterior: Exterior::default(),
            verify_certificates: false,
        }
    }

    /// Defaults for interval graphs.
    pub fn interval() -> Self {
        DpConfig {
            omega_cap: DEFAULT_INTERVAL_CAP,
            exterior: Exterior::default(),
            verify_certificates: false,
        }
    }
}

/// Best certificate of one type.
#[derive(Clone, Debug)]
struct Entry {
    size: usize,
    cert: VertexSet,
}

impl Entry {
    fn beats(&self, other: &Entry) -> bool {
        self.cert.size_lex_cmp(&other.cert).is_lt()
    }
}

type Table = HashMap<TypeTuple, Entry>;

fn offer(table: &mut Table, tau: TypeTuple, entry: Entry) {
    match table.get(&tau) {
        Some(old) if !entry.beats(old) => {}
        _ => {
            table.insert(tau, entry);
        }
    }
}

/// Minimum geodetic set of a connected chordal graph with clique number at
/// most the default cap.
pub fn dp_min_geodetic_chordal(g: &Graph, budget: SolveBudget) -> Result<SolveResult, ChordalError> {
    dp_min_geodetic_chordal_with(g, budget, &DpConfig::chordal())
}

/// [`dp_min_geodetic_chordal`] with explicit settings.
pub fn dp_min_geodetic_chordal_with(g: &Graph, budget: SolveBudget, config: &DpConfig) -> Result<SolveResult, ChordalError> {
    let td = build_nice_tree_decomposition(g)?;
    solve_on_decomposition(g, &td, None, budget, config, Method::Chordal)
}

/// Runs the dynamic program on `td`. `families`, when given, holds for each
/// node the allowed interior/exterior subsets of its bag.
pub(crate) fn solve_on_decomposition(
    g: &Graph,
    td: &NiceTreeDecomposition,
    families: Option<&[SubsetVector]>,
    budget: SolveBudget,
    config: &DpConfig,
    method: Method,
) -> Result<SolveResult, ChordalError> {
    let cap = config.omega_cap.min(MAX_BAG);
    let width = td.max_bag();
    if width > cap {
        return Err(ChordalError::CapExceeded { width, cap });
    }
    let mut meter = BudgetMeter::new(budget);
    let n = g.n();
    let below = config.verify_certificates.then(|| subtree_vertices(td, n));
    let mut tables: Vec<Option<Table>> = vec![None; td.nodes.len()];
    let family = |i: usize| families.map(|f| &f[i]);
    let admissible = |i: usize, tau: &TypeTuple| match family(i) {
        None => true,
        Some(f) => tau.t_int.is_subset(f) && tau.t_ext.is_subset(f),
    };

    for (i, node) in td.nodes.iter().enumerate() {
        let mut table = Table::new();
        let mut take = |c: usize| tables[c].take().expect("children are processed first");
        match node.kind {
            NodeKind::Leaf => {
                table.insert(TypeTuple::EMPTY, Entry { size: 0, cert: VertexSet::new(n) });
            }
            NodeKind::Introduce(x) => {
                let child = take(node.children[0]);
                let step = BagStep::new(&td.nodes[node.children[0]].bag, &node.bag, x)?;
                for (tau1, e1) in &child {
                    let successors = match config.exterior {
                        Exterior::Guessed => introduce_successors(&step, tau1, family(i)),
                        Exterior::OnDemand => introduce_on_demand(&step, tau1, family(i)),
                    };
                    for (tau, added) in successors {
                        if !meter.tick() {
                            return Err(ChordalError::BudgetExhausted);
                        }
                        if !admissible(i, &tau) {
                            continue;
                        }
                        let mut cert = e1.cert.clone();
                        if added == 1 {
                            cert.insert(x);
                        }
                        offer(&mut table, tau, Entry { size: e1.size + added, cert });
                    }
                }
            }
            NodeKind::Forget(x) if i == td.root => {
                let child = take(node.children[0]);
                let best = child
                    .iter()
                    .filter(|(tau1, _)| compatible_root(tau1))
                    .map(|(_, e)| e)
                    .min_by(|a, b| a.cert.size_lex_cmp(&b.cert))
                    .ok_or(ChordalError::NoCompatibleRootType(x))?;
                debug_assert_eq!(best.size, best.cert.len());
                return Ok(SolveResult::new(best.cert.clone(), true, method, meter.elapsed()));
            }
            NodeKind::Forget(x) => {
                let child = take(node.children[0]);
                let c = node.children[0];
                let step = BagStep::new(&node.bag, &td.nodes[c].bag, x)?;
                let candidates = match family(c) {
                    Some(f) => *f,
                    None => SubsetVector::from_masks(1..=full_mask(td.nodes[c].bag.len())),
                };
                for (tau1, e1) in &child {
                    if !meter.tick() {
                        return Err(ChordalError::BudgetExhausted);
                    }
                    let successors = match config.exterior {
                        Exterior::Guessed => forget_successor(&step, tau1).into_iter().collect(),
                        Exterior::OnDemand => forget_on_demand(&step, tau1, &candidates),
                    };
                    for tau in successors.into_iter().filter(|t| admissible(i, t)) {
                        offer(&mut table, tau, e1.clone());
                    }
                }
            }
            NodeKind::Join => {
                let left = take(node.children[0]);
                let right = take(node.children[1]);
                let mut by_bag: HashMap<u8, Vec<(&TypeTuple, &Entry)>> = HashMap::new();
                for (tau2, e2) in &right {
                    by_bag.entry(tau2.t_bag).or_default().push((tau2, e2));
                }
                for (tau1, e1) in &left {
                    for &(tau2, e2) in by_bag.get(&tau1.t_bag).into_iter().flatten() {
                        if !meter.tick() {
                            return Err(ChordalError::BudgetExhausted);
                        }
                        let successors = match config.exterior {
                            Exterior::Guessed => join_successors(tau1, tau2),
                            Exterior::OnDemand => join_on_demand(tau1, tau2).into_iter().collect(),
                        };
                        if successors.is_empty() {
                            continue;
                        }
                        let cert = e1.cert.union(&e2.cert);
                        let size = cert.len();
                        for tau in successors.into_iter().filter(|t| admissible(i, t)) {
                            offer(&mut table, tau, Entry { size, cert: cert.clone() });
                        }
                    }
                }
            }
        }
        debug_assert!(
            config.exterior == Exterior::OnDemand || table.keys().all(|t| is_valid_type(t, node.bag.len(), family(i)))
        );
        if let Some(below) = &below {
            for (tau, e) in &table {
                check_certificate(g, &node.bag, &below[i], tau, &e.cert, config.exterior)
                    .map_err(|why| ChordalError::CertificateViolation { node: i, why })?;
            }
        }
        tables[i] = Some(table);
    }
    unreachable!("the root is the last node")
}

/// For every node, the vertices of the bags in its subtree.
fn subtree_vertices(td: &NiceTreeDecomposition, n: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::with_capacity(td.nodes.len());
    for node in &td.nodes {
        let mut s = VertexSet::from_ids(n, node.bag.iter().copied());
        for &c in &node.children {
            s.union_with(&out[c]);
        }
        out.push(s);
    }
    out
}

/// Checks that `cert` realises `tau` at a node with bag `bag` whose subtree
/// covers the vertices `below`.
///
/// Builds the subgraph induced by `below` plus one extra vertex per exterior
/// set, adjacent to the members of that set, and verifies that
/// `cert ∩ bag = t_bag`; that every vertex of `below ∖ bag` lies on a
/// shortest path between a certificate vertex and a certificate or extra
/// vertex; that `t_cov` is exactly the set of bag vertices on such paths
/// (for [`Exterior::Guessed`]) or on shortest paths between two certificate
/// vertices (for [`Exterior::OnDemand`]); and that `t_int` lists exactly the
/// sets the certificate vertices are close to.
pub fn check_certificate(
    g: &Graph,
    bag: &[VertexId],
    below: &VertexSet,
    tau: &TypeTuple,
    cert: &VertexSet,
    exterior: Exterior,
) -> Result<(), String> {
    if !cert.is_subset(below) {
        return Err("certificate leaves the subtree".into());
    }
    let local: Vec<VertexId> = below.to_vec();
    let index = |v: VertexId| local.binary_search(&v).expect("vertex inside the subtree");
    let ext: Vec<u8> = tau.t_ext.iter().collect();
    let m = local.len() + ext.len();
    let mut edges = Vec::new();
    for (a, &u) in local.iter().enumerate() {
        for &w in g.neighbors(u) {
            if w > u && below.contains(w) {
                edges.push((a, index(w)));
            }
        }
    }
    for (s, &mask) in ext.iter().enumerate() {
        for (bit, &x) in bag.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                edges.push((local.len() + s, index(x)));
            }
        }
    }
    let aux = build_graph(m, &edges).map_err(|e| e.to_string())?;

    let bag_mask = |set: &dyn Fn(VertexId) -> bool| -> u8 {
        bag.iter().enumerate().filter(|(_, &x)| set(x)).fold(0u8, |acc, (b, _)| acc | 1 << b)
    };
    if bag_mask(&|x| cert.contains(x)) != tau.t_bag {
        return Err(format!("bag part {:#b} != t_bag {:#b}", bag_mask(&|x| cert.contains(x)), tau.t_bag));
    }

    let sources: Vec<usize> = cert.iter().map(index).collect();
    let targets: Vec<usize> = sources.iter().copied().chain(local.len()..m).collect();
    let dist: HashMap<usize, Vec<u32>> = targets
        .iter()
        .map(|&s| (s, bfs_distances(&aux, s).iter().map(|d| d.finite().unwrap_or(u32::MAX)).collect()))
        .collect();
    let mut covered = vec![false; m];
    let mut covered_inside = vec![false; m];
    for &a in &sources {
        for &b in &targets {
            let (da, db) = (&dist[&a], &dist[&b]);
            let total = da[b];
            if total == u32::MAX {
                continue;
            }
            for v in 0..local.len() {
                if da[v].saturating_add(db[v]) == total {
                    covered[v] = true;
                    covered_inside[v] |= b < local.len();
                }
            }
        }
    }
    let in_bag = |v: VertexId| bag.binary_search(&v).is_ok();
    if let Some(&v) = local.iter().enumerate().find(|&(a, &v)| !in_bag(v) && !covered[a]).map(|(_, v)| v) {
        return Err(format!("vertex {v} below the bag is not covered"));
    }
    let cov = match exterior {
        Exterior::Guessed => bag_mask(&|x| covered[index(x)]),
        Exterior::OnDemand => bag_mask(&|x| covered_inside[index(x)]),
    };
    if cov != tau.t_cov {
        return Err(format!("covered bag part {cov:#b} != t_cov {:#b}", tau.t_cov));
    }

    let mut int = SubsetVector::EMPTY;
    if !bag.is_empty() {
        for &a in &sources {
            let row: Vec<u32> = bag.iter().map(|&x| dist[&a][index(x)]).collect();
            let d = *row.iter().min().expect("nonempty bag");
            if row.iter().any(|&r| r != d && r != d + 1) {
                return Err("bag is not a clique".into());
            }
            int.insert(row.iter().enumerate().filter(|(_, &r)| r == d).fold(0u8, |acc, (b, _)| acc | 1 << b));
        }
    }
    if int != tau.t_int {
        return Err(format!("interior sets {int:?} != t_int {:?}", tau.t_int));
    }
    debug_assert!(tau.t_bag & !full_mask(bag.len()) == 0);
    Ok(())
}
