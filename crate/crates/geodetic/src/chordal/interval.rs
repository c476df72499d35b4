//! The interval-graph specialisation: a path decomposition read off the
//! ordered maximal cliques of an interval model, and the per-bag family `𝒜`
//! of subsets a vertex can be close to, which bounds the number of types by
//! `2^{O(ω)}`.

use crate::exact::{Method, SolveBudget, SolveResult};
use crate::graph::{Graph, VertexId};
use crate::reductions::intervals::{intersection_graph, ClosedInterval};
use crate::vset::VertexSet;

use super::decomposition::{NiceTreeDecomposition, TdBuilder};
use super::dp::{solve_on_decomposition, DpConfig};
use super::types::{SubsetVector, MAX_BAG};
use super::ChordalError;

/// `𝒜(X)`: for each `u ∈ X`, the members starting no later than `u`, the
/// members ending no earlier than `u`, and `{u}`; deduplicated and sorted.
///
/// Every vertex of the graph is close (with respect to `X`) to a member of
/// this family.
pub fn interval_family_a(x: &VertexSet, rep: &[ClosedInterval]) -> Result<Vec<VertexSet>, ChordalError> {
    let members = x.to_vec();
    if members.iter().any(|&v| v >= rep.len()) {
        return Err(ChordalError::VertexOutOfRange);
    }
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !rep[a].intersects(&rep[b]) {
                return Err(ChordalError::NotAClique);
            }
        }
    }
    let n = x.universe();
    let mut out: Vec<VertexSet> = Vec::with_capacity(3 * members.len());
    for &u in &members {
        out.push(VertexSet::from_ids(n, members.iter().copied().filter(|&w| rep[w].lo <= rep[u].lo)));
        out.push(VertexSet::from_ids(n, members.iter().copied().filter(|&w| rep[w].hi >= rep[u].hi)));
        out.push(VertexSet::from_ids(n, [u]));
    }
    out.sort_by(|a, b| a.size_lex_cmp(b));
    out.dedup();
    Ok(out)
}

/// `𝒜` of a sorted bag as bag-position masks.
pub fn family_masks(bag: &[VertexId], rep: &[ClosedInterval]) -> Result<SubsetVector, ChordalError> {
    if bag.len() > MAX_BAG {
        return Err(ChordalError::CapExceeded {
            width: bag.len(),
            cap: MAX_BAG,
        });
    }
    let x = VertexSet::from_ids(rep.len(), bag.iter().copied());
    let family = interval_family_a(&x, rep)?;
    Ok(SubsetVector::from_masks(family.iter().map(|s| {
        bag.iter().enumerate().filter(|(_, &v)| s.contains(v)).fold(0u8, |acc, (b, _)| acc | 1 << b)
    })))
}

/// Maximal cliques of the intersection graph in left-to-right order.
///
/// Sweeps the endpoints, left ends before right ends at equal coordinates
/// (closed intervals touching at a point intersect); the active set is a
/// maximal clique exactly when a right end follows a left end.
pub fn ordered_maximal_cliques(rep: &[ClosedInterval]) -> Vec<Vec<VertexId>> {
    let mut events: Vec<(&_, bool, VertexId)> = Vec::with_capacity(2 * rep.len());
    for (v, iv) in rep.iter().enumerate() {
        events.push((&iv.lo, false, v));
        events.push((&iv.hi, true, v));
    }
    events.sort();
    let mut active: Vec<VertexId> = Vec::new();
    let mut cliques = Vec::new();
    let mut grew = false;
    for (_, is_end, v) in events {
        if is_end {
            if grew {
                let mut c = active.clone();
                c.sort_unstable();
                cliques.push(c);
                grew = false;
            }
            active.retain(|&w| w != v);
        } else {
            active.push(v);
            grew = true;
        }
    }
    cliques
}

/// Path-shaped nice decomposition: introduce the first maximal clique, then
/// between consecutive cliques forget what leaves and introduce what
/// enters, and finally forget the last clique down to its smallest private
/// vertex (which is simplicial) and into the root.
pub fn interval_path_decomposition(rep: &[ClosedInterval]) -> Result<NiceTreeDecomposition, ChordalError> {
    let g = intersection_graph(rep);
    if g.n() == 0 || !g.is_connected() {
        return Err(ChordalError::Disconnected);
    }
    let cliques = ordered_maximal_cliques(rep);
    let mut b = TdBuilder::default();
    let mut id = b.leaf();
    for c in &cliques {
        id = b.morph(id, c);
    }
    let last = cliques.last().expect("nonempty graph has a clique");
    let before: &[VertexId] = if cliques.len() > 1 { &cliques[cliques.len() - 2] } else { &[] };
    let keep = *last.iter().find(|v| !before.contains(v)).expect("a maximal clique has a private vertex");
    id = b.morph(id, &[keep]);
    let root = b.forget(id, keep);
    Ok(b.finish(root))
}

/// Minimum geodetic set of the (connected) intersection graph of `rep`.
pub fn dp_min_geodetic_interval(rep: &[ClosedInterval], budget: SolveBudget) -> Result<SolveResult, ChordalError> {
    dp_min_geodetic_interval_with(rep, budget, &DpConfig::interval())
}

/// [`dp_min_geodetic_interval`] with explicit settings.
pub fn dp_min_geodetic_interval_with(
    rep: &[ClosedInterval],
    budget: SolveBudget,
    config: &DpConfig,
) -> Result<SolveResult, ChordalError> {
    let g: Graph = intersection_graph(rep);
    let td = interval_path_decomposition(rep)?;
    let cap = config.omega_cap.min(MAX_BAG);
    if td.max_bag() > cap {
        return Err(ChordalError::CapExceeded { width: td.max_bag(), cap });
    }
    let families = td
        .nodes
        .iter()
        .map(|node| family_masks(&node.bag, rep))
        .collect::<Result<Vec<_>, _>>()?;
    solve_on_decomposition(&g, &td, Some(&families), budget, config, Method::Interval)
}
