//! Closed intervals with exact endpoints and their intersection graphs.

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::graph::{build_graph, Graph, VertexId};

/// A closed interval `[lo, hi]` with `lo ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl ClosedInterval {
    /// `[lo, hi]`; `None` when `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Option<Self> {
        (lo <= hi).then_some(ClosedInterval { lo, hi })
    }

    /// The point interval `[a, a]`.
    pub fn point(a: Rational) -> Self {
        ClosedInterval { lo: a.clone(), hi: a }
    }

    /// True for `[a, a]`.
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Closed intersection: touching endpoints count.
    pub fn intersects(&self, other: &ClosedInterval) -> bool {
        std::cmp::max(&self.lo, &other.lo) <= std::cmp::min(&self.hi, &other.hi)
    }

    /// True when `self ⊆ other`.
    pub fn is_contained_in(&self, other: &ClosedInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

/// The intersection graph of `intervals`; vertex `i` is `intervals[i]`.
///
/// Sweeps the intervals by left endpoint, keeping the set of intervals that
/// are still open; each new interval is adjacent to exactly the open ones.
pub fn intersection_graph(intervals: &[ClosedInterval]) -> Graph {
    let mut order: Vec<VertexId> = (0..intervals.len()).collect();
    order.sort_by(|&a, &b| intervals[a].lo.cmp(&intervals[b].lo).then(a.cmp(&b)));
    let mut active: Vec<VertexId> = Vec::new();
    let mut edges = Vec::new();
    for &i in &order {
        let lo = &intervals[i].lo;
        active.retain(|&j| &intervals[j].hi >= lo);
        edges.extend(active.iter().map(|&j| (j, i)));
        active.push(i);
    }
    build_graph(intervals.len(), &edges).expect("sweep emits only valid distinct pairs")
}
