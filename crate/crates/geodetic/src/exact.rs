//! Ground-truth minimum geodetic sets for small graphs.
//!
//! Simplicial vertices are never interior to a shortest path, so they belong
//! to every geodetic set and are fixed up front; the remaining vertices are
//! searched by increasing cardinality in lexicographic order, which makes the
//! first hit both minimum and lexicographically smallest. The block solver
//! applies the same search inside each biconnected component, with the cut
//! vertices of the component supplied for free.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{block_decomposition, simplicial_vertices, Graph, VertexId};
use crate::metric::{is_geodetic, DistanceTable};
use crate::vset::VertexSet;

/// Errors raised by the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The solvers require a connected graph with at least one vertex.
    #[error("graph is not connected")]
    Disconnected,
    /// A budget component was zero.
    #[error("budget must be positive")]
    InvalidBudget,
}

/// Work limits shared by all solvers. Exhaustion is a soft failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    /// Maximum number of complete candidate sets (or DP transitions) examined.
    pub max_candidates: u64,
    /// Wall-clock limit.
    pub time_limit: Duration,
}

impl SolveBudget {
    /// Validated constructor.
    pub fn new(max_candidates: u64, time_limit: Duration) -> Result<Self, SolveError> {
        if max_candidates == 0 || time_limit.is_zero() {
            return Err(SolveError::InvalidBudget);
        }
        Ok(SolveBudget {
            max_candidates,
            time_limit,
        })
    }

    /// Effectively unlimited (for tests and trusted small inputs).
    pub fn unlimited() -> Self {
        SolveBudget {
            max_candidates: u64::MAX,
            time_limit: Duration::from_secs(u64::MAX / 4),
        }
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_candidates: 1_000_000_000,
            time_limit: Duration::from_secs(600),
        }
    }
}

/// Tracks consumption of a [`SolveBudget`].
#[derive(Debug)]
pub(crate) struct BudgetMeter {
    budget: SolveBudget,
    start: Instant,
    used: u64,
    exhausted: bool,
}

impl BudgetMeter {
    pub(crate) fn new(budget: SolveBudget) -> Self {
        BudgetMeter {
            budget,
            start: Instant::now(),
            used: 0,
            exhausted: false,
        }
    }

    /// Consumes one unit; returns false once the budget is gone.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.used += 1;
        if self.used > self.budget.max_candidates
            || (self.used.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

/// Solver identity carried in results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Size-incremental subset search.
    Brute,
    /// Per-block subset search (optimal sets combine across cut vertices).
    Blocks,
    /// Solid-grid corner-sequence algorithm.
    SolidGrid,
    /// Tree-decomposition DP over a chordal graph.
    Chordal,
    /// Path-decomposition DP over an interval model.
    Interval,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Blocks => "blocks",
            Method::SolidGrid => "solid-grid",
            Method::Chordal => "chordal",
            Method::Interval => "interval",
        })
    }
}

/// A geodetic set together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// The geodetic set.
    pub set: VertexSet,
    /// `set.len()`.
    pub size: usize,
    /// True when no smaller geodetic set exists.
    pub optimal: bool,
    /// Producing solver.
    pub method: Method,
    /// Wall-clock time spent.
    pub elapsed: Duration,
}

impl SolveResult {
    pub(crate) fn new(set: VertexSet, optimal: bool, method: Method, elapsed: Duration) -> Self {
        SolveResult {
            size: set.len(),
            set,
            optimal,
            method,
            elapsed,
        }
    }
}

/// `I(u,v)` for every ordered pair, stored as flat bit rows.
struct PairIntervals {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl PairIntervals {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64);
        let t = DistanceTable::new(g);
        let mut data = vec![0u64; n * n * words];
        for u in 0..n {
            for v in u..n {
                let (du, dv, target) = (t.row(u), t.row(v), t.raw(u, v));
                for w in 0..n {
                    if du[w].saturating_add(dv[w]) == target {
                        for (a, b) in [(u, v), (v, u)] {
                            data[(a * n + b) * words + w / 64] |= 1 << (w % 64);
                        }
                    }
                }
            }
        }
        PairIntervals { n, words, data }
    }

    fn or_into(&self, u: VertexId, v: VertexId, acc: &mut [u64]) {
        let off = (u * self.n + v) * self.words;
        for (a, b) in acc.iter_mut().zip(&self.data[off..off + self.words]) {
            *a |= *b;
        }
    }
}

/// Lexicographic size-`k` search over `cand`, on top of the fixed `base`,
/// for a set whose closure is the whole vertex set.
struct SubsetSearch<'a> {
    pairs: &'a PairIntervals,
    cand: &'a [VertexId],
    full: Vec<u64>,
    meter: &'a mut BudgetMeter,
}

impl SubsetSearch<'_> {
    fn covered(&self, acc: &[u64]) -> bool {
        acc == self.full.as_slice()
    }

    fn run(&mut self, base: &[VertexId], k: usize) -> Option<Vec<VertexId>> {
        let mut acc = vec![0u64; self.pairs.words];
        for (i, &u) in base.iter().enumerate() {
            for &v in &base[..=i] {
                self.pairs.or_into(u, v, &mut acc);
            }
        }
        let mut chosen = base.to_vec();
        self.dfs(&mut chosen, 0, k, &acc)
    }

    fn dfs(&mut self, chosen: &mut Vec<VertexId>, from: usize, k: usize, acc: &[u64]) -> Option<Vec<VertexId>> {
        if k == 0 {
            if !self.meter.tick() {
                return None;
            }
            return self.covered(acc).then(|| chosen.clone());
        }
        for i in from..self.cand.len() {
            if self.cand.len() - i < k || self.meter.exhausted() {
                break;
            }
            let w = self.cand[i];
            let mut next = acc.to_vec();
            self.pairs.or_into(w, w, &mut next);
            for &p in chosen.iter() {
                self.pairs.or_into(w, p, &mut next);
            }
            chosen.push(w);
            let hit = self.dfs(chosen, i + 1, k - 1, &next);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Outcome of a bounded search for a geodetic superset of `fixed`.
pub(crate) enum SearchOutcome {
    /// Minimum extension (the chosen candidates only).
    Found(Vec<VertexId>),
    /// No extension of size `≤ max_extra` exists.
    NoneUpTo,
    /// Budget ran out.
    Exhausted,
}

/// Searches for the smallest `X ⊆ cand` such that `fixed ∪ X` is geodetic
/// in `g`, trying sizes `0..=max_extra` in order.
pub(crate) fn search_extension(
    g: &Graph,
    fixed: &[VertexId],
    cand: &[VertexId],
    max_extra: usize,
    meter: &mut BudgetMeter,
) -> SearchOutcome {
    let pairs = PairIntervals::new(g);
    let full = VertexSet::full(g.n());
    let mut full_words = vec![0u64; pairs.words];
    for v in full.iter() {
        full_words[v / 64] |= 1 << (v % 64);
    }
    let mut search = SubsetSearch {
        pairs: &pairs,
        cand,
        full: full_words,
        meter,
    };
    for k in 0..=max_extra.min(cand.len()) {
        if let Some(found) = search.run(fixed, k) {
            return SearchOutcome::Found(found[fixed.len()..].to_vec());
        }
        if search.meter.exhausted() {
            return SearchOutcome::Exhausted;
        }
    }
    SearchOutcome::NoneUpTo
}

/// Minimum geodetic set by simplicial-mandatory, size-incremental search.
pub fn min_geodetic_bruteforce(g: &Graph, budget: SolveBudget) -> Result<SolveResult, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let mut meter = BudgetMeter::new(budget);
    let mandatory = simplicial_vertices(g);
    let fixed = mandatory.to_vec();
    let cand: Vec<VertexId> = (0..g.n()).filter(|&v| !mandatory.contains(v)).collect();
    let outcome = search_extension(g, &fixed, &cand, cand.len(), &mut meter);
    Ok(match outcome {
        SearchOutcome::Found(extra) => {
            let set = VertexSet::from_ids(g.n(), fixed.into_iter().chain(extra));
            SolveResult::new(set, true, Method::Brute, meter.elapsed())
        }
        SearchOutcome::NoneUpTo => unreachable!("the full vertex set is always geodetic"),
        SearchOutcome::Exhausted => {
            SolveResult::new(VertexSet::full(g.n()), false, Method::Brute, meter.elapsed())
        }
    })
}

/// Minimum geodetic set assembled block by block: inside each biconnected
/// component `F`, the smallest `X ⊆ V(F) ∖ C` with `X ∪ (V(F) ∩ C)` geodetic
/// in `F`, where `C` is the set of cut vertices; the answer is `⋃ X`.
pub fn min_geodetic_blocks(g: &Graph, budget: SolveBudget) -> Result<SolveResult, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let mut meter = BudgetMeter::new(budget);
    let bd = block_decomposition(g);
    let mut set = VertexSet::new(g.n());
    for block in &bd.blocks {
        let (f, map) = g.induced_subgraph(block);
        let cuts: Vec<VertexId> = (0..f.n()).filter(|&i| bd.cut_vertices.contains(map[i])).collect();
        let simp = simplicial_vertices(&f);
        let mandatory: Vec<VertexId> = (0..f.n())
            .filter(|&i| simp.contains(i) && !bd.cut_vertices.contains(map[i]))
            .collect();
        let cand: Vec<VertexId> = (0..f.n())
            .filter(|&i| !simp.contains(i) && !bd.cut_vertices.contains(map[i]))
            .collect();
        let mut fixed = mandatory.clone();
        fixed.extend(&cuts);
        match search_extension(&f, &fixed, &cand, cand.len(), &mut meter) {
            SearchOutcome::Found(extra) => {
                for i in mandatory.into_iter().chain(extra) {
                    set.insert(map[i]);
                }
            }
            SearchOutcome::NoneUpTo | SearchOutcome::Exhausted => {
                return Ok(SolveResult::new(
                    VertexSet::full(g.n()),
                    false,
                    Method::Blocks,
                    meter.elapsed(),
                ));
            }
        }
    }
    Ok(SolveResult::new(set, true, Method::Blocks, meter.elapsed()))
}

/// Verdicts about a proposed solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    /// Whether the set is geodetic.
    pub geodetic: bool,
    /// `Some(true)` when exhaustively shown minimum, `Some(false)` when a
    /// smaller geodetic set was found, `None` when not checked or the budget ran out.
    pub optimal: Option<bool>,
    /// A smaller geodetic set, when one was found.
    pub smaller: Option<Vec<VertexId>>,
    /// Problems preventing a verdict (e.g. a disconnected graph).
    pub error: Option<String>,
}

/// Checks geodeticity and, when `claimed_optimal`, searches every smaller
/// size for a counterexample.
pub fn certify(g: &Graph, s: &VertexSet, claimed_optimal: bool, budget: SolveBudget) -> CertifyReport {
    let mut report = CertifyReport {
        geodetic: false,
        optimal: None,
        smaller: None,
        error: None,
    };
    match is_geodetic(g, s) {
        Ok(v) => report.geodetic = v,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    }
    if !(report.geodetic && claimed_optimal) {
        return report;
    }
    let mandatory = simplicial_vertices(g);
    let fixed = mandatory.to_vec();
    if s.len() <= fixed.len() {
        report.optimal = Some(true);
        return report;
    }
    let cand: Vec<VertexId> = (0..g.n()).filter(|&v| !mandatory.contains(v)).collect();
    let mut meter = BudgetMeter::new(budget);
    match search_extension(g, &fixed, &cand, s.len() - 1 - fixed.len(), &mut meter) {
        SearchOutcome::Found(extra) => {
            report.optimal = Some(false);
            let mut smaller = fixed;
            smaller.extend(extra);
            smaller.sort_unstable();
            report.smaller = Some(smaller);
        }
        SearchOutcome::NoneUpTo => report.optimal = Some(true),
        SearchOutcome::Exhausted => {}
    }
    report
}
