//! 3-SAT to interval graphs.
//!
//! The instance is laid out left to right on the real line. A *track* is a
//! chain of intervals in which each interval starts where the previous one
//! ends, so it induces a path; its *roots* are the intervals whose membership
//! in a geodetic set the track propagates rightwards. Tracks are totally
//! ordered by their right end. Every gadget first extends all existing tracks
//! by one to three unit intervals and then places a handful of new intervals
//! whose endpoints are midpoints between consecutive tracks, so that each new
//! interval sees exactly the tracks it is meant to see. All coordinates are
//! exact rationals.
//!
//! A satisfying assignment of a formula with `n` variables and `m` clauses
//! yields a geodetic set of size exactly `4 + 7n + 58m`
//! ([`sat_witness_geodetic`]).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::intervals::{intersection_graph, ClosedInterval};
use super::rational::Rational;
use super::ReductionError;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A CNF formula with exactly three literals per clause.
///
/// Literals are signed variable indices: `k` is `x_k`, `-k` is `¬x_k`, with
/// `1 ≤ k ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Validates variable ranges.
    pub fn new(n: usize, clauses: Vec<[i32; 3]>) -> Result<Self, ReductionError> {
        for (j, c) in clauses.iter().enumerate() {
            for &l in c {
                let v = l.unsigned_abs() as usize;
                if l == 0 || v > n {
                    return Err(ReductionError::MalformedFormula(format!(
                        "clause {j} has literal {l} outside 1..={n}"
                    )));
                }
            }
        }
        Ok(CnfFormula { n, clauses })
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of clauses.
    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    /// The clauses.
    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Value of literal `l` under `assignment` (indexed by variable − 1).
    pub fn literal_value(l: i32, assignment: &[bool]) -> bool {
        assignment[l.unsigned_abs() as usize - 1] == (l > 0)
    }

    /// Checks that `assignment` has one value per variable and satisfies
    /// every clause.
    pub fn check(&self, assignment: &[bool]) -> Result<(), ReductionError> {
        if assignment.len() != self.n {
            return Err(ReductionError::AssignmentLength { expected: self.n, got: assignment.len() });
        }
        match self
            .clauses
            .iter()
            .position(|c| !c.iter().any(|&l| Self::literal_value(l, assignment)))
        {
            Some(j) => Err(ReductionError::Unsatisfied(j)),
            None => Ok(()),
        }
    }

    /// True iff `assignment` satisfies the formula.
    pub fn satisfies(&self, assignment: &[bool]) -> bool {
        self.check(assignment).is_ok()
    }

    /// The lexicographically first satisfying assignment (false < true),
    /// found by backtracking; exponential in `n` in the worst case.
    pub fn find_satisfying_assignment(&self) -> Option<Vec<bool>> {
        let mut a = Vec::with_capacity(self.n);
        self.extend_assignment(&mut a).then_some(a)
    }

    fn extend_assignment(&self, a: &mut Vec<bool>) -> bool {
        let falsified = self.clauses.iter().any(|c| {
            c.iter().all(|&l| {
                let v = l.unsigned_abs() as usize;
                v <= a.len() && !Self::literal_value(l, a)
            })
        });
        if falsified {
            return false;
        }
        if a.len() == self.n {
            return true;
        }
        for value in [false, true] {
            a.push(value);
            if self.extend_assignment(a) {
                return true;
            }
            a.pop();
        }
        false
    }
}

/// `4 + 7n + 58m`, the witness size for a satisfiable formula.
pub fn expected_bound(n: usize, m: usize) -> usize {
    4 + 7 * n + 58 * m
}

/// `ε = 1 / max(n+m, 2)^4`.
///
/// The lower clamp keeps gadget offsets well below the unit length when the
/// formula is tiny (`n + m ≤ 1`); for `n + m ≥ 2` this is `1/(n+m)^4`.
pub fn epsilon(n: usize, m: usize) -> Rational {
    let s = (n + m).max(2) as i64;
    Rational::new(1, s.pow(4)).expect("positive denominator")
}

/// Parts of the start gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartPart {
    Origin,
    UnitOrigin,
    Top,
    UnitTop,
}

/// Parts of an implication gadget `p → q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImplicationPart {
    Q,
    R,
    S,
    T,
    T1,
    T2,
}

/// Parts of a covering gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoveringPart {
    A,
    B,
    C,
    D,
    Cov,
    F,
}

/// Parts of an insert gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InsertPart {
    Sigma,
    Track,
}

/// Parts of an AND gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AndPart {
    Alpha,
    Beta,
    Gamma,
    Delta,
    T1,
    T2,
    T3,
}

/// Structured label of every interval: which gadget created it and its role.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Label {
    Start { part: StartPart },
    /// The `index`-th interval of `track`, appended by a track extension.
    Extension { track: usize, index: usize },
    Implication { gadget: usize, part: ImplicationPart },
    Covering { clause: usize, part: CoveringPart },
    /// The `index`-th interval of the track rooted at `root`.
    CoveringTrack { clause: usize, root: CoveringPart, index: usize },
    Insert { gadget: usize, part: InsertPart },
    And { gadget: usize, part: AndPart },
    Tail { track: usize },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lower = |d: &dyn fmt::Debug| format!("{d:?}").to_lowercase();
        match self {
            Label::Start { part } => write!(f, "start.{}", lower(part)),
            Label::Extension { track, index } => write!(f, "track{track}.{index}"),
            Label::Implication { gadget, part } => write!(f, "impl{gadget}.{}", lower(part)),
            Label::Covering { clause, part } => write!(f, "cover{clause}.{}", lower(part)),
            Label::CoveringTrack { clause, root, index } => {
                write!(f, "cover{clause}.{}.track{index}", lower(root))
            }
            Label::Insert { gadget, part } => write!(f, "insert{gadget}.{}", lower(part)),
            Label::And { gadget, part } => write!(f, "and{gadget}.{}", lower(part)),
            Label::Tail { track } => write!(f, "tail{track}"),
        }
    }
}

/// Semantic names of the intervals the analysis talks about.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Name {
    Origin,
    Top,
    /// `x_var` (or its negation), the `q` of the variable's implication.
    Literal { var: usize, negated: bool },
    /// `a`, `b`, `c` of a clause (`slot` 0, 1, 2), or their primed copies.
    ClauseVar { clause: usize, slot: usize, primed: bool },
    Cov { clause: usize },
    /// Part of `AND(a, ℓ)` (unprimed) or `AND(a′, ¬ℓ)` (primed) for a slot.
    AndPart { clause: usize, slot: usize, primed: bool, part: AndPart },
    Tail { track: usize },
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = |s: usize| ["a", "b", "c"][s];
        let prime = |p: bool| if p { "'" } else { "" };
        match self {
            Name::Origin => write!(f, "o"),
            Name::Top => write!(f, "top"),
            Name::Literal { var, negated } => write!(f, "{}x{var}", if *negated { "~" } else { "" }),
            Name::ClauseVar { clause, slot, primed } => {
                write!(f, "{}{}{clause}", letter(*slot), prime(*primed))
            }
            Name::Cov { clause } => write!(f, "cov{clause}"),
            Name::AndPart { clause, slot, primed, part } => write!(
                f,
                "and({}{}{clause}).{}",
                letter(*slot),
                prime(*primed),
                format!("{part:?}").to_lowercase()
            ),
            Name::Tail { track } => write!(f, "tail{track}"),
        }
    }
}

/// An interval of the instance together with its label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RInterval {
    #[serde(flatten)]
    pub interval: ClosedInterval,
    pub label: Label,
}

/// A chain of intervals (ids into the instance) plus its roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Track {
    pub intervals: Vec<usize>,
    pub roots: Vec<usize>,
}

/// Interval ids created by an implication gadget `p → q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationRecord {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub t1: usize,
    pub t2: usize,
    /// Track the gadget was placed against.
    pub carrier: usize,
    /// Tracks `{t1, t2}` (root `q`) and `{t}` (roots `r`, `s`).
    pub tracks: [usize; 2],
}

/// Interval ids created by a covering gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringRecord {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub cov: usize,
    pub f: usize,
    /// Tracks rooted at `a`, `b`, `c`, `d` and `{cov, f}`.
    pub tracks: [usize; 5],
}

/// Interval ids created by an insert gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertRecord {
    pub p: usize,
    pub q: usize,
    pub sigma: usize,
    pub track: usize,
}

/// Interval ids created by an AND gadget (with `T_p < T_q`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AndRecord {
    pub p: usize,
    pub q: usize,
    pub insert: InsertRecord,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    /// Tracks rooted at `{α, β}`, `{γ}` and `{δ}`.
    pub tracks: [usize; 3],
}

/// The gadgets of one clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseRecord {
    pub covering: CoveringRecord,
    /// Implication gadget indices for `a → a′`, `b → b′`, `c → c′`.
    pub implications: [usize; 3],
    /// AND gadget indices for `AND(a, ℓ¹)`, `AND(b, ℓ²)`, `AND(c, ℓ³)`.
    pub and_direct: [usize; 3],
    /// AND gadget indices for `AND(a′, ¬ℓ¹)`, ….
    pub and_negated: [usize; 3],
}

/// The generated interval instance with all bookkeeping needed by the
/// witness builder and the structural tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalInstance {
    pub formula: CnfFormula,
    pub epsilon: Rational,
    pub intervals: Vec<RInterval>,
    pub tracks: Vec<Track>,
    /// `tails[t]` is the point interval closing track `t`.
    pub tails: Vec<usize>,
    pub named: BTreeMap<Name, usize>,
    pub implications: Vec<ImplicationRecord>,
    pub ands: Vec<AndRecord>,
    pub clauses: Vec<ClauseRecord>,
    /// `literals[i] = [x_{i+1}, ¬x_{i+1}]`.
    pub literals: Vec<[usize; 2]>,
}

impl IntervalInstance {
    /// Variable count of the source formula.
    pub fn n(&self) -> usize {
        self.formula.n()
    }

    /// Clause count of the source formula.
    pub fn m(&self) -> usize {
        self.formula.m()
    }

    /// The bare intervals, indexed like the graph vertices.
    pub fn closed_intervals(&self) -> Vec<ClosedInterval> {
        self.intervals.iter().map(|r| r.interval.clone()).collect()
    }

    /// The intersection graph; vertex `i` is interval `i`.
    pub fn intersection_graph(&self) -> Graph {
        intersection_graph(&self.closed_intervals())
    }

    /// Ids of the point intervals, ascending.
    pub fn point_intervals(&self) -> Vec<usize> {
        (0..self.intervals.len()).filter(|&i| self.intervals[i].interval.is_point()).collect()
    }

    /// Right end of track `t`.
    pub fn track_max(&self, t: usize) -> &Rational {
        &self.intervals[*self.tracks[t].intervals.last().expect("tracks are nonempty")].interval.hi
    }

    /// Track ids sorted by right end.
    pub fn track_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.tracks.len()).collect();
        order.sort_by(|&a, &b| self.track_max(a).cmp(self.track_max(b)));
        order
    }

    /// The witness-size bound `4 + 7n + 58m`.
    pub fn expected_bound(&self) -> usize {
        expected_bound(self.n(), self.m())
    }

    /// Interval id for a name.
    pub fn id(&self, name: &Name) -> Option<usize> {
        self.named.get(name).copied()
    }
}

/// Stateful left-to-right constructor. Every gadget appends intervals and
/// tracks; nothing already placed is ever moved.
#[derive(Clone, Debug)]
pub struct IntervalBuilder {
    epsilon: Rational,
    intervals: Vec<RInterval>,
    tracks: Vec<Track>,
    root_track: HashMap<usize, usize>,
    origin: usize,
    top: usize,
    implications: Vec<ImplicationRecord>,
    inserts: usize,
    ands: Vec<AndRecord>,
}

impl IntervalBuilder {
    /// The start gadget: `o = [1,1]`, `u_o = [1,2]`, `⊤ = [1+ε,1+ε]`,
    /// `u_⊤ = [1+ε,2+ε]`, tracks `{u_o}` (root `o`) and `{u_⊤}` (root `⊤`).
    pub fn start(epsilon: Rational) -> Self {
        let mut b = IntervalBuilder {
            epsilon,
            intervals: Vec::new(),
            tracks: Vec::new(),
            root_track: HashMap::new(),
            origin: 0,
            top: 0,
            implications: Vec::new(),
            inserts: 0,
            ands: Vec::new(),
        };
        let one = Rational::one();
        let two = Rational::integer(2);
        let top_at = &one + &b.epsilon;
        b.origin = b.push_point(one.clone(), Label::Start { part: StartPart::Origin });
        let uo = b.push(one, two.clone(), Label::Start { part: StartPart::UnitOrigin });
        b.top = b.push_point(top_at.clone(), Label::Start { part: StartPart::Top });
        let ut = b.push(top_at, two + &b.epsilon, Label::Start { part: StartPart::UnitTop });
        b.new_track(vec![uo], vec![b.origin]);
        b.new_track(vec![ut], vec![b.top]);
        b
    }

    /// ε used for offsets.
    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    /// The start interval `o`.
    pub fn origin(&self) -> usize {
        self.origin
    }

    /// The true interval `⊤`.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Intervals placed so far.
    pub fn intervals(&self) -> &[RInterval] {
        &self.intervals
    }

    /// Tracks so far.
    pub fn tracks(&self) -> &[Track] {
        &self.tracks
    }

    /// Track whose roots include `p`.
    pub fn track_of_root(&self, p: usize) -> Option<usize> {
        self.root_track.get(&p).copied()
    }

    /// Track ids sorted by right end.
    pub fn track_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.tracks.len()).collect();
        order.sort_by(|&a, &b| self.track_max(a).cmp(self.track_max(b)));
        order
    }

    fn track_max(&self, t: usize) -> &Rational {
        &self.intervals[*self.tracks[t].intervals.last().expect("tracks are nonempty")].interval.hi
    }

    fn lo(&self, id: usize) -> Rational {
        self.intervals[id].interval.lo.clone()
    }

    fn hi(&self, id: usize) -> Rational {
        self.intervals[id].interval.hi.clone()
    }

    fn push(&mut self, lo: Rational, hi: Rational, label: Label) -> usize {
        let interval = ClosedInterval::new(lo, hi).expect("gadget intervals are nonempty");
        self.intervals.push(RInterval { interval, label });
        self.intervals.len() - 1
    }

    fn push_point(&mut self, at: Rational, label: Label) -> usize {
        self.intervals.push(RInterval { interval: ClosedInterval::point(at), label });
        self.intervals.len() - 1
    }

    /// Unit interval `[from, from+1]`.
    fn push_unit(&mut self, from: Rational, label: Label) -> usize {
        let to = &from + &Rational::one();
        self.push(from, to, label)
    }

    fn new_track(&mut self, intervals: Vec<usize>, roots: Vec<usize>) -> usize {
        let t = self.tracks.len();
        for &r in &roots {
            self.root_track.insert(r, t);
        }
        self.tracks.push(Track { intervals, roots });
        t
    }

    /// Appends `k` unit intervals to every existing track; returns the new
    /// ids per track.
    fn extend(&mut self, k: usize) -> Vec<Vec<usize>> {
        (0..self.tracks.len())
            .map(|t| {
                (0..k)
                    .map(|_| {
                        let from = self.track_max(t).clone();
                        let index = self.tracks[t].intervals.len();
                        let id = self.push_unit(from, Label::Extension { track: t, index });
                        self.tracks[t].intervals.push(id);
                        id
                    })
                    .collect()
            })
            .collect()
    }

    fn position(order: &[usize], t: usize) -> usize {
        order.iter().position(|&x| x == t).expect("every track is ordered")
    }

    fn root(&self, p: usize) -> Result<usize, ReductionError> {
        self.track_of_root(p).ok_or(ReductionError::NotARoot(p))
    }

    /// The track that the greedy rightmost-neighbour walk from `p` enters
    /// first. For a point root or a root whose own track starts at its right
    /// end this is the root's own track. For the `q` of an implication gadget
    /// the walk leaves through `r_q`, whose track runs slightly ahead of the
    /// track of `q`, and that track is returned.
    pub fn carrier_track(&self, p: usize) -> Result<usize, ReductionError> {
        let own = self.root(p)?;
        let mut member = HashMap::new();
        for (t, track) in self.tracks.iter().enumerate() {
            for &i in &track.intervals {
                member.insert(i, t);
            }
        }
        let mut cur = p;
        loop {
            let here = &self.intervals[cur].interval;
            let next = (0..self.intervals.len())
                .filter(|&i| i != cur && self.intervals[i].interval.intersects(here))
                .max_by(|&a, &b| {
                    self.intervals[a].interval.hi.cmp(&self.intervals[b].interval.hi).then(b.cmp(&a))
                });
            match next {
                Some(i) if self.intervals[i].interval.hi > here.hi => match member.get(&i) {
                    Some(&t) => return Ok(t),
                    None => cur = i,
                },
                _ => return Ok(own),
            }
        }
    }

    /// Implication gadget `p → q`; returns the new intervals.
    ///
    /// The gadget is placed against the carrier track of `p` (see
    /// [`IntervalBuilder::carrier_track`]); `X` and `X′` are the tracks just
    /// before and after the carrier. The shortest path from `p` to `s_q`
    /// runs along the carrier, which makes `q ∈ I(p, s_q)`.
    pub fn implication(&mut self, p: usize) -> Result<ImplicationRecord, ReductionError> {
        self.root(p)?;
        if p == self.origin {
            return Err(ReductionError::OriginRoot);
        }
        let tp = self.carrier_track(p)?;
        let order = self.track_order();
        let pos = Self::position(&order, tp);
        if pos == 0 {
            return Err(ReductionError::Ordering(format!("track of {p} is minimal")));
        }
        let ext = self.extend(3);
        let x = order[pos - 1];
        let x_next = order.get(pos + 1).copied();
        let mu = |b: &Self, t: usize| b.hi(ext[t][0]);
        let mv = |b: &Self, t: usize| b.hi(ext[t][1]);
        let (theta, theta2) = match x_next {
            Some(x2) => (mu(self, x2), mv(self, x2)),
            None => (mu(self, tp) + &self.epsilon, mv(self, tp) + &self.epsilon),
        };
        let g = self.implications.len();
        let label = |part| Label::Implication { gadget: g, part };
        let q_lo = mu(self, x).midpoint(&mu(self, tp));
        let q_hi = mu(self, tp).midpoint(&theta);
        let r_hi = mv(self, tp).midpoint(&theta2);
        let t1_hi = mv(self, tp).midpoint(&r_hi);
        let q = self.push(q_lo, q_hi.clone(), label(ImplicationPart::Q));
        let r = self.push(q_hi.clone(), r_hi.clone(), label(ImplicationPart::R));
        let s = self.push_point(r_hi.clone(), label(ImplicationPart::S));
        let t = self.push_unit(r_hi, label(ImplicationPart::T));
        let t1 = self.push(q_hi, t1_hi.clone(), label(ImplicationPart::T1));
        let t2 = self.push_unit(t1_hi, label(ImplicationPart::T2));
        let track1 = self.new_track(vec![t1, t2], vec![q]);
        let track2 = self.new_track(vec![t], vec![r, s]);
        let rec = ImplicationRecord { p, q, r, s, t, t1, t2, carrier: tp, tracks: [track1, track2] };
        self.implications.push(rec);
        Ok(rec)
    }

    /// Covering gadget of clause `clause`.
    ///
    /// `cov` starts at `max(v_T) + 2ε`, exactly where the second interval of
    /// the track of `a` ends, so each of `a`, `b`, `c` reaches `cov` and then
    /// `f` along a shortest path; the track of `d` stops short of `cov`.
    pub fn covering(&mut self, clause: usize) -> CoveringRecord {
        let tmax = *self.track_order().last().expect("at least the start tracks");
        let ext = self.extend(3);
        let eps = self.epsilon.clone();
        let times = |k: i64| &eps * &Rational::integer(k);
        let theta = self.lo(ext[tmax][0]) + &eps;
        let v_hi = self.hi(ext[tmax][1]);
        let label = |part| Label::Covering { clause, part };
        let a = self.push(theta.clone(), &theta + &times(1), label(CoveringPart::A));
        let b = self.push(theta.clone(), &theta + &times(2), label(CoveringPart::B));
        let c = self.push(theta.clone(), &theta + &times(3), label(CoveringPart::C));
        let d = self.push_point(theta, label(CoveringPart::D));
        let cov = self.push(&v_hi + &times(2), &v_hi + &times(7), label(CoveringPart::Cov));
        let f = self.push_point(&v_hi + &times(7), label(CoveringPart::F));
        let mut tracks = [0; 5];
        for (slot, (root, part)) in
            [(a, CoveringPart::A), (b, CoveringPart::B), (c, CoveringPart::C), (d, CoveringPart::D)]
                .into_iter()
                .enumerate()
        {
            let start = self.hi(root);
            let ids = (0..3)
                .map(|k| {
                    let from = &start + &Rational::integer(k as i64);
                    self.push_unit(from, Label::CoveringTrack { clause, root: part, index: k })
                })
                .collect();
            tracks[slot] = self.new_track(ids, vec![root]);
        }
        let tf = self.push_unit(self.hi(f), Label::CoveringTrack { clause, root: CoveringPart::F, index: 0 });
        tracks[4] = self.new_track(vec![tf], vec![cov, f]);
        CoveringRecord { a, b, c, d, cov, f, tracks }
    }

    /// `Ordering` of the tracks rooted at `p` and `q`.
    /// Order of the carrier tracks of `p` and `q`.
    pub fn compare_roots(&self, p: usize, q: usize) -> Result<Ordering, ReductionError> {
        let (tp, tq) = (self.carrier_track(p)?, self.carrier_track(q)?);
        Ok(self.track_max(tp).cmp(self.track_max(tq)))
    }

    /// Carrier tracks of `p` and `q`, which must come in this order.
    fn require_ordered(&self, p: usize, q: usize) -> Result<(usize, usize), ReductionError> {
        let (tp, tq) = (self.carrier_track(p)?, self.carrier_track(q)?);
        match self.track_max(tp).cmp(self.track_max(tq)) {
            Ordering::Less => Ok((tp, tq)),
            _ => Err(ReductionError::Ordering(format!("track of {p} must precede track of {q}"))),
        }
    }

    /// Insert gadget for roots `p`, `q` whose carrier tracks satisfy
    /// `T_p < T_q`: a point interval `σ` rooting a new track strictly
    /// between `T_p` and its successor.
    ///
    /// Every track is extended by two unit intervals `u_T`, `v_T`; `σ` sits
    /// at the midpoint of the right ends of `u_{T_p}` and `u_X` for the
    /// successor `X` of `T_p`, so the new unit track `[σ, σ+1]` ends between
    /// `v_{T_p}` and `v_X`.
    pub fn insert(&mut self, p: usize, q: usize) -> Result<InsertRecord, ReductionError> {
        let (tp, _) = self.require_ordered(p, q)?;
        let order = self.track_order();
        let x = order[Self::position(&order, tp) + 1];
        let ext = self.extend(2);
        let at = self.hi(ext[tp][0]).midpoint(&self.hi(ext[x][0]));
        let gadget = self.inserts;
        self.inserts += 1;
        let sigma = self.push_point(at.clone(), Label::Insert { gadget, part: InsertPart::Sigma });
        let unit = self.push_unit(at, Label::Insert { gadget, part: InsertPart::Track });
        let track = self.new_track(vec![unit], vec![sigma]);
        Ok(InsertRecord { p, q, sigma, track })
    }

    /// AND gadget for roots `p`, `q` whose carrier tracks satisfy
    /// `T_p < T_q`; the gadget is placed against the carrier tracks.
    pub fn and(&mut self, p: usize, q: usize) -> Result<AndRecord, ReductionError> {
        let (tp, tq) = self.require_ordered(p, q)?;
        let insert = self.insert(p, q)?;
        let tm = insert.track;
        let order = self.track_order();
        let pos_p = Self::position(&order, tp);
        let pos_q = Self::position(&order, tq);
        if pos_p == 0 {
            return Err(ReductionError::Ordering(format!("track of {p} is minimal")));
        }
        debug_assert_eq!(order[pos_p + 1], tm);
        let (y1, y2, y2_next) = (order[pos_p - 1], order[pos_q - 1], order.get(pos_q + 1).copied());
        let ext = self.extend(2);
        let mu = |b: &Self, t: usize| b.hi(ext[t][0]);
        let alpha_hi = mu(self, tp).midpoint(&mu(self, tm));
        let alpha_lo = mu(self, y1).midpoint(&mu(self, tp));
        let beta_at = mu(self, tp).midpoint(&alpha_hi);
        let gamma_hi = mu(self, y2).midpoint(&mu(self, tq));
        let h = match y2_next {
            Some(y) => mu(self, y),
            None => mu(self, tq) + &self.epsilon,
        };
        let delta_hi = mu(self, tq).midpoint(&h);
        let g = self.ands.len();
        let label = |part| Label::And { gadget: g, part };
        let alpha = self.push(alpha_lo, alpha_hi.clone(), label(AndPart::Alpha));
        let beta = self.push_point(beta_at.clone(), label(AndPart::Beta));
        let gamma = self.push(alpha_hi, gamma_hi.clone(), label(AndPart::Gamma));
        let delta = self.push(gamma_hi.clone(), delta_hi.clone(), label(AndPart::Delta));
        let u1 = self.push_unit(beta_at, label(AndPart::T1));
        let u2 = self.push_unit(gamma_hi, label(AndPart::T2));
        let u3 = self.push_unit(delta_hi, label(AndPart::T3));
        let tracks = [
            self.new_track(vec![u1], vec![alpha, beta]),
            self.new_track(vec![u2], vec![gamma]),
            self.new_track(vec![u3], vec![delta]),
        ];
        let rec = AndRecord { p, q, insert, alpha, beta, gamma, delta, tracks };
        self.ands.push(rec);
        Ok(rec)
    }

    /// AND gadget of two roots in whichever order their tracks come.
    fn and_unordered(&mut self, p: usize, q: usize) -> Result<AndRecord, ReductionError> {
        match self.compare_roots(p, q)? {
            Ordering::Greater => self.and(q, p),
            _ => self.and(p, q),
        }
    }

    /// End gadget: one more unit interval and a point tail per track.
    /// End gadget, closing the tracks one at a time in track order: each
    /// round extends every still-open track by one unit interval and then
    /// puts the point tail on the right end of the lowest open track.
    ///
    /// Closing all tracks in the same round would put every tail inside the
    /// last unit interval of the highest track, an induced `K_{1,k}`. With
    /// one track per round consecutive tails are more than 1 apart, so no
    /// interval contains two of them.
    fn finish(mut self) -> (IntervalBuilder, Vec<usize>) {
        let order = self.track_order();
        let mut tails = vec![0; order.len()];
        for (round, &t) in order.iter().enumerate() {
            for &open in &order[round..] {
                let from = self.track_max(open).clone();
                let index = self.tracks[open].intervals.len();
                let id = self.push_unit(from, Label::Extension { track: open, index });
                self.tracks[open].intervals.push(id);
            }
            tails[t] = self.push_point(self.track_max(t).clone(), Label::Tail { track: t });
        }
        (self, tails)
    }
}

/// Builds the interval instance of `formula`: start gadget, two implication
/// gadgets per variable (`⊤ → x_i`, `x_i → ¬x_i`), one clause gadget per
/// clause (covering gadget, then for each slot the implication `a → a′`
/// and the gadgets `AND(a, ℓ)`, `AND(a′, ¬ℓ)`), and the end gadget.
pub fn sat_to_intervals(formula: &CnfFormula) -> Result<IntervalInstance, ReductionError> {
    let (n, m) = (formula.n(), formula.m());
    let epsilon = epsilon(n, m);
    let mut b = IntervalBuilder::start(epsilon.clone());
    let mut named = BTreeMap::new();
    named.insert(Name::Origin, b.origin());
    named.insert(Name::Top, b.top());

    let mut literals = Vec::with_capacity(n);
    for var in 1..=n {
        let x = b.implication(b.top())?.q;
        let nx = b.implication(x)?.q;
        named.insert(Name::Literal { var, negated: false }, x);
        named.insert(Name::Literal { var, negated: true }, nx);
        literals.push([x, nx]);
    }
    let literal = |l: i32| literals[l.unsigned_abs() as usize - 1][usize::from(l < 0)];

    let mut clauses = Vec::with_capacity(m);
    for (j, clause) in formula.clauses().iter().enumerate() {
        let covering = b.covering(j);
        named.insert(Name::Cov { clause: j }, covering.cov);
        let mut rec = ClauseRecord {
            covering,
            implications: [0; 3],
            and_direct: [0; 3],
            and_negated: [0; 3],
        };
        for (slot, a) in [covering.a, covering.b, covering.c].into_iter().enumerate() {
            let imp = b.implication(a)?;
            rec.implications[slot] = b.implications.len() - 1;
            let a_prime = imp.q;
            named.insert(Name::ClauseVar { clause: j, slot, primed: false }, a);
            named.insert(Name::ClauseVar { clause: j, slot, primed: true }, a_prime);
            let l = clause[slot];
            for (primed, root, lit) in [(false, a, literal(l)), (true, a_prime, literal(-l))] {
                let and = b.and_unordered(root, lit)?;
                let idx = b.ands.len() - 1;
                if primed {
                    rec.and_negated[slot] = idx;
                } else {
                    rec.and_direct[slot] = idx;
                }
                for (part, id) in [
                    (AndPart::Alpha, and.alpha),
                    (AndPart::Beta, and.beta),
                    (AndPart::Gamma, and.gamma),
                    (AndPart::Delta, and.delta),
                ] {
                    named.insert(Name::AndPart { clause: j, slot, primed, part }, id);
                }
            }
        }
        clauses.push(rec);
    }

    let (b, tails) = b.finish();
    for (track, &id) in tails.iter().enumerate() {
        named.insert(Name::Tail { track }, id);
    }
    Ok(IntervalInstance {
        formula: formula.clone(),
        epsilon,
        intervals: b.intervals,
        tracks: b.tracks,
        tails,
        named,
        implications: b.implications,
        ands: b.ands,
        clauses,
        literals,
    })
}

/// The geodetic set certifying a satisfying assignment: every point
/// interval, the interval of each true literal, and per clause slot with
/// literal `ℓ` either `{a, γ(AND(a′, ¬ℓ))}` when `ℓ` is true or
/// `{a′, γ(AND(a, ℓ))}` when it is false. Its size is `4 + 7n + 58m`.
pub fn sat_witness_geodetic(
    inst: &IntervalInstance,
    assignment: &[bool],
) -> Result<VertexSet, ReductionError> {
    inst.formula.check(assignment)?;
    let mut s = VertexSet::from_ids(inst.intervals.len(), inst.point_intervals());
    for (i, &value) in assignment.iter().enumerate() {
        s.insert(inst.literals[i][usize::from(!value)]);
    }
    for (clause, rec) in inst.formula.clauses().iter().zip(&inst.clauses) {
        let vars = [rec.covering.a, rec.covering.b, rec.covering.c];
        for slot in 0..3 {
            let a_prime = inst.implications[rec.implications[slot]].q;
            if CnfFormula::literal_value(clause[slot], assignment) {
                s.insert(vars[slot]);
                s.insert(inst.ands[rec.and_negated[slot]].gamma);
            } else {
                s.insert(a_prime);
                s.insert(inst.ands[rec.and_direct[slot]].gamma);
            }
        }
    }
    Ok(s)
}
