//! Types of partial solutions and the compatibility relations between the
//! types of adjacent tree nodes.
//!
//! A bag is a sorted list of at most [`MAX_BAG`] vertices, and a subset of a
//! bag is a `u8` mask over bag positions. A type records, for a bag `X`:
//!
//! * `t_int`: the subsets `A ⊆ X` such that some vertex of the partial
//!   solution is close to `A` with respect to `X`;
//! * `t_ext`: the subsets `B ⊆ X` such that some vertex that the rest of the
//!   solution will contribute is close to `B` (singletons of bag members of
//!   the solution may also appear; pairing with them is pairing with the
//!   member itself);
//! * `t_cov`: the bag vertices lying on a shortest path between a solution
//!   vertex and a solution or exterior vertex (the partial solution's own
//!   members included);
//! * `t_bag`: the bag vertices in the partial solution.
//!
//! `t_cov` is the exact covered set, not a lower bound, which makes every
//! transition below a function of the child types and the guessed exterior.

use crate::graph::VertexId;

use super::ChordalError;

/// Hard upper bound on bag sizes: subsets of a bag are `u8` masks.
pub const MAX_BAG: usize = 8;

/// A set of bag subsets, i.e. a Boolean vector indexed by the `2^|X|` masks.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetVector([u64; 4]);

impl SubsetVector {
    /// The all-zero vector.
    pub const EMPTY: SubsetVector = SubsetVector([0; 4]);

    /// Builds a vector from masks.
    pub fn from_masks<I: IntoIterator<Item = u8>>(masks: I) -> Self {
        let mut v = Self::EMPTY;
        for m in masks {
            v.insert(m);
        }
        v
    }

    /// Entry for subset `mask`.
    pub fn contains(&self, mask: u8) -> bool {
        self.0[usize::from(mask >> 6)] >> (mask & 63) & 1 == 1
    }

    /// Sets the entry for `mask`.
    pub fn insert(&mut self, mask: u8) {
        self.0[usize::from(mask >> 6)] |= 1 << (mask & 63);
    }

    /// Clears the entry for `mask`.
    pub fn remove(&mut self, mask: u8) {
        self.0[usize::from(mask >> 6)] &= !(1 << (mask & 63));
    }

    /// True when no entry is set.
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Number of set entries.
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set entries in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..4usize).flat_map(move |w| {
            let word = self.0[w];
            (0..64u32).filter(move |b| word >> b & 1 == 1).map(move |b| (w as u32 * 64 + b) as u8)
        })
    }

    /// Entry-wise OR.
    pub fn union(&self, other: &SubsetVector) -> SubsetVector {
        SubsetVector(std::array::from_fn(|i| self.0[i] | other.0[i]))
    }

    /// Entry-wise AND.
    pub fn intersection(&self, other: &SubsetVector) -> SubsetVector {
        SubsetVector(std::array::from_fn(|i| self.0[i] & other.0[i]))
    }

    /// Entries of `self` not in `other`.
    pub fn difference(&self, other: &SubsetVector) -> SubsetVector {
        SubsetVector(std::array::from_fn(|i| self.0[i] & !other.0[i]))
    }

    /// True when every entry of `self` is set in `other`.
    pub fn is_subset(&self, other: &SubsetVector) -> bool {
        (0..4).all(|i| self.0[i] & !other.0[i] == 0)
    }

    /// Applies `f` to every entry, dropping `None` images.
    pub fn map(&self, mut f: impl FnMut(u8) -> Option<u8>) -> SubsetVector {
        SubsetVector::from_masks(self.iter().filter_map(&mut f))
    }
}

impl std::fmt::Debug for SubsetVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter().map(|m| format!("{m:#b}"))).finish()
    }
}

/// A type `(t_int, t_ext, t_cov, t_bag)` over some bag.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeTuple {
    pub t_int: SubsetVector,
    pub t_ext: SubsetVector,
    pub t_cov: u8,
    pub t_bag: u8,
}

impl TypeTuple {
    /// `(0, 0, ∅, ∅)`, the type of leaves and of the root.
    pub const EMPTY: TypeTuple = TypeTuple {
        t_int: SubsetVector::EMPTY,
        t_ext: SubsetVector::EMPTY,
        t_cov: 0,
        t_bag: 0,
    };
}

/// Which index family the `t_int` / `t_ext` vectors range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// All subsets of the bag.
    Chordal,
    /// Only members of the interval family `𝒜` of the bag.
    Interval,
}

/// Mask with the low `k` bits set: the whole bag.
pub fn full_mask(k: usize) -> u8 {
    debug_assert!(k <= MAX_BAG);
    ((1u16 << k) - 1) as u8
}

/// The vertices of `X` on shortest paths between a vertex close to `a` and a
/// vertex close to `b` on the other side of the clique cutset `X`.
pub fn covered_masks(a: u8, b: u8) -> u8 {
    if a & b != 0 {
        a & b
    } else {
        a | b
    }
}

/// Union of [`covered_masks`] over all `a ∈ int`, `b ∈ ext`.
pub fn covered_by_families(int: &SubsetVector, ext: &SubsetVector) -> u8 {
    let mut out = 0;
    for a in int.iter() {
        for b in ext.iter() {
            out |= covered_masks(a, b);
        }
    }
    out
}

/// The bag-validity conditions: no empty subset in either vector, every bag
/// member of the solution is close to its own singleton, and every vertex
/// covered through the bag by an interior/exterior pair is in `t_cov`.
/// Masks must stay inside the bag and, in interval mode, inside `family`.
pub fn is_valid_type(tau: &TypeTuple, k: usize, family: Option<&SubsetVector>) -> bool {
    let full = full_mask(k);
    let inside = |v: &SubsetVector| v.iter().all(|m| m & !full == 0) && family.is_none_or(|f| v.is_subset(f));
    !tau.t_int.contains(0)
        && !tau.t_ext.contains(0)
        && inside(&tau.t_int)
        && inside(&tau.t_ext)
        && tau.t_cov & !full == 0
        && tau.t_bag & !full == 0
        && (0..k).filter(|&i| tau.t_bag >> i & 1 == 1).all(|i| tau.t_int.contains(1 << i))
        && covered_by_families(&tau.t_int, &tau.t_ext) & !tau.t_cov == 0
}

/// Every valid type over a bag of `k` vertices, in increasing order of
/// `(t_bag, t_int, t_ext, t_cov)`.
///
/// In chordal mode `t_int` and `t_ext` range over all nonempty subsets; in
/// interval mode over the members of `family`, which is then required.
/// Bags larger than `cap` (or [`MAX_BAG`]) are rejected.
pub fn enumerate_valid_types(
    k: usize,
    mode: Mode,
    family: Option<&SubsetVector>,
    cap: usize,
) -> Result<impl Iterator<Item = TypeTuple>, ChordalError> {
    let cap = cap.min(MAX_BAG);
    if k > cap {
        return Err(ChordalError::CapExceeded { width: k, cap });
    }
    let full = full_mask(k);
    let index: Vec<u8> = match (mode, family) {
        (Mode::Chordal, _) => (1..=full).collect(),
        (Mode::Interval, Some(f)) => f.iter().filter(|&m| m != 0 && m & !full == 0).collect(),
        (Mode::Interval, None) => return Err(ChordalError::MissingFamily),
    };
    if index.len() > 24 {
        return Err(ChordalError::CapExceeded { width: k, cap });
    }
    let span = 1u64 << index.len();
    let vector = move |bits: u64| SubsetVector::from_masks((0..index.len()).filter(|&i| bits >> i & 1 == 1).map(|i| index[i]));
    Ok((0..=full).flat_map(move |bag| {
        let vector = vector.clone();
        (0..span).flat_map(move |ib| {
            let t_int = vector(ib);
            let vector = vector.clone();
            let bag_ok = (0..k).filter(|&i| bag >> i & 1 == 1).all(|i| t_int.contains(1 << i));
            (0..if bag_ok { span } else { 0 }).flat_map(move |eb| {
                let t_ext = vector(eb);
                let forced = covered_by_families(&t_int, &t_ext);
                (0..=full).filter(move |cov| cov & forced == forced).map(move |t_cov| TypeTuple {
                    t_int,
                    t_ext,
                    t_cov,
                    t_bag: bag,
                })
            })
        })
    }))
}

/// Position maps between a bag and a bag with one extra vertex.
///
/// `small` is the bag without `x`, `large` the bag with it; `lift` sends a
/// mask over `small` to the same vertices over `large`, `restrict` drops
/// `x` and goes the other way.
#[derive(Clone, Debug)]
pub struct BagStep {
    small: usize,
    x_bit: u8,
    lift: Vec<u8>,
    restrict: Vec<u8>,
}

impl BagStep {
    /// Maps for `large = small ∪ {x}`; both bags sorted.
    pub fn new(small: &[VertexId], large: &[VertexId], x: VertexId) -> Result<Self, ChordalError> {
        let pos = large.iter().position(|&v| v == x).ok_or(ChordalError::BagMismatch)?;
        let expected: Vec<VertexId> = large.iter().copied().filter(|&v| v != x).collect();
        if expected != small || large.len() > MAX_BAG {
            return Err(ChordalError::BagMismatch);
        }
        let spread = |m: u8| -> u8 {
            let low = m & ((1u16 << pos) - 1) as u8;
            let high = ((u16::from(m) >> pos) << (pos + 1)) as u8;
            low | high
        };
        let squeeze = |m: u8| -> u8 {
            let low = m & ((1u16 << pos) - 1) as u8;
            let high = ((u16::from(m) >> (pos + 1)) << pos) as u8;
            low | high
        };
        Ok(BagStep {
            small: small.len(),
            x_bit: 1 << pos,
            lift: (0..=full_mask(small.len())).map(spread).collect(),
            restrict: (0..=full_mask(large.len())).map(squeeze).collect(),
        })
    }

    /// Bit of `x` in the large bag.
    pub fn x_bit(&self) -> u8 {
        self.x_bit
    }

    /// Whole small bag as a mask.
    pub fn small_full(&self) -> u8 {
        full_mask(self.small)
    }

    /// Small-bag mask to large-bag mask.
    pub fn lift(&self, m: u8) -> u8 {
        self.lift[usize::from(m)]
    }

    /// Large-bag mask to small-bag mask (drops `x`).
    pub fn restrict(&self, m: u8) -> u8 {
        self.restrict[usize::from(m)]
    }

    /// The set a vertex close to `m ⊆ large` is close to within `small`:
    /// `m ∖ {x}`, or the whole small bag when `m = {x}`, or nothing when the
    /// small bag is empty.
    pub fn shrink_close(&self, m: u8) -> Option<u8> {
        let r = self.restrict(m);
        if r != 0 {
            Some(r)
        } else if self.small > 0 {
            Some(self.small_full())
        } else {
            None
        }
    }
}

/// The child's exterior vector implied by the parent's at an introduce node.
fn introduce_child_ext(step: &BagStep, tau: &TypeTuple) -> SubsetVector {
    let mut ext1 = tau.t_ext.map(|b| step.shrink_close(b));
    if tau.t_bag & step.x_bit() != 0 && step.small > 0 {
        ext1.insert(step.small_full());
    }
    ext1
}

/// Parent coverage at an introduce node: the child's coverage, plus the new
/// vertex when it is in the solution or reached from an interior vertex
/// through a disjoint exterior set containing it, plus, when the new vertex
/// is in the solution, every exterior set avoiding it.
fn introduce_cov(step: &BagStep, t_int1: &SubsetVector, t_cov1: u8, x_in: bool, ext: &SubsetVector) -> u8 {
    let x = step.x_bit();
    let mut cov = step.lift(t_cov1);
    if x_in {
        cov |= x;
        for b in ext.iter().filter(|b| b & x == 0) {
            cov |= b;
        }
    } else if t_int1.iter().any(|a| ext.iter().any(|b| b & x != 0 && step.lift(a) & b == 0)) {
        cov |= x;
    }
    cov
}

/// Introduce compatibility of `tau` (over the large bag) with `tau1` (over
/// the small bag, the child).
pub fn compatible_introduce(step: &BagStep, tau: &TypeTuple, tau1: &TypeTuple) -> bool {
    let x = step.x_bit();
    let x_in = tau.t_bag & x != 0;
    let mut int = tau1.t_int.map(|a| Some(step.lift(a)));
    if x_in {
        int.insert(x);
    }
    let bag = step.lift(tau1.t_bag) | if x_in { x } else { 0 };
    bag == tau.t_bag
        && tau.t_int == int
        && introduce_child_ext(step, tau) == tau1.t_ext
        && tau.t_cov == introduce_cov(step, &tau1.t_int, tau1.t_cov, x_in, &tau.t_ext)
}

/// All parent types compatible with `tau1` at an introduce node, each with
/// the number of vertices it adds (0 or 1). `family` restricts the
/// exterior sets in interval mode.
pub fn introduce_successors(step: &BagStep, tau1: &TypeTuple, family: Option<&SubsetVector>) -> Vec<(TypeTuple, usize)> {
    let x = step.x_bit();
    let allowed = |m: u8| family.is_none_or(|f| f.contains(m));
    let mut out = Vec::new();
    for x_in in [false, true] {
        let small_full = step.small_full();
        if x_in && step.small > 0 && !tau1.t_ext.contains(small_full) {
            continue;
        }
        // Each child exterior set must be explained by a nonempty choice of
        // parent sets shrinking onto it; the whole small bag needs no
        // explanation when the new vertex is in the solution.
        let mut groups: Vec<(Vec<u8>, bool)> = Vec::new();
        for a in tau1.t_ext.iter() {
            let mut pre = vec![step.lift(a), step.lift(a) | x];
            if a == small_full {
                pre.push(x);
            }
            pre.retain(|&m| allowed(m));
            groups.push((pre, !(x_in && a == small_full)));
        }
        if step.small == 0 && allowed(x) {
            groups.push((vec![x], false));
        }
        let mut int = tau1.t_int.map(|a| Some(step.lift(a)));
        if x_in {
            int.insert(x);
        }
        let bag = step.lift(tau1.t_bag) | if x_in { x } else { 0 };
        for_each_choice(&groups, &mut |ext| {
            let t_cov = introduce_cov(step, &tau1.t_int, tau1.t_cov, x_in, &ext);
            out.push((
                TypeTuple {
                    t_int: int,
                    t_ext: ext,
                    t_cov,
                    t_bag: bag,
                },
                usize::from(x_in),
            ));
        });
    }
    out
}

/// Calls `f` with every union obtained by picking a subset of each group's
/// options (a nonempty one when the group's flag is set).
fn for_each_choice(groups: &[(Vec<u8>, bool)], f: &mut dyn FnMut(SubsetVector)) {
    fn rec(groups: &[(Vec<u8>, bool)], acc: SubsetVector, f: &mut dyn FnMut(SubsetVector)) {
        let Some(((opts, need), rest)) = groups.split_first() else {
            f(acc);
            return;
        };
        for pick in 0u32..1 << opts.len() {
            if *need && pick == 0 {
                continue;
            }
            let mut next = acc;
            for (i, &m) in opts.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    next.insert(m);
                }
            }
            rec(rest, next, f);
        }
    }
    rec(groups, SubsetVector::EMPTY, f);
}

/// The unique parent type of `tau1` at a forget node, or `None` when the
/// forgotten vertex is uncovered or some exterior set contains it (a
/// vertex above the bag cannot be closest to a vertex below it).
pub fn forget_successor(step: &BagStep, tau1: &TypeTuple) -> Option<TypeTuple> {
    let x = step.x_bit();
    if tau1.t_cov & x == 0 || tau1.t_ext.iter().any(|b| b & x != 0) {
        return None;
    }
    Some(TypeTuple {
        t_int: tau1.t_int.map(|a| step.shrink_close(a)),
        t_ext: tau1.t_ext.map(|b| Some(step.restrict(b))),
        t_cov: step.restrict(tau1.t_cov),
        t_bag: step.restrict(tau1.t_bag),
    })
}

/// Forget compatibility of `tau` (over the small bag, the parent) with
/// `tau1` (over the large bag, the child).
pub fn compatible_forget(step: &BagStep, tau: &TypeTuple, tau1: &TypeTuple) -> bool {
    forget_successor(step, tau1).as_ref() == Some(tau)
}

/// Join compatibility: equal bags; each child's exterior is the parent's
/// exterior plus the other child's interior; the parent's interior and
/// coverage are the unions, coverage also including the pairs across the
/// two children.
pub fn compatible_join(tau: &TypeTuple, tau1: &TypeTuple, tau2: &TypeTuple) -> bool {
    tau.t_bag == tau1.t_bag
        && tau.t_bag == tau2.t_bag
        && tau1.t_ext == tau.t_ext.union(&tau2.t_int)
        && tau2.t_ext == tau.t_ext.union(&tau1.t_int)
        && tau.t_int == tau1.t_int.union(&tau2.t_int)
        && tau.t_cov == tau1.t_cov | tau2.t_cov | covered_by_families(&tau1.t_int, &tau2.t_int)
}

/// All parent types compatible with the pair `(tau1, tau2)` at a join node.
pub fn join_successors(tau1: &TypeTuple, tau2: &TypeTuple) -> Vec<TypeTuple> {
    if tau1.t_bag != tau2.t_bag || !tau2.t_int.is_subset(&tau1.t_ext) || !tau1.t_int.is_subset(&tau2.t_ext) {
        return Vec::new();
    }
    let lower = tau1.t_ext.difference(&tau2.t_int).union(&tau2.t_ext.difference(&tau1.t_int));
    let upper = tau1.t_ext.intersection(&tau2.t_ext);
    if !lower.is_subset(&upper) {
        return Vec::new();
    }
    let free: Vec<u8> = upper.difference(&lower).iter().collect();
    let t_int = tau1.t_int.union(&tau2.t_int);
    let t_cov = tau1.t_cov | tau2.t_cov | covered_by_families(&tau1.t_int, &tau2.t_int);
    (0u64..1 << free.len())
        .map(|pick| {
            let mut t_ext = lower;
            for (i, &m) in free.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    t_ext.insert(m);
                }
            }
            TypeTuple {
                t_int,
                t_ext,
                t_cov,
                t_bag: tau1.t_bag,
            }
        })
        .collect()
}

/// Root compatibility for the child type over the bag `{x}`: `x` is in the
/// solution and covered, and nothing is left outside.
pub fn compatible_root(tau1: &TypeTuple) -> bool {
    tau1.t_bag & 1 == 1 && tau1.t_cov & 1 == 1 && tau1.t_ext.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_vector_basics() {
        let mut v = SubsetVector::from_masks([1, 3, 200]);
        assert!(v.contains(200) && v.contains(3) && !v.contains(2));
        assert_eq!(v.iter().collect::<Vec<_>>(), vec![1, 3, 200]);
        v.remove(3);
        assert_eq!(v.len(), 2);
        assert!(SubsetVector::from_masks([1]).is_subset(&v));
    }

    #[test]
    fn bag_step_maps() {
        let step = BagStep::new(&[2, 9], &[2, 5, 9], 5).unwrap();
        assert_eq!(step.x_bit(), 0b010);
        assert_eq!(step.lift(0b11), 0b101);
        assert_eq!(step.restrict(0b111), 0b11);
        assert_eq!(step.shrink_close(0b010), Some(0b11));
        assert_eq!(step.shrink_close(0b110), Some(0b10));
        assert!(BagStep::new(&[2], &[2, 5, 9], 5).is_err());
        let empty = BagStep::new(&[], &[4], 4).unwrap();
        assert_eq!(empty.shrink_close(1), None);
    }

    #[test]
    fn empty_bag_has_one_type() {
        let all: Vec<_> = enumerate_valid_types(0, Mode::Chordal, None, 3).unwrap().collect();
        assert_eq!(all, vec![TypeTuple::EMPTY]);
    }

    #[test]
    fn singleton_bag_types_by_hand() {
        // Bag {x}: t_int, t_ext ⊆ {{x}}; x ∈ t_bag forces t_int = {{x}};
        // int and ext both containing {x} forces x ∈ t_cov.
        let all: Vec<_> = enumerate_valid_types(1, Mode::Chordal, None, 3).unwrap().collect();
        let mut expected = Vec::new();
        for bag in 0..2u8 {
            for int in 0..2u8 {
                for ext in 0..2u8 {
                    for cov in 0..2u8 {
                        if bag == 1 && int == 0 || int == 1 && ext == 1 && cov == 0 {
                            continue;
                        }
                        expected.push((bag, int, ext, cov));
                    }
                }
            }
        }
        let got: Vec<_> = all
            .iter()
            .map(|t| (t.t_bag, u8::from(t.t_int.contains(1)), u8::from(t.t_ext.contains(1)), t.t_cov))
            .collect();
        assert_eq!(got.len(), expected.len());
        for e in expected {
            assert!(got.contains(&e), "{e:?}");
        }
    }

    #[test]
    fn pair_bag_count_matches_raw_filter() {
        // Raw tuples: 2^4 · 2^4 · 4 · 4, filtered directly by the conditions.
        let mut raw = 0;
        for int in 0u8..16 {
            for ext in 0u8..16 {
                for cov in 0u8..4 {
                    for bag in 0u8..4 {
                        let set = |bits: u8| SubsetVector::from_masks((0..4u8).filter(|m| bits >> m & 1 == 1));
                        let (i, e) = (set(int), set(ext));
                        if i.contains(0) || e.contains(0) {
                            continue;
                        }
                        if (0..2).any(|u| bag >> u & 1 == 1 && !i.contains(1 << u)) {
                            continue;
                        }
                        let mut ok = true;
                        for x in 0..2u8 {
                            for a in i.iter() {
                                for b in e.iter() {
                                    let hit = a & b & (1 << x) != 0 || (a & b == 0 && (a | b) & (1 << x) != 0);
                                    if hit && cov & (1 << x) == 0 {
                                        ok = false;
                                    }
                                }
                            }
                        }
                        raw += usize::from(ok);
                    }
                }
            }
        }
        assert_eq!(enumerate_valid_types(2, Mode::Chordal, None, 3).unwrap().count(), raw);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_valid_types(4, Mode::Chordal, None, 3),
            Err(ChordalError::CapExceeded { width: 4, cap: 3 })
        ));
        assert!(matches!(enumerate_valid_types(1, Mode::Interval, None, 3), Err(ChordalError::MissingFamily)));
    }

    #[test]
    fn interval_mode_uses_family_only() {
        let family = SubsetVector::from_masks([0b01, 0b10, 0b11]);
        let restricted = SubsetVector::from_masks([0b01, 0b11]);
        let a = enumerate_valid_types(2, Mode::Interval, Some(&family), 8).unwrap().count();
        let b = enumerate_valid_types(2, Mode::Chordal, None, 8).unwrap().count();
        assert_eq!(a, b);
        let c: Vec<_> = enumerate_valid_types(2, Mode::Interval, Some(&restricted), 8).unwrap().collect();
        assert!(c.iter().all(|t| t.t_int.is_subset(&restricted) && t.t_ext.is_subset(&restricted)));
        assert!(c.len() < a);
    }

    fn all_types(k: usize) -> Vec<TypeTuple> {
        enumerate_valid_types(k, Mode::Chordal, None, 3).unwrap().collect()
    }

    #[test]
    fn introduce_generator_matches_predicate() {
        for (small, large, x) in [(vec![], vec![7], 7), (vec![1], vec![1, 4], 4), (vec![4], vec![1, 4], 1)] {
            let step = BagStep::new(&small, &large, x).unwrap();
            let parents = all_types(large.len());
            for tau1 in all_types(small.len()) {
                let mut generated: Vec<TypeTuple> = introduce_successors(&step, &tau1, None).into_iter().map(|p| p.0).collect();
                generated.sort();
                generated.dedup();
                let mut by_predicate: Vec<TypeTuple> = parents.iter().copied().filter(|t| compatible_introduce(&step, t, &tau1)).collect();
                by_predicate.sort();
                assert_eq!(generated, by_predicate, "child {tau1:?}");
            }
        }
    }

    #[test]
    fn forget_generator_matches_predicate() {
        for (small, large, x) in [(vec![], vec![7], 7), (vec![1], vec![1, 4], 4)] {
            let step = BagStep::new(&small, &large, x).unwrap();
            let parents = all_types(small.len());
            for tau1 in all_types(large.len()) {
                let by_predicate: Vec<TypeTuple> = parents.iter().copied().filter(|t| compatible_forget(&step, t, &tau1)).collect();
                let generated: Vec<TypeTuple> = forget_successor(&step, &tau1).into_iter().collect();
                assert_eq!(generated, by_predicate);
            }
        }
    }

    #[test]
    fn join_generator_matches_predicate() {
        let types = all_types(1);
        for t1 in &types {
            for t2 in &types {
                let mut generated = join_successors(t1, t2);
                generated.sort();
                let by_predicate: Vec<TypeTuple> = types.iter().copied().filter(|t| compatible_join(t, t1, t2)).collect();
                assert_eq!(generated, by_predicate, "{t1:?} {t2:?}");
            }
        }
    }

    #[test]
    fn worked_examples() {
        let step = BagStep::new(&[1], &[1, 4], 4).unwrap();
        // x ∈ t_bag requires t_int[{x}] = 1.
        let child = TypeTuple {
            t_ext: SubsetVector::from_masks([0b01]),
            ..TypeTuple::EMPTY
        };
        let good = TypeTuple {
            t_int: SubsetVector::from_masks([0b10]),
            t_ext: SubsetVector::EMPTY,
            t_cov: 0b10,
            t_bag: 0b10,
        };
        assert!(compatible_introduce(&step, &good, &child));
        let bad = TypeTuple {
            t_int: SubsetVector::EMPTY,
            ..good
        };
        assert!(!compatible_introduce(&step, &bad, &child));
        // With x outside the solution the parent's coverage restricted to
        // the child bag must equal the child's.
        let child2 = TypeTuple::EMPTY;
        let p = TypeTuple {
            t_cov: 0b01,
            ..TypeTuple::EMPTY
        };
        assert!(!compatible_introduce(&step, &p, &child2));
        assert!(compatible_introduce(&step, &TypeTuple::EMPTY, &child2));

        // Forget: an exterior set containing the forgotten vertex.
        let fstep = BagStep::new(&[1], &[1, 4], 4).unwrap();
        let c = TypeTuple {
            t_ext: SubsetVector::from_masks([0b11]),
            t_cov: 0b11,
            ..TypeTuple::EMPTY
        };
        assert!(forget_successor(&fstep, &c).is_none());
        // Forget: parent interior set without a source in the child.
        let c2 = TypeTuple {
            t_cov: 0b10,
            ..TypeTuple::EMPTY
        };
        let p2 = TypeTuple {
            t_int: SubsetVector::from_masks([0b1]),
            ..TypeTuple::EMPTY
        };
        assert!(!compatible_forget(&fstep, &p2, &c2));
        assert!(compatible_forget(&fstep, &TypeTuple::EMPTY, &c2));

        // Join: an interior set of one child missing from the other's exterior.
        let t1 = TypeTuple {
            t_int: SubsetVector::from_masks([0b1]),
            t_bag: 0,
            ..TypeTuple::EMPTY
        };
        let t2 = TypeTuple::EMPTY;
        let parent = TypeTuple {
            t_int: SubsetVector::from_masks([0b1]),
            ..TypeTuple::EMPTY
        };
        assert!(!compatible_join(&parent, &t1, &t2));
        assert!(compatible_join(&TypeTuple::EMPTY, &TypeTuple::EMPTY, &TypeTuple::EMPTY));

        // Root.
        let ok = TypeTuple {
            t_int: SubsetVector::from_masks([1]),
            t_ext: SubsetVector::EMPTY,
            t_cov: 1,
            t_bag: 1,
        };
        assert!(compatible_root(&ok));
        assert!(!compatible_root(&TypeTuple {
            t_ext: SubsetVector::from_masks([1]),
            ..ok
        }));
        assert!(!compatible_root(&TypeTuple { t_bag: 0, ..ok }));
    }
}
