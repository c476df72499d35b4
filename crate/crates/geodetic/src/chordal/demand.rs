//! Transitions of the demand-driven variant of the dynamic program.
//!
//! The guessed variant fixes `t_ext` — the exact family of sets that
//! solution vertices *outside* the subtree are close to — when a vertex is
//! introduced, which multiplies every table by all exterior families that
//! might later be realised. Here the exterior part is instead a set of
//! *claims*: a claim `B` promises that some solution vertex outside the
//! subtree is close to `B`. Claims are created only at a forget node whose
//! vertex is not yet covered, are carried upwards through their possible
//! preimages, and are discharged by a solution vertex realising them (the
//! introduced vertex itself, or an interior set of the sibling at a join).
//! The root accepts only types without open claims.
//!
//! In this variant `t_cov` records only the bag vertices covered by pairs
//! of solution vertices inside the subtree; coverage through claims is
//! evaluated when it is needed, at forget nodes. `t_int` and `t_bag` keep
//! their exact meaning. Every stored certificate therefore satisfies: its
//! restriction to the bag is `t_bag`; `t_int` lists exactly the sets its
//! vertices are close to; `t_cov` is exactly the set of bag vertices on
//! shortest paths between two of its vertices; and every vertex below the
//! bag lies on a shortest path between a certificate vertex and either a
//! certificate vertex or a vertex close to one of the claims.

use super::types::{covered_by_families, covered_masks, BagStep, SubsetVector, TypeTuple};

/// Successor types at an introduce node of `x`, with the number of vertices
/// added to the certificate (`1` when `x` joins the solution).
///
/// Each open claim is mapped to one of its preimages (`B`, `B ∪ {x}`, or
/// `{x}` when the claim is the whole smaller bag); a claim on the whole
/// smaller bag is discharged by `x` itself when `x` joins the solution,
/// since `x` is adjacent to every vertex of that bag.
pub fn introduce_on_demand(step: &BagStep, tau1: &TypeTuple, family: Option<&SubsetVector>) -> Vec<(TypeTuple, usize)> {
    let x = step.x_bit();
    let small_full = step.small_full();
    let allowed = |m: u8| family.is_none_or(|f| f.contains(m));
    let mut out = Vec::new();
    for x_in in [false, true] {
        let mut t_int = tau1.t_int.map(|a| Some(step.lift(a)));
        let mut t_cov = step.lift(tau1.t_cov);
        if x_in {
            t_int.insert(x);
            // Pairs (x, x) and (x, a) for every solution vertex a below.
            t_cov |= x;
            for a in tau1.t_int.iter() {
                t_cov |= step.lift(a);
            }
        }
        let t_bag = step.lift(tau1.t_bag) | if x_in { x } else { 0 };
        let mut groups: Vec<Vec<u8>> = Vec::new();
        let mut dead = false;
        for a in tau1.t_ext.iter() {
            if x_in && a == small_full {
                continue;
            }
            let mut pre = vec![step.lift(a), step.lift(a) | x];
            if a == small_full {
                pre.push(x);
            }
            pre.retain(|&m| allowed(m));
            if pre.is_empty() {
                dead = true;
                break;
            }
            groups.push(pre);
        }
        if dead {
            continue;
        }
        for_each_pick(&groups, SubsetVector::EMPTY, &mut |t_ext| {
            out.push((
                TypeTuple {
                    t_int,
                    t_ext,
                    t_cov,
                    t_bag,
                },
                usize::from(x_in),
            ));
        });
    }
    out
}

fn for_each_pick(groups: &[Vec<u8>], acc: SubsetVector, f: &mut dyn FnMut(SubsetVector)) {
    match groups.split_first() {
        None => f(acc),
        Some((first, rest)) => {
            for &m in first {
                let mut next = acc;
                next.insert(m);
                for_each_pick(rest, next, f);
            }
        }
    }
}

/// Successor types at a forget node of `x`.
///
/// `x` must be covered: by a pair inside the subtree (`t_cov`), by an
/// interior set and an open claim, or else by a new claim `B` (a member of
/// `candidates`, over the child's bag) that together with an interior set
/// puts `x` on a shortest path. Each such `B` yields one successor. Types
/// with a claim containing `x` die: no vertex outside the subtree can be
/// close to a vertex all of whose neighbours have been seen.
pub fn forget_on_demand(step: &BagStep, tau1: &TypeTuple, candidates: &SubsetVector) -> Vec<TypeTuple> {
    let x = step.x_bit();
    if tau1.t_ext.iter().any(|b| b & x != 0) {
        return Vec::new();
    }
    let make = |t_ext: SubsetVector| TypeTuple {
        t_int: tau1.t_int.map(|a| step.shrink_close(a)),
        t_ext: t_ext.map(|b| Some(step.restrict(b))),
        t_cov: step.restrict(tau1.t_cov),
        t_bag: step.restrict(tau1.t_bag),
    };
    if (tau1.t_cov | covered_by_families(&tau1.t_int, &tau1.t_ext)) & x != 0 {
        return vec![make(tau1.t_ext)];
    }
    candidates
        .iter()
        .filter(|&b| b != 0 && b & x == 0)
        .filter(|&b| tau1.t_int.iter().any(|a| covered_masks(a, b) & x != 0))
        .map(|b| {
            let mut ext = tau1.t_ext;
            ext.insert(b);
            make(ext)
        })
        .collect()
}

/// The successor at a join node: interiors and subtree coverage combine,
/// and each side's claims realised by the other side's interior are
/// discharged.
pub fn join_on_demand(tau1: &TypeTuple, tau2: &TypeTuple) -> Option<TypeTuple> {
    if tau1.t_bag != tau2.t_bag {
        return None;
    }
    Some(TypeTuple {
        t_int: tau1.t_int.union(&tau2.t_int),
        t_ext: tau1.t_ext.difference(&tau2.t_int).union(&tau2.t_ext.difference(&tau1.t_int)),
        t_cov: tau1.t_cov | tau2.t_cov | covered_by_families(&tau1.t_int, &tau2.t_int),
        t_bag: tau1.t_bag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn introduce_discharges_whole_bag_claim() {
        // Small bag {a}, large bag {a, x} with x at bit 1.
        let step = BagStep::new(&[0], &[0, 1], 1).unwrap();
        let tau1 = TypeTuple {
            t_int: SubsetVector::EMPTY,
            t_ext: SubsetVector::from_masks([0b1]),
            t_cov: 0,
            t_bag: 0,
        };
        let succ = introduce_on_demand(&step, &tau1, None);
        // x out: three preimages of the claim {a}; x in: discharged.
        assert_eq!(succ.len(), 4);
        let with_x: Vec<_> = succ.iter().filter(|(_, add)| *add == 1).collect();
        assert_eq!(with_x.len(), 1);
        assert!(with_x[0].0.t_ext.is_empty());
        assert_eq!(with_x[0].0.t_cov, 0b10);
        assert_eq!(with_x[0].0.t_int, SubsetVector::from_masks([0b10]));
    }

    #[test]
    fn forget_adds_a_claim_only_when_needed() {
        // Bag {a, x}; solution vertex a, x uncovered.
        let step = BagStep::new(&[0], &[0, 1], 1).unwrap();
        let tau1 = TypeTuple {
            t_int: SubsetVector::from_masks([0b01]),
            t_ext: SubsetVector::EMPTY,
            t_cov: 0b01,
            t_bag: 0b01,
        };
        let all = SubsetVector::from_masks([0b01, 0b10, 0b11]);
        let succ = forget_on_demand(&step, &tau1, &all);
        // Only {a} could be a claim without x, and covered({a},{a}) = {a}.
        assert!(succ.is_empty());
        let covered = TypeTuple { t_cov: 0b11, ..tau1 };
        let succ = forget_on_demand(&step, &covered, &all);
        assert_eq!(succ.len(), 1);
        assert!(succ[0].t_ext.is_empty());
        assert_eq!(succ[0].t_bag, 0b1);
    }

    #[test]
    fn join_discharges_across() {
        let t1 = TypeTuple {
            t_int: SubsetVector::from_masks([0b01]),
            t_ext: SubsetVector::from_masks([0b10]),
            t_cov: 0,
            t_bag: 0,
        };
        let t2 = TypeTuple {
            t_int: SubsetVector::from_masks([0b10]),
            t_ext: SubsetVector::from_masks([0b11]),
            t_cov: 0,
            t_bag: 0,
        };
        let j = join_on_demand(&t1, &t2).unwrap();
        assert_eq!(j.t_ext, SubsetVector::from_masks([0b11]));
        assert_eq!(j.t_cov, 0b11);
        assert!(join_on_demand(&t1, &TypeTuple { t_bag: 1, ..t2 }).is_none());
    }
}
