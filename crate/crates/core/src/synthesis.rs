//! Construction of a hyper-order representing a given Outcast function.
//!
//! The construction runs in three steps, each kept inspectable through
//! [`SynthesisTrace`]:
//!
//! 1. order the fixpoints by a linear extension of the precedence their
//!    function reveals (see below);
//! 2. order each fixpoint's domain with the fixpoint greatest
//!    ([`domain_order`]);
//! 3. concatenate the domain sequences in fixpoint order and rank subsets by
//!    position ([`synthesize_order`]).
//!
//! An order induces `f` only if `f(B)` never outranks `f(A)` when `B ⊆ A`,
//! because the maximum over `2^B` cannot beat the maximum over the larger
//! pool `2^A`. Every inclusion pair therefore *reveals* a precedence
//! constraint `f(B) ≤ f(A)` between fixpoints, and the fixpoint sequence
//! must linearly extend this revealed precedence — extending plain inclusion
//! is not enough. The revealed precedence can be cyclic, in which case the
//! function is Outcast yet induced by no hyper-order at all; synthesis then
//! reports the cycle instead of an order. See
//! [`SynthesisError::PrecedenceCycle`].
//!
//! All remaining ties are pinned to the canonical key (cardinality-major,
//! bitmask-minor, fixpoint forced last in its domain), so synthesized orders
//! are reproducible byte for byte.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::choice::{ChoiceFunction, NotOutcast, OutcastWitness};
use crate::order::HyperOrder;
use crate::subset::SubsetId;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("head {head} is not a member of the domain")]
pub struct HeadNotInDomain {
    pub head: SubsetId,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthesisError {
    /// The input violates Outcast, so no order can induce it.
    #[error("not an Outcast function: f(a) ⊆ b ⊆ a but f(a) ≠ f(b) for a = {}, b = {}", .0.a, .0.b)]
    NotOutcast(OutcastWitness),
    /// The input is Outcast, yet still induced by no hyper-order: the
    /// precedence revealed by inclusion pairs forces each fixpoint in the
    /// cycle strictly below the next (and the last below the first).
    #[error("no hyper-order induces this function: revealed fixpoint precedence is cyclic")]
    PrecedenceCycle { cycle: Vec<SubsetId> },
}

/// First subset, by canonical key, where an order fails to induce the
/// expected choice function.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("representation mismatch at {subset}: the order induces {induced}, the function chooses {expected}")]
pub struct RepresentationMismatch {
    pub subset: SubsetId,
    pub induced: SubsetId,
    pub expected: SubsetId,
}

/// Every intermediate of the construction, alongside the composed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisTrace {
    fixpoint_sequence: Vec<SubsetId>,
    domain_sequences: BTreeMap<SubsetId, Vec<SubsetId>>,
    ranks: HyperOrder,
}

impl SynthesisTrace {
    /// The total order on the fixpoints, least first. A linear extension of
    /// the revealed precedence, hence also of inclusion.
    pub fn fixpoint_sequence(&self) -> &[SubsetId] {
        &self.fixpoint_sequence
    }

    /// The within-domain order of a fixpoint's fiber, least first; the
    /// fixpoint itself is always last.
    pub fn domain_sequence(&self, fixpoint: SubsetId) -> Option<&[SubsetId]> {
        self.domain_sequences.get(&fixpoint).map(Vec::as_slice)
    }

    /// The composed hyper-order.
    pub fn ranks(&self) -> &HyperOrder {
        &self.ranks
    }

    pub fn into_ranks(self) -> HyperOrder {
        self.ranks
    }
}

/// Sorts subsets by canonical key: a total order extending inclusion.
///
/// This is the unconstrained ordering used to break every tie in the
/// construction. It is *not* sufficient on its own to order the fixpoints of
/// an arbitrary Outcast function; [`synthesize_order`] additionally honors
/// the precedence revealed by the function.
pub fn fixpoint_order(fixpoints: &[SubsetId]) -> Vec<SubsetId> {
    let mut sequence = fixpoints.to_vec();
    sequence.sort_unstable_by_key(|s| s.canonical_key());
    sequence
}

/// Orders one domain: members other than the head by canonical key, then the
/// head last, making it the domain's maximum.
pub fn domain_order(
    members: &[SubsetId],
    head: SubsetId,
) -> Result<Vec<SubsetId>, HeadNotInDomain> {
    if !members.contains(&head) {
        return Err(HeadNotInDomain { head });
    }
    let mut sequence: Vec<SubsetId> = members.iter().copied().filter(|&m| m != head).collect();
    sequence.sort_unstable_by_key(|s| s.canonical_key());
    sequence.push(head);
    Ok(sequence)
}

/// Builds a hyper-order whose induced choice function is exactly `f`, or
/// proves that none exists.
///
/// Orders the fixpoints by the smallest (canonical-key lexicographic) linear
/// extension of the revealed precedence, emits each domain in
/// [`domain_order`], and assigns consecutive ranks by position.
pub fn synthesize_order(f: &ChoiceFunction) -> Result<SynthesisTrace, SynthesisError> {
    let partition = f
        .domains()
        .map_err(|NotOutcast(witness)| SynthesisError::NotOutcast(witness))?;
    let fixpoint_sequence = precedence_order(f, partition.fixpoints())?;

    let mut domain_sequences = BTreeMap::new();
    let mut ranks = vec![0u32; f.universe().subset_count()];
    let mut next_rank = 0u32;
    for &fixpoint in &fixpoint_sequence {
        let members = partition
            .members(fixpoint)
            .expect("every fixpoint keys its own fiber");
        let sequence =
            domain_order(members, fixpoint).expect("a fixpoint is a member of its own fiber");
        for &subset in &sequence {
            ranks[subset.index()] = next_rank;
            next_rank += 1;
        }
        domain_sequences.insert(fixpoint, sequence);
    }

    Ok(SynthesisTrace {
        fixpoint_sequence,
        domain_sequences,
        ranks: HyperOrder::from_permutation_unchecked(f.universe().clone(), ranks),
    })
}

/// Checks `induced_choice(order) = f` entrywise.
///
/// Both arguments must live on the same universe. On failure reports the
/// mismatching subset smallest by canonical key.
pub fn verify_representation(
    f: &ChoiceFunction,
    order: &HyperOrder,
) -> Result<(), RepresentationMismatch> {
    assert_eq!(
        f.universe(),
        order.universe(),
        "verify_representation requires a shared universe"
    );
    let mut subsets: Vec<SubsetId> = f.universe().subsets().collect();
    subsets.sort_unstable_by_key(|s| s.canonical_key());
    for subset in subsets {
        let induced = order.choose_max(subset);
        let expected = f.value(subset);
        if induced != expected {
            return Err(RepresentationMismatch {
                subset,
                induced,
                expected,
            });
        }
    }
    Ok(())
}

/// Topologically sorts the fixpoints under the revealed precedence
/// (`f(B)` before `f(A)` whenever `B ⊆ A` and the two differ), taking the
/// canonical-key smallest available fixpoint at every step.
fn precedence_order(
    f: &ChoiceFunction,
    fixpoints: &[SubsetId],
) -> Result<Vec<SubsetId>, SynthesisError> {
    let mut successors: BTreeMap<SubsetId, BTreeSet<SubsetId>> =
        fixpoints.iter().map(|&fp| (fp, BTreeSet::new())).collect();
    let mut predecessors_left: BTreeMap<SubsetId, usize> =
        fixpoints.iter().map(|&fp| (fp, 0)).collect();
    for a in f.universe().subsets() {
        let after = f.value(a);
        for b in a.subsets() {
            let before = f.value(b);
            if before != after && successors.get_mut(&before).unwrap().insert(after) {
                *predecessors_left.get_mut(&after).unwrap() += 1;
            }
        }
    }

    let mut available: BTreeSet<((u32, u32), SubsetId)> = fixpoints
        .iter()
        .filter(|fp| predecessors_left[fp] == 0)
        .map(|&fp| (fp.canonical_key(), fp))
        .collect();
    let mut sequence = Vec::with_capacity(fixpoints.len());
    while let Some((_, fixpoint)) = available.pop_first() {
        sequence.push(fixpoint);
        for &next in &successors[&fixpoint] {
            let left = predecessors_left.get_mut(&next).unwrap();
            *left -= 1;
            if *left == 0 {
                available.insert((next.canonical_key(), next));
            }
        }
    }

    if sequence.len() == fixpoints.len() {
        Ok(sequence)
    } else {
        Err(SynthesisError::PrecedenceCycle {
            cycle: extract_cycle(&successors, &sequence),
        })
    }
}

/// Pulls one concrete cycle out of the precedence graph restricted to the
/// fixpoints the topological sort could not emit. Walks canonical-key
/// smallest edges from the smallest stuck vertex, so the reported cycle is
/// deterministic.
fn extract_cycle(
    successors: &BTreeMap<SubsetId, BTreeSet<SubsetId>>,
    emitted: &[SubsetId],
) -> Vec<SubsetId> {
    let mut stuck: BTreeSet<SubsetId> = successors.keys().copied().collect();
    for fp in emitted {
        stuck.remove(fp);
    }
    // Vertices without successors inside the stuck set cannot lie on a
    // cycle; prune until every survivor has one.
    loop {
        let dead_ends: Vec<SubsetId> = stuck
            .iter()
            .copied()
            .filter(|fp| successors[fp].iter().all(|next| !stuck.contains(next)))
            .collect();
        if dead_ends.is_empty() {
            break;
        }
        for fp in dead_ends {
            stuck.remove(&fp);
        }
    }

    let start = *stuck
        .iter()
        .min_by_key(|fp| fp.canonical_key())
        .expect("a stalled topological sort leaves a cycle behind");
    let mut path = vec![start];
    let mut current = start;
    loop {
        current = *successors[&current]
            .iter()
            .filter(|next| stuck.contains(next))
            .min_by_key(|fp| fp.canonical_key())
            .expect("every surviving vertex keeps a successor");
        if let Some(position) = path.iter().position(|&fp| fp == current) {
            return path.split_off(position);
        }
        path.push(current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Universe;

    fn ids(masks: &[u32]) -> Vec<SubsetId> {
        masks.iter().copied().map(SubsetId::new).collect()
    }

    fn function(n: usize, table: &[u32]) -> ChoiceFunction {
        ChoiceFunction::new(
            Universe::alphabetic(n).unwrap(),
            table.iter().copied().map(SubsetId::new).collect(),
        )
        .unwrap()
    }

    #[test]
    fn fixpoint_order_respects_inclusion() {
        assert_eq!(fixpoint_order(&ids(&[0b0, 0b1])), ids(&[0b0, 0b1]));
    }

    #[test]
    fn fixpoint_order_breaks_cardinality_ties_by_bitmask() {
        assert_eq!(fixpoint_order(&ids(&[0b10, 0b01])), ids(&[0b01, 0b10]));
    }

    #[test]
    fn fixpoint_order_is_cardinality_major() {
        assert_eq!(
            fixpoint_order(&ids(&[0b11, 0b00, 0b10])),
            ids(&[0b00, 0b10, 0b11])
        );
    }

    #[test]
    fn domain_order_puts_head_last() {
        assert_eq!(
            domain_order(&ids(&[0b00, 0b10]), SubsetId::EMPTY).unwrap(),
            ids(&[0b10, 0b00])
        );
        assert_eq!(
            domain_order(&ids(&[0b01, 0b11]), SubsetId::new(0b01)).unwrap(),
            ids(&[0b11, 0b01])
        );
    }

    #[test]
    fn domain_order_of_singleton() {
        let head = SubsetId::new(0b101);
        assert_eq!(domain_order(&[head], head).unwrap(), vec![head]);
    }

    #[test]
    fn domain_order_rejects_foreign_head() {
        let err = domain_order(&ids(&[0b00, 0b10]), SubsetId::new(0b01)).unwrap_err();
        assert_eq!(err.head, SubsetId::new(0b01));
    }

    #[test]
    fn synthesis_of_identity_counts_up() {
        let trace = synthesize_order(&function(2, &[0, 1, 2, 3])).unwrap();
        assert_eq!(trace.ranks().ranks(), &[0, 1, 2, 3]);
        assert_eq!(trace.fixpoint_sequence(), ids(&[0, 1, 2, 3]).as_slice());
    }

    #[test]
    fn synthesis_of_constant_empty_puts_empty_last() {
        let trace = synthesize_order(&function(2, &[0, 0, 0, 0])).unwrap();
        assert_eq!(trace.ranks().ranks(), &[3, 0, 1, 2]);
        assert_eq!(trace.fixpoint_sequence(), &[SubsetId::EMPTY]);
        assert_eq!(
            trace.domain_sequence(SubsetId::EMPTY).unwrap(),
            ids(&[0b01, 0b10, 0b11, 0b00]).as_slice()
        );
    }

    #[test]
    fn synthesis_of_worked_function() {
        let trace = synthesize_order(&function(2, &[0, 1, 0, 1])).unwrap();
        assert_eq!(trace.ranks().ranks(), &[1, 3, 0, 2]);
        assert_eq!(trace.fixpoint_sequence(), ids(&[0b00, 0b01]).as_slice());
        assert_eq!(
            trace.domain_sequence(SubsetId::EMPTY).unwrap(),
            ids(&[0b10, 0b00]).as_slice()
        );
        assert_eq!(
            trace.domain_sequence(SubsetId::new(0b01)).unwrap(),
            ids(&[0b11, 0b01]).as_slice()
        );
    }

    #[test]
    fn synthesis_honors_revealed_precedence_over_canonical_order() {
        // f({a,b}) = {a} forces {b} below {a}, the opposite of the canonical
        // key order on the two singletons.
        let f = function(2, &[0, 1, 2, 1]);
        let trace = synthesize_order(&f).unwrap();
        assert_eq!(
            trace.fixpoint_sequence(),
            ids(&[0b00, 0b10, 0b01]).as_slice()
        );
        assert_eq!(trace.ranks().ranks(), &[0, 3, 1, 2]);
        assert!(verify_representation(&f, trace.ranks()).is_ok());
    }

    #[test]
    fn synthesis_rejects_non_outcast_input() {
        let err = synthesize_order(&function(2, &[0, 0, 0, 1])).unwrap_err();
        assert_eq!(
            err,
            SynthesisError::NotOutcast(OutcastWitness {
                a: SubsetId::new(0b11),
                b: SubsetId::new(0b01),
            })
        );
    }

    #[test]
    fn cyclic_precedence_is_reported_not_ordered() {
        // Outcast, yet f({a,b}) = {a}, f({b,c}) = {b} and f({a,c}) = {c}
        // force rank({b}) < rank({a}) < rank({c}) < rank({b}): no hyper-order
        // induces this function.
        let f = function(3, &[0, 1, 2, 1, 4, 4, 2, 7]);
        assert!(f.check_outcast().is_ok());
        let err = synthesize_order(&f).unwrap_err();
        assert_eq!(
            err,
            SynthesisError::PrecedenceCycle {
                cycle: ids(&[0b001, 0b100, 0b010]),
            }
        );

        // The mirror image cycles the other way round.
        let f = function(3, &[0, 1, 2, 2, 4, 1, 4, 7]);
        assert!(f.check_outcast().is_ok());
        let err = synthesize_order(&f).unwrap_err();
        assert_eq!(
            err,
            SynthesisError::PrecedenceCycle {
                cycle: ids(&[0b001, 0b010, 0b100]),
            }
        );
    }

    #[test]
    fn trace_concatenation_reproduces_ranks() {
        let trace = synthesize_order(&function(2, &[0, 1, 0, 1])).unwrap();
        let walk: Vec<SubsetId> = trace
            .fixpoint_sequence()
            .iter()
            .flat_map(|fp| trace.domain_sequence(*fp).unwrap().iter().copied())
            .collect();
        for (position, subset) in walk.iter().enumerate() {
            assert_eq!(trace.ranks().rank(*subset), position as u32);
        }
    }

    #[test]
    fn verify_accepts_worked_pairs() {
        let worked = function(2, &[0, 1, 0, 1]);
        let order = HyperOrder::new(worked.universe().clone(), vec![1, 3, 0, 2]).unwrap();
        assert!(verify_representation(&worked, &order).is_ok());

        let identity = function(2, &[0, 1, 2, 3]);
        let order = HyperOrder::new(identity.universe().clone(), vec![0, 1, 2, 3]).unwrap();
        assert!(verify_representation(&identity, &order).is_ok());
    }

    #[test]
    fn verify_reports_smallest_mismatch() {
        // [3,0,1,2] induces the constant-empty function, which disagrees with
        // the identity everywhere except ∅; {a} has the smallest key.
        let identity = function(2, &[0, 1, 2, 3]);
        let order = HyperOrder::new(identity.universe().clone(), vec![3, 0, 1, 2]).unwrap();
        let err = verify_representation(&identity, &order).unwrap_err();
        assert_eq!(err.subset, SubsetId::new(0b01));
        assert_eq!(err.induced, SubsetId::EMPTY);
        assert_eq!(err.expected, SubsetId::new(0b01));
    }

    #[test]
    fn synthesis_on_empty_universe() {
        let trace = synthesize_order(&function(0, &[0])).unwrap();
        assert_eq!(trace.ranks().ranks(), &[0]);
        assert!(verify_representation(&function(0, &[0]), trace.ranks()).is_ok());
    }
}
