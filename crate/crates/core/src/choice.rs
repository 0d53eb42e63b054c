//! Choice functions, the Outcast (a.k.a. Aizerman) condition, fixpoints and
//! their domains.
//!
//! A choice function maps every subset `A` of the universe to a chosen subset
//! `f(A) ⊆ A`. It satisfies Outcast when discarding non-chosen elements never
//! changes the choice: `f(A) ⊆ B ⊆ A` implies `f(A) = f(B)`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::subset::{SubsetId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChoiceError {
    #[error("choice table has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    /// The choice condition `f(A) ⊆ A` fails; reports the first offending `A`
    /// in ascending bitmask order.
    #[error("choice condition violated: f({subset}) = {value} is not a subset of {subset}")]
    ChoiceViolation { subset: SubsetId, value: SubsetId },
}

/// A pair `(a, b)` certifying an Outcast violation: `f(a) ⊆ b ⊆ a` holds but
/// `f(a) ≠ f(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutcastWitness {
    pub a: SubsetId,
    pub b: SubsetId,
}

impl OutcastWitness {
    /// Tie-breaking key: witnesses are reported smallest by
    /// `(canonical_key(a), canonical_key(b))`.
    pub fn canonical_key(&self) -> ((u32, u32), (u32, u32)) {
        (self.a.canonical_key(), self.b.canonical_key())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not an Outcast function: f(a) ⊆ b ⊆ a but f(a) ≠ f(b) for a = {a}, b = {b}", a = .0.a, b = .0.b)]
pub struct NotOutcast(pub OutcastWitness);

/// A total table from every subset of the universe to a chosen subset of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceFunction {
    universe: Universe,
    table: Vec<SubsetId>,
}

impl ChoiceFunction {
    /// Validates a raw table: it must have one entry per subset and satisfy
    /// the choice condition `f(A) ⊆ A` (which forces `f(∅) = ∅`).
    pub fn new(universe: Universe, table: Vec<SubsetId>) -> Result<Self, ChoiceError> {
        if table.len() != universe.subset_count() {
            return Err(ChoiceError::LengthMismatch {
                expected: universe.subset_count(),
                found: table.len(),
            });
        }
        for (bits, &value) in table.iter().enumerate() {
            let subset = SubsetId::new(bits as u32);
            if !value.is_subset_of(subset) {
                return Err(ChoiceError::ChoiceViolation { subset, value });
            }
        }
        Ok(Self { universe, table })
    }

    /// Tabulates `f` over every subset of the universe.
    pub fn from_fn(
        universe: Universe,
        f: impl FnMut(SubsetId) -> SubsetId,
    ) -> Result<Self, ChoiceError> {
        let table = universe.subsets().map(f).collect();
        Self::new(universe, table)
    }

    /// For tables whose invariants hold by construction.
    pub(crate) fn new_unchecked(universe: Universe, table: Vec<SubsetId>) -> Self {
        debug_assert_eq!(table.len(), universe.subset_count());
        debug_assert!(table
            .iter()
            .enumerate()
            .all(|(bits, v)| v.is_subset_of(SubsetId::new(bits as u32))));
        Self { universe, table }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// `f(a)`.
    pub fn value(&self, a: SubsetId) -> SubsetId {
        self.table[a.index()]
    }

    /// The full table, indexed by subset bitmask.
    pub fn table(&self) -> &[SubsetId] {
        &self.table
    }

    /// Decides the Outcast condition. On failure returns the violation
    /// smallest by `(canonical_key(a), canonical_key(b))`.
    ///
    /// For each `a` only the interval `f(a) ⊆ b ⊆ a` is scanned, so the total
    /// cost is `Σ_a 2^(|a| - |f(a)|) ≤ 3^n`.
    pub fn check_outcast(&self) -> Result<(), OutcastWitness> {
        let mut best: Option<OutcastWitness> = None;
        for a in self.universe.subsets() {
            let chosen = self.value(a);
            for extra in a.difference(chosen).subsets() {
                let b = chosen.union(extra);
                if self.value(b) != chosen {
                    let witness = OutcastWitness { a, b };
                    if best.is_none_or(|w| witness.canonical_key() < w.canonical_key()) {
                        best = Some(witness);
                    }
                }
            }
        }
        match best {
            None => Ok(()),
            Some(witness) => Err(witness),
        }
    }

    /// All `A` with `f(A) = A`, sorted by canonical key.
    pub fn fixpoints(&self) -> Vec<SubsetId> {
        let mut fps: Vec<SubsetId> = self
            .universe
            .subsets()
            .filter(|&a| self.value(a) == a)
            .collect();
        fps.sort_unstable_by_key(|s| s.canonical_key());
        fps
    }

    /// Whether `f(f(A)) = f(A)` for every `A`. Every Outcast function is
    /// idempotent; the converse fails.
    pub fn is_idempotent(&self) -> bool {
        self.universe.subsets().all(|a| {
            let v = self.value(a);
            self.value(v) == v
        })
    }

    /// Partitions the powerset into the fibers of `f`, keyed by fixpoint.
    ///
    /// Defined only for Outcast functions, where every value `f(B)` is itself
    /// a fixpoint and each fiber contains exactly one fixpoint, its key.
    pub fn domains(&self) -> Result<DomainPartition, NotOutcast> {
        self.check_outcast().map_err(NotOutcast)?;
        let mut members: BTreeMap<SubsetId, Vec<SubsetId>> = BTreeMap::new();
        for a in self.universe.subsets() {
            members.entry(self.value(a)).or_default().push(a);
        }
        Ok(DomainPartition {
            fixpoints: self.fixpoints(),
            members,
        })
    }
}

/// The fibers `{B | f(B) = F}` of an Outcast function, keyed by their unique
/// fixpoint `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainPartition {
    fixpoints: Vec<SubsetId>,
    members: BTreeMap<SubsetId, Vec<SubsetId>>,
}

impl DomainPartition {
    /// The fixpoint set, sorted by canonical key.
    pub fn fixpoints(&self) -> &[SubsetId] {
        &self.fixpoints
    }

    /// The fiber of a fixpoint, in ascending bitmask order.
    pub fn members(&self, fixpoint: SubsetId) -> Option<&[SubsetId]> {
        self.members.get(&fixpoint).map(Vec::as_slice)
    }

    /// `(fixpoint, fiber)` pairs in fixpoint order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetId, &[SubsetId])> {
        self.fixpoints
            .iter()
            .map(|fp| (*fp, self.members[fp].as_slice()))
    }
}
