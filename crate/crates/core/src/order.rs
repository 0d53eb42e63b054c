//! Total orders on the powerset (hyper-orders) and the choice functions they
//! induce.
//!
//! A hyper-order is stored as a rank permutation: `ranks[A]` is the position
//! of subset `A`, with 0 the least and `2^n - 1` the greatest. On a finite
//! powerset every total order is a well-order, so any rank permutation
//! induces a choice function by picking the greatest subset.

use thiserror::Error;

use crate::choice::ChoiceFunction;
use crate::subset::{SubsetId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("rank table has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ranks are not a permutation: rank {value} at index {index} is out of range")]
    RankOutOfRange { index: usize, value: u32 },
    #[error("ranks are not a permutation: rank {value} at index {index} is a duplicate")]
    DuplicateRank { index: usize, value: u32 },
}

/// A total order on the powerset of a universe, as a rank bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperOrder {
    universe: Universe,
    ranks: Vec<u32>,
}

impl HyperOrder {
    /// Validates a raw rank table: it must be a permutation of `[0, 2^n)`.
    pub fn new(universe: Universe, ranks: Vec<u32>) -> Result<Self, OrderError> {
        let expected = universe.subset_count();
        if ranks.len() != expected {
            return Err(OrderError::LengthMismatch {
                expected,
                found: ranks.len(),
            });
        }
        let mut seen = vec![false; expected];
        for (index, &value) in ranks.iter().enumerate() {
            let Some(slot) = seen.get_mut(value as usize) else {
                return Err(OrderError::RankOutOfRange { index, value });
            };
            if *slot {
                return Err(OrderError::DuplicateRank { index, value });
            }
            *slot = true;
        }
        Ok(Self { universe, ranks })
    }

    /// For rank tables that are permutations by construction.
    pub(crate) fn from_permutation_unchecked(universe: Universe, ranks: Vec<u32>) -> Self {
        debug_assert_eq!(ranks.len(), universe.subset_count());
        debug_assert!({
            let mut sorted = ranks.clone();
            sorted.sort_unstable();
            sorted.iter().enumerate().all(|(i, &r)| r as usize == i)
        });
        Self { universe, ranks }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The position of `a` in the order.
    pub fn rank(&self, a: SubsetId) -> u32 {
        self.ranks[a.index()]
    }

    /// The full rank table, indexed by subset bitmask.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// The greatest subset of `a` under this order. Scans the `2^|a|`
    /// candidates directly; no precomputation.
    pub fn choose_max(&self, a: SubsetId) -> SubsetId {
        a.subsets()
            .max_by_key(|s| self.rank(*s))
            .expect("every subset contains at least the empty set")
    }

    /// The induced choice function: every subset maps to its greatest subset.
    /// Always a valid choice function, and always Outcast.
    pub fn induced_choice(&self) -> ChoiceFunction {
        let table = self
            .universe
            .subsets()
            .map(|a| self.choose_max(a))
            .collect();
        ChoiceFunction::new_unchecked(self.universe.clone(), table)
    }
}
