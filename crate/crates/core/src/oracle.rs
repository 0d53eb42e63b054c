//! Exhaustive brute-force verification at tiny universe sizes.
//!
//! Everything here is deliberately slow and literal: it enumerates whole
//! search spaces and re-checks definitions pair by pair, providing the ground
//! truth the faster implementations are measured against.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::choice::ChoiceFunction;
use crate::order::HyperOrder;
use crate::subset::{SubsetId, Universe, MAX_UNIVERSE};

/// Hard cap for the exhaustive operations. Already at `n = 4` there are
/// ~4.3e9 choice functions and `16!` orders; fail loudly instead of running
/// forever.
pub const MAX_EXHAUSTIVE: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("universe of {n} elements exceeds the limit of {max} for this operation")]
pub struct UniverseTooLarge {
    pub n: usize,
    pub max: usize,
}

/// Exhaustive counts comparing the Outcast functions against the functions
/// induced by hyper-orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub total_choice_functions: u64,
    pub outcast_count: u64,
    pub total_orders: u64,
    /// Distinct induced choice functions over all `(2^n)!` orders.
    pub induced_distinct: u64,
    /// Whether the induced functions and the Outcast functions coincide as
    /// sets.
    pub directions_hold: bool,
}

/// Streams every choice function on the `n`-element alphabetic universe
/// exactly once.
///
/// The stream is a mixed-radix odometer with one digit per subset, subsets
/// ascending by bitmask, each digit running over the subsets of its argument
/// ascending by bitmask; the lowest subset advances fastest.
pub fn enumerate_choice_functions(n: usize) -> Result<ChoiceFunctions, UniverseTooLarge> {
    if n > MAX_EXHAUSTIVE {
        return Err(UniverseTooLarge {
            n,
            max: MAX_EXHAUSTIVE,
        });
    }
    let universe = Universe::alphabetic(n).expect("within the universe cap");
    let options: Vec<Vec<SubsetId>> = universe.subsets().map(|a| a.subsets().collect()).collect();
    let digits = vec![0; options.len()];
    Ok(ChoiceFunctions {
        universe,
        options,
        digits,
        done: false,
    })
}

pub struct ChoiceFunctions {
    universe: Universe,
    options: Vec<Vec<SubsetId>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for ChoiceFunctions {
    type Item = ChoiceFunction;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let table: Vec<SubsetId> = self
            .digits
            .iter()
            .zip(&self.options)
            .map(|(&digit, options)| options[digit])
            .collect();
        self.done = true;
        for (digit, options) in self.digits.iter_mut().zip(&self.options) {
            *digit += 1;
            if *digit < options.len() {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(ChoiceFunction::new_unchecked(self.universe.clone(), table))
    }
}

/// Streams every hyper-order on the `n`-element alphabetic universe exactly
/// once, rank tables in lexicographic order.
pub fn enumerate_orders(n: usize) -> Result<impl Iterator<Item = HyperOrder>, UniverseTooLarge> {
    if n > MAX_EXHAUSTIVE {
        return Err(UniverseTooLarge {
            n,
            max: MAX_EXHAUSTIVE,
        });
    }
    let universe = Universe::alphabetic(n).expect("within the universe cap");
    let count = universe.subset_count() as u32;
    Ok((0..count)
        .permutations(count as usize)
        .map(move |ranks| HyperOrder::from_permutation_unchecked(universe.clone(), ranks)))
}

/// A uniformly random hyper-order from a deterministic seeded generator:
/// the same `(n, seed)` always yields the same order.
pub fn random_order(n: usize, seed: u64) -> Result<HyperOrder, UniverseTooLarge> {
    if n > MAX_UNIVERSE {
        return Err(UniverseTooLarge {
            n,
            max: MAX_UNIVERSE,
        });
    }
    let universe = Universe::alphabetic(n).expect("within the universe cap");
    let mut ranks: Vec<u32> = (0..universe.subset_count() as u32).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ranks.shuffle(&mut rng);
    Ok(HyperOrder::from_permutation_unchecked(universe, ranks))
}

/// Reference Outcast check: counts violations over every ordered pair of
/// subsets, with no early exit and no interval enumeration.
///
/// Kept structurally independent of [`ChoiceFunction::check_outcast`] so the
/// two can be tested against each other; the verdict is `count == 0`.
pub fn outcast_violations(f: &ChoiceFunction) -> u64 {
    let count = f.universe().subset_count() as u32;
    let mut violations = 0;
    for a_bits in 0..count {
        for b_bits in 0..count {
            let a = SubsetId::new(a_bits);
            let b = SubsetId::new(b_bits);
            let chosen = f.value(a);
            if chosen.is_subset_of(b) && b.is_subset_of(a) && f.value(b) != chosen {
                violations += 1;
            }
        }
    }
    violations
}

/// Runs the full exhaustive comparison at size `n`: every choice function is
/// classified, every order is evaluated, and the two resulting function sets
/// are compared.
///
/// Aggregation is purely set- and count-based, so the report does not depend
/// on enumeration order.
pub fn theorem_census(n: usize) -> Result<CensusReport, UniverseTooLarge> {
    let mut total_choice_functions = 0u64;
    let mut outcast_tables: BTreeSet<Vec<u32>> = BTreeSet::new();
    for f in enumerate_choice_functions(n)? {
        total_choice_functions += 1;
        if f.check_outcast().is_ok() {
            outcast_tables.insert(table_masks(&f));
        }
    }

    let mut total_orders = 0u64;
    let mut induced_tables: BTreeSet<Vec<u32>> = BTreeSet::new();
    for order in enumerate_orders(n)? {
        total_orders += 1;
        induced_tables.insert(table_masks(&order.induced_choice()));
    }

    Ok(CensusReport {
        n,
        total_choice_functions,
        outcast_count: outcast_tables.len() as u64,
        total_orders,
        induced_distinct: induced_tables.len() as u64,
        directions_hold: outcast_tables == induced_tables,
    })
}

fn table_masks(f: &ChoiceFunction) -> Vec<u32> {
    f.table().iter().map(|s| s.bits()).collect()
}
