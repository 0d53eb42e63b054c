//! Finite universe representation and subset algebra.
//!
//! Elements of the universe are identified with bit positions: element `i`
//! of [`Universe::names`] is bit `i` of every [`SubsetId`]. All other modules
//! build on the bitmask operations defined here.

use std::fmt;

use thiserror::Error;

/// Largest supported universe.
///
/// Evaluating an induced choice function touches every pair `B ⊆ A`, which is
/// `3^n` table probes in total; this bound keeps the worst case under ~4.3e7.
pub const MAX_UNIVERSE: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniverseError {
    #[error("universe has {0} elements, the maximum is {MAX_UNIVERSE}")]
    TooManyElements(usize),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
}

/// A finite base set with named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    /// Builds a universe from element names. Names must be pairwise distinct
    /// and there may be at most [`MAX_UNIVERSE`] of them.
    pub fn new(names: Vec<String>) -> Result<Self, UniverseError> {
        if names.len() > MAX_UNIVERSE {
            return Err(UniverseError::TooManyElements(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(UniverseError::DuplicateName(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// The universe `{a, b, c, ...}` with `n` single-letter names.
    pub fn alphabetic(n: usize) -> Result<Self, UniverseError> {
        if n > MAX_UNIVERSE {
            return Err(UniverseError::TooManyElements(n));
        }
        let names = (0..n)
            .map(|i| char::from(b'a' + i as u8).to_string())
            .collect();
        Self::new(names)
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.names.len()
    }

    /// The full set `X`.
    pub fn full_set(&self) -> SubsetId {
        SubsetId::new(self.subset_count() as u32 - 1)
    }

    /// Whether `s` denotes a subset of this universe.
    pub fn contains(&self, s: SubsetId) -> bool {
        (s.bits() as usize) < self.subset_count()
    }

    /// All subsets of `X` in ascending bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetId> {
        (0..self.subset_count() as u32).map(SubsetId::new)
    }

    /// Renders a subset as a brace-delimited, sorted list of element names,
    /// e.g. `{a, c}`; the empty set prints as `{}`.
    pub fn format_subset(&self, s: SubsetId) -> String {
        let mut members: Vec<&str> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| s.contains_element(*i))
            .map(|(_, name)| name.as_str())
            .collect();
        members.sort_unstable();
        format!("{{{}}}", members.join(", "))
    }
}

/// A subset of the universe, encoded as a bitmask.
///
/// The numeric [`Ord`] on subset ids is the plain bitmask order; use
/// [`SubsetId::canonical_key`] for the cardinality-major order that refines
/// inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetId(u32);

impl SubsetId {
    pub const EMPTY: SubsetId = SubsetId(0);

    pub fn new(bits: u32) -> Self {
        SubsetId(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The bitmask as a table index.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains_element(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(self, other: SubsetId) -> bool {
        self.0 & other.0 == self.0
    }

    /// Elements of `self` not in `other`.
    pub fn difference(self, other: SubsetId) -> SubsetId {
        SubsetId(self.0 & !other.0)
    }

    pub fn union(self, other: SubsetId) -> SubsetId {
        SubsetId(self.0 | other.0)
    }

    /// The sort key `(|A|, bits)`. Comparing keys lexicographically gives a
    /// total order that refines strict inclusion: `B ⊂ A` forces `|B| < |A|`.
    pub fn canonical_key(self) -> (u32, u32) {
        (self.cardinality(), self.0)
    }

    /// All `2^|A|` subsets of `self`, each exactly once, in ascending bitmask
    /// order (carry-rippler enumeration).
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Display for SubsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Iterator over the subsets of a fixed bitmask, ascending.
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = SubsetId;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = if following == 0 {
            None
        } else {
            Some(following)
        };
        Some(SubsetId(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(s: SubsetId) -> Vec<u32> {
        s.subsets().map(SubsetId::bits).collect()
    }

    #[test]
    fn subsets_of_empty_set() {
        assert_eq!(masks(SubsetId::EMPTY), vec![0]);
    }

    #[test]
    fn subsets_of_singleton() {
        assert_eq!(masks(SubsetId::new(0b1)), vec![0, 1]);
    }

    #[test]
    fn subsets_of_pair() {
        assert_eq!(masks(SubsetId::new(0b11)), vec![0, 1, 2, 3]);
    }

    #[test]
    fn subsets_of_sparse_mask() {
        assert_eq!(masks(SubsetId::new(0b101)), vec![0, 1, 4, 5]);
    }

    #[test]
    fn subsets_are_ascending_and_complete() {
        for bits in 0u32..256 {
            let a = SubsetId::new(bits);
            let subs = masks(a);
            assert_eq!(subs.len(), 1 << a.cardinality(), "count for {bits:#b}");
            assert!(subs.windows(2).all(|w| w[0] < w[1]), "order for {bits:#b}");
            for &sub in &subs {
                assert!(SubsetId::new(sub).is_subset_of(a));
            }
        }
    }

    #[test]
    fn is_subset_matches_enumeration() {
        for a_bits in 0u32..64 {
            let a = SubsetId::new(a_bits);
            let listed: Vec<u32> = masks(a);
            for b_bits in 0u32..64 {
                let b = SubsetId::new(b_bits);
                assert_eq!(b.is_subset_of(a), listed.contains(&b_bits));
            }
        }
    }

    #[test]
    fn is_subset_basics() {
        assert!(SubsetId::EMPTY.is_subset_of(SubsetId::EMPTY));
        assert!(SubsetId::new(0b01).is_subset_of(SubsetId::new(0b11)));
        assert!(!SubsetId::new(0b10).is_subset_of(SubsetId::new(0b01)));
    }

    #[test]
    fn canonical_keys() {
        assert_eq!(SubsetId::EMPTY.canonical_key(), (0, 0));
        assert_eq!(SubsetId::new(0b10).canonical_key(), (1, 2));
        assert_eq!(SubsetId::new(0b11).canonical_key(), (2, 3));
    }

    #[test]
    fn canonical_key_refines_strict_inclusion() {
        for a_bits in 0u32..256 {
            let a = SubsetId::new(a_bits);
            for b in a.subsets() {
                if b != a {
                    assert!(b.canonical_key() < a.canonical_key());
                }
            }
        }
    }

    #[test]
    fn universe_rejects_duplicates_and_oversize() {
        let err = Universe::new(vec!["x".into(), "x".into()]).unwrap_err();
        assert_eq!(err, UniverseError::DuplicateName("x".into()));
        assert_eq!(
            Universe::alphabetic(17).unwrap_err(),
            UniverseError::TooManyElements(17)
        );
        assert!(Universe::alphabetic(16).is_ok());
    }

    #[test]
    fn empty_universe_is_valid() {
        let u = Universe::alphabetic(0).unwrap();
        assert_eq!(u.subset_count(), 1);
        assert_eq!(u.full_set(), SubsetId::EMPTY);
    }

    #[test]
    fn format_subset_sorts_names() {
        let u = Universe::new(vec!["b".into(), "a".into()]).unwrap();
        assert_eq!(u.format_subset(SubsetId::new(0b11)), "{a, b}");
        assert_eq!(u.format_subset(SubsetId::EMPTY), "{}");
        let u = Universe::alphabetic(3).unwrap();
        assert_eq!(u.format_subset(SubsetId::new(0b101)), "{a, c}");
    }
}
