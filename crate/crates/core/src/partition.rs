//! Wilf partitions: partitions whose nonzero part multiplicities are pairwise
//! distinct.
//!
//! A partition is stored as a list of `(part, multiplicity)` terms sorted by
//! part. Both coordinates are pairwise distinct, which is what makes the
//! parts/multiplicities swap ([`WilfPartition::involution`]) well defined.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Reasons a list of terms is not a Wilf partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a partition needs at least one term")]
    Empty,
    #[error("parts and multiplicities must be positive")]
    NonPositiveEntry,
    #[error("part {0} appears in more than one term")]
    DuplicatePart(u64),
    #[error("multiplicity {0} is shared by more than one part")]
    DuplicateMultiplicity(u64),
    #[error("terms sum to {actual}, expected {expected}")]
    WeightMismatch { expected: u64, actual: u128 },
}

/// One `(part, multiplicity)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub part: u64,
    pub multiplicity: u64,
}

impl Term {
    pub fn new(part: u64, multiplicity: u64) -> Self {
        Term { part, multiplicity }
    }

    pub fn product(&self) -> u128 {
        self.part as u128 * self.multiplicity as u128
    }
}

/// A member of T(n). Immutable once built; terms are part-ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WilfPartition {
    weight: u64,
    terms: Vec<Term>,
}

impl WilfPartition {
    /// Checks every invariant and returns the part-ascending normal form.
    pub fn validate(terms: &[(u64, u64)], n: u64) -> Result<Self, PartitionError> {
        if terms.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut sorted: Vec<Term> = terms.iter().map(|&(p, m)| Term::new(p, m)).collect();
        if sorted.iter().any(|t| t.part == 0 || t.multiplicity == 0) {
            return Err(PartitionError::NonPositiveEntry);
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0].part == w[1].part) {
            return Err(PartitionError::DuplicatePart(w[0].part));
        }
        let mut mults: Vec<u64> = sorted.iter().map(|t| t.multiplicity).collect();
        mults.sort_unstable();
        if let Some(w) = mults.windows(2).find(|w| w[0] == w[1]) {
            return Err(PartitionError::DuplicateMultiplicity(w[0]));
        }
        let actual: u128 = sorted.iter().map(Term::product).sum();
        if actual != n as u128 {
            return Err(PartitionError::WeightMismatch { expected: n, actual });
        }
        Ok(WilfPartition {
            weight: n,
            terms: sorted,
        })
    }

    /// Groups a plain list of parts (any order, usually descending) into terms.
    pub fn from_plain_partition(parts: &[u64]) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        let mut weight: u64 = 0;
        for &p in parts {
            if p == 0 {
                return Err(PartitionError::NonPositiveEntry);
            }
            *counts.entry(p).or_default() += 1;
            weight += p;
        }
        let terms: Vec<(u64, u64)> = counts.into_iter().collect();
        Self::validate(&terms, weight)
    }

    /// Builds directly from terms already known to be valid. Only for
    /// internal generators that construct members of T(n) by design.
    pub(crate) fn from_sorted_unchecked(weight: u64, terms: Vec<Term>) -> Self {
        debug_assert!(Self::validate(
            &terms
                .iter()
                .map(|t| (t.part, t.multiplicity))
                .collect::<Vec<_>>(),
            weight
        )
        .is_ok());
        WilfPartition { weight, terms }
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of distinct parts, which equals the number of distinct
    /// multiplicities.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.iter().map(|t| t.part)
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.iter().map(|t| t.multiplicity)
    }

    /// Expands back to the plain partition, largest part first.
    pub fn to_plain(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for t in self.terms.iter().rev() {
            out.extend(std::iter::repeat_n(t.part, t.multiplicity as usize));
        }
        out
    }

    /// Orders the terms by decreasing product `multiplicity * part`, ties by
    /// decreasing multiplicity.
    pub fn canonicalize(&self) -> CanonicalForm {
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| {
            b.product()
                .cmp(&a.product())
                .then(b.multiplicity.cmp(&a.multiplicity))
        });
        CanonicalForm {
            weight: self.weight,
            terms,
        }
    }

    /// Swaps the roles of parts and multiplicities. Weight is unchanged and
    /// the result is again a Wilf partition since both coordinates are
    /// distinct.
    pub fn involution(&self) -> WilfPartition {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term::new(t.multiplicity, t.part))
            .collect();
        terms.sort_unstable();
        WilfPartition {
            weight: self.weight,
            terms,
        }
    }

    pub fn is_fixed_point(&self) -> bool {
        // Sorted by part, the image equals self iff the multiplicity of the
        // k-th smallest part is itself a part carrying that part as multiplicity.
        self.terms.iter().all(|t| {
            self.terms
                .binary_search_by_key(&t.multiplicity, |u| u.part)
                .map(|i| self.terms[i].multiplicity == t.part)
                .unwrap_or(false)
        })
    }

    /// `true` when every term has multiplicity equal to its part.
    pub fn is_diagonal(&self) -> bool {
        self.terms.iter().all(|t| t.part == t.multiplicity)
    }
}

impl fmt::Display for WilfPartition {
    /// `n = m1×p1 + m2×p2 + ...` in part-ascending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.weight)?;
        for (i, t) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            write!(f, "{}{}×{}", sep, t.multiplicity, t.part)?;
        }
        Ok(())
    }
}

/// The product-ordered presentation of a [`WilfPartition`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    weight: u64,
    terms: Vec<Term>,
}

impl CanonicalForm {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn products(&self) -> Vec<u128> {
        self.terms.iter().map(Term::product).collect()
    }

    /// Sorting back by part recovers the source partition exactly.
    pub fn to_partition(&self) -> WilfPartition {
        let mut terms = self.terms.clone();
        terms.sort_unstable();
        WilfPartition {
            weight: self.weight,
            terms,
        }
    }
}

/// Wire shape: `{"n": 27, "terms": [[1, 7], [2, 3], [3, 2], [8, 1]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PartitionJson {
    n: u64,
    terms: Vec<(u64, u64)>,
}

impl Serialize for WilfPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PartitionJson {
            n: self.weight,
            terms: self.terms.iter().map(|t| (t.part, t.multiplicity)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WilfPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PartitionJson::deserialize(deserializer)?;
        WilfPartition::validate(&raw.terms, raw.n).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(terms: &[(u64, u64)]) -> WilfPartition {
        let n = terms.iter().map(|&(p, m)| p * m).sum();
        WilfPartition::validate(terms, n).unwrap()
    }

    #[test]
    fn validates_the_weight_83_example() {
        let w = WilfPartition::validate(&[(1, 7), (4, 4), (5, 12)], 83).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.weight(), 83);
    }

    #[test]
    fn single_part_is_always_valid() {
        for n in 1..50 {
            let w = WilfPartition::validate(&[(n, 1)], n).unwrap();
            assert_eq!(w.terms(), &[Term::new(n, 1)]);
        }
    }

    #[test]
    fn rejects_each_violated_invariant() {
        assert_eq!(
            WilfPartition::validate(&[(1, 1), (2, 1)], 3),
            Err(PartitionError::DuplicateMultiplicity(1))
        );
        assert_eq!(
            WilfPartition::validate(&[(2, 1), (2, 3)], 8),
            Err(PartitionError::DuplicatePart(2))
        );
        assert_eq!(
            WilfPartition::validate(&[(2, 0)], 0),
            Err(PartitionError::NonPositiveEntry)
        );
        assert_eq!(
            WilfPartition::validate(&[(3, 2)], 7),
            Err(PartitionError::WeightMismatch {
                expected: 7,
                actual: 6
            })
        );
        assert_eq!(WilfPartition::validate(&[], 1), Err(PartitionError::Empty));
    }

    #[test]
    fn normalizes_term_order() {
        let a = WilfPartition::validate(&[(5, 12), (1, 7), (4, 4)], 83).unwrap();
        let b = WilfPartition::validate(&[(1, 7), (4, 4), (5, 12)], 83).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn groups_plain_partitions() {
        let w = WilfPartition::from_plain_partition(&[8, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1])
            .unwrap();
        assert_eq!(w.weight(), 27);
        assert_eq!(
            w.terms(),
            &[
                Term::new(1, 7),
                Term::new(2, 3),
                Term::new(3, 2),
                Term::new(8, 1)
            ]
        );
        let w = WilfPartition::from_plain_partition(&[5]).unwrap();
        assert_eq!((w.weight(), w.terms()), (5, &[Term::new(5, 1)][..]));
        assert_eq!(
            WilfPartition::from_plain_partition(&[3, 1]),
            Err(PartitionError::DuplicateMultiplicity(1))
        );
        assert_eq!(
            w.to_plain(),
            vec![5],
            "expansion of a single part"
        );
    }

    #[test]
    fn canonical_form_orders_by_product_then_multiplicity() {
        let w = WilfPartition::from_plain_partition(&[8, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1])
            .unwrap();
        let c = w.canonicalize();
        let as_mp: Vec<(u64, u64)> = c.terms().iter().map(|t| (t.multiplicity, t.part)).collect();
        assert_eq!(as_mp, vec![(1, 8), (7, 1), (3, 2), (2, 3)]);
        assert_eq!(c.products(), vec![8, 7, 6, 6]);
        assert_eq!(c.to_partition(), w);

        let single = wp(&[(9, 1)]).canonicalize();
        assert_eq!(single.terms(), &[Term::new(9, 1)]);

        // parts 1,2,3 carrying 3,2,1: products 3,4,3
        let stair = wp(&[(1, 3), (2, 2), (3, 1)]).canonicalize();
        let as_mp: Vec<(u64, u64)> = stair
            .terms()
            .iter()
            .map(|t| (t.multiplicity, t.part))
            .collect();
        assert_eq!(as_mp, vec![(2, 2), (3, 1), (1, 3)]);
    }

    #[test]
    fn involution_examples() {
        // ((m),(p)) = ((7,4,12),(1,4,5)) <-> ((4,1,5),(4,7,12))
        let a = wp(&[(1, 7), (4, 4), (5, 12)]);
        let b = wp(&[(4, 4), (7, 1), (12, 5)]);
        assert_eq!(a.involution(), b);
        assert_eq!(b.involution(), a);
        assert!(!a.is_fixed_point());

        let five = wp(&[(5, 1)]);
        assert_eq!(five.involution(), wp(&[(1, 5)]));
        assert_eq!(five.involution().to_plain(), vec![1, 1, 1, 1, 1]);

        let ten = wp(&[(1, 3), (2, 2), (3, 1)]);
        assert_eq!(ten.involution(), ten);
        assert!(ten.is_fixed_point());
        assert!(!ten.is_diagonal());

        let diag = wp(&[(2, 2), (5, 5), (6, 6)]);
        assert_eq!(diag.weight(), 65);
        assert!(diag.is_fixed_point());
        assert!(diag.is_diagonal());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let w = wp(&[(1, 7), (4, 4), (5, 12)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"n":83,"terms":[[1,7],[4,4],[5,12]]}"#);
        let back: WilfPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<WilfPartition>(r#"{"n":3,"terms":[[1,1],[2,1]]}"#).is_err());
    }

    #[test]
    fn display_lists_terms() {
        assert_eq!(wp(&[(1, 3), (2, 2), (3, 1)]).to_string(), "10 = 3×1 + 2×2 + 1×3");
    }
}
