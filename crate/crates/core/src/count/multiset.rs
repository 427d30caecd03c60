use std::fmt;

/// A finite set of distinct positive multiplicities, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiplicitySet(Vec<u64>);

impl MultiplicitySet {
    /// `None` if any value is zero or repeated.
    pub fn new(values: impl IntoIterator<Item = u64>) -> Option<Self> {
        let mut v: Vec<u64> = values.into_iter().collect();
        v.sort_unstable();
        if v.first() == Some(&0) || v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(MultiplicitySet(v))
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<u64>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]) && v.first() != Some(&0));
        MultiplicitySet(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, m: u64) -> bool {
        self.0.binary_search(&m).is_ok()
    }

    /// Smallest weight any partition using exactly these multiplicities can
    /// have: the largest multiplicity goes on part 1, the next on part 2, ...
    pub fn min_weight(&self) -> u128 {
        self.0
            .iter()
            .rev()
            .zip(1u128..)
            .map(|(&m, i)| m as u128 * i)
            .sum()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for MultiplicitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_repeats_and_zero() {
        assert!(MultiplicitySet::new([2, 1, 2]).is_none());
        assert!(MultiplicitySet::new([0, 3]).is_none());
        assert_eq!(MultiplicitySet::new([3, 1]).unwrap().as_slice(), &[1, 3]);
    }

    #[test]
    fn min_weight_pairs_descending_with_small_parts() {
        // {1,2,3}: 3*1 + 2*2 + 1*3
        assert_eq!(MultiplicitySet::new([1, 2, 3]).unwrap().min_weight(), 10);
        assert_eq!(MultiplicitySet::new([1, 4]).unwrap().min_weight(), 6);
        assert_eq!(MultiplicitySet::new([7]).unwrap().min_weight(), 7);
    }
}
