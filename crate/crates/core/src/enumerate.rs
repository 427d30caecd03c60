//! Brute-force oracle: stream every partition of n and keep the Wilf ones.

use crate::count::CountError;
use crate::partition::{Term, WilfPartition};
use crate::BigCount;

/// Default ceiling on how many plain partitions a brute-force count may visit.
pub const DEFAULT_YIELD_CAP: u64 = 10_000_000;

/// Partitions of `n` as nonincreasing lists, in reverse lexicographic order
/// (`[n]` first, `[1; n]` last).
///
/// Each successor is produced in constant amortized time: the last part
/// larger than one is decremented and the freed units are refilled greedily.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    parts: Vec<u64>,
    // index of the last part > 1, if any
    last_big: Option<usize>,
    started: bool,
}

impl PartitionStream {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "partitions are only streamed for n >= 1");
        PartitionStream {
            parts: vec![n],
            last_big: if n > 1 { Some(0) } else { None },
            started: false,
        }
    }

    /// Advances in place and returns the current partition. Avoids the
    /// per-item allocation of the `Iterator` impl.
    pub fn advance(&mut self) -> Option<&[u64]> {
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let q = self.last_big?;
        let ones = (self.parts.len() - 1 - q) as u64;
        self.parts[q] -= 1;
        let x = self.parts[q];
        self.parts.truncate(q + 1);
        let mut rem = ones + 1;
        while rem > x {
            self.parts.push(x);
            rem -= x;
        }
        self.parts.push(rem);

        let last = self.parts.len() - 1;
        self.last_big = if rem > 1 {
            Some(last)
        } else if x > 1 {
            // the final push was a 1; the block of x's before it is > 1
            Some(last - 1)
        } else {
            // everything from q on is 1 and every earlier part is >= 2
            q.checked_sub(1)
        };
        Some(&self.parts)
    }
}

impl Iterator for PartitionStream {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance().map(<[u64]>::to_vec)
    }
}

pub fn partitions(n: u64) -> PartitionStream {
    PartitionStream::new(n)
}

/// Run-length groups a nonincreasing list; `None` unless multiplicities are
/// pairwise distinct.
pub fn wilf_from_descending(parts: &[u64]) -> Option<WilfPartition> {
    let mut terms: Vec<Term> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == p {
            j += 1;
        }
        terms.push(Term::new(p, (j - i) as u64));
        i = j;
    }
    let mut mults: Vec<u64> = terms.iter().map(|t| t.multiplicity).collect();
    mults.sort_unstable();
    if mults.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    terms.reverse();
    let weight = parts.iter().sum();
    Some(WilfPartition::from_sorted_unchecked(weight, terms))
}

/// Every member of T(n), each exactly once.
pub fn wilf_partitions(n: u64) -> impl Iterator<Item = WilfPartition> {
    let mut stream = PartitionStream::new(n);
    std::iter::from_fn(move || loop {
        let parts = stream.advance()?;
        if let Some(w) = wilf_from_descending(parts) {
            return Some(w);
        }
    })
}

/// Fixed points of the parts/multiplicities swap on T(n).
pub fn fixed_points(n: u64) -> impl Iterator<Item = WilfPartition> {
    wilf_partitions(n).filter(WilfPartition::is_fixed_point)
}

/// `|T(n)|` by exhaustion. Fails with `CapExceeded` rather than running past
/// `cap` visited partitions.
pub fn count_brute(n: u64, cap: u64) -> Result<BigCount, CountError> {
    if n == 0 {
        return Ok(BigCount::from(1u32));
    }
    let mut stream = PartitionStream::new(n);
    let mut visited = 0u64;
    let mut found = 0u64;
    while let Some(parts) = stream.advance() {
        visited += 1;
        if visited > cap {
            return Err(CountError::CapExceeded { n, cap });
        }
        if wilf_from_descending(parts).is_some() {
            found += 1;
        }
    }
    Ok(BigCount::from(found))
}
