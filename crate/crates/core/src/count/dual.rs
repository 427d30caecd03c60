//! The `dual` engine: sum over multiplicity sets.
//!
//! For a set D of distinct multiplicities, the Wilf partitions using exactly
//! D correspond to injective maps `p: D -> Z+` with `sum m * p(m) = n`.
//! Dropping injectivity and correcting by inclusion–exclusion over set
//! partitions π of D gives
//!
//! ```text
//! N(D, n) = sum_π (-1)^(|D| - |π|) * prod_{B in π} (|B| - 1)! * L(π, n)
//! ```
//!
//! where `L(π, n)` counts positive solutions of `sum_B s_B * q_B = n` with
//! `s_B` the sum of block B. Then `f(n) = sum_D N(D, n)` over the sets D whose
//! minimal weight fits in n. Only practical for small n (Bell numbers), but
//! shares nothing with the other engines.

use std::collections::BTreeMap;

use super::{Algorithm, CountError, Limits, MultiplicitySet, WilfCounter};
use crate::bounds::r_max;
use crate::BigCount;

/// Every nonempty multiplicity set whose minimal weight is at most `n`.
pub fn feasible_sets(n: u64) -> Vec<MultiplicitySet> {
    fn extend(n: u64, below: u64, part: u64, weight: u64, chosen: &mut Vec<u64>, out: &mut Vec<MultiplicitySet>) {
        // chosen is descending; the next (smaller) multiplicity sits on `part`
        for m in (1..below).rev() {
            let w = weight + m * part;
            if w > n {
                continue;
            }
            chosen.push(m);
            let mut asc = chosen.clone();
            asc.reverse();
            out.push(MultiplicitySet::from_sorted_unchecked(asc));
            extend(n, m, part + 1, w, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n + 1, 1, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Conservative bound on every intermediate value of [`injective_table`]:
/// `Bell(k) * (k-1)! * C(n + k, k)`, in floating point.
fn magnitude_bound(k: usize, ceiling: usize) -> f64 {
    let mut bell = vec![1f64];
    for _ in 0..k {
        // Bell triangle row
        let mut row = vec![*bell.last().unwrap()];
        for x in &bell {
            let next = row.last().unwrap() + x;
            row.push(next);
        }
        bell = row;
    }
    let fact: f64 = (1..k.max(1)).map(|i| i as f64).product();
    let binom: f64 = (1..=k).map(|i| (ceiling + i) as f64 / i as f64).product();
    bell[0] * fact * binom
}

struct Expansion<'a> {
    d: &'a [u64],
    ceiling: usize,
    factorial: Vec<i128>,
    // tables[j] = prod over the first j blocks of x^s / (1 - x^s)
    tables: Vec<Vec<i128>>,
    acc: Vec<i128>,
}

impl Expansion<'_> {
    /// Extends the partial set partition in `tables[depth]` by every block
    /// that contains the smallest unassigned element.
    fn blocks(&mut self, unassigned: u32, depth: usize, coeff: i128) {
        if unassigned == 0 {
            let sign = if (self.d.len() - depth) % 2 == 1 { -coeff } else { coeff };
            let (acc, table) = (&mut self.acc, &self.tables[depth]);
            for (dst, &l) in acc.iter_mut().zip(table) {
                *dst += sign * l;
            }
            return;
        }
        let first = unassigned.trailing_zeros();
        let rest = unassigned & !(1 << first);
        // every subset of `rest` joins `first`
        let mut sub = rest;
        loop {
            let block = sub | (1 << first);
            let sum: usize = (0..self.d.len())
                .filter(|i| block >> i & 1 == 1)
                .map(|i| self.d[i] as usize)
                .sum();
            if sum <= self.ceiling {
                let size = block.count_ones() as usize;
                let (done, todo) = self.tables.split_at_mut(depth + 1);
                let (prev, next) = (&done[depth], &mut todo[0]);
                next[..sum].iter_mut().for_each(|x| *x = 0);
                for w in sum..=self.ceiling {
                    next[w] = next[w - sum] + prev[w - sum];
                }
                self.blocks(rest & !sub, depth + 1, coeff * self.factorial[size - 1]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
}

/// `N(D, w)` for every `w` in `0..=ceiling`.
fn injective_table(set: &MultiplicitySet, ceiling: usize) -> Result<Vec<i128>, CountError> {
    let d = set.as_slice();
    let k = d.len();
    if k > 31 || magnitude_bound(k, ceiling) > 1e36 {
        return Err(CountError::Unsupported(ceiling as u64));
    }
    let mut factorial = vec![1i128; k + 1];
    for i in 1..=k {
        factorial[i] = factorial[i - 1] * i as i128;
    }
    let mut tables = vec![vec![0i128; ceiling + 1]; k + 1];
    tables[0][0] = 1;
    let mut e = Expansion {
        d,
        ceiling,
        factorial,
        tables,
        acc: vec![0i128; ceiling + 1],
    };
    e.blocks((1u32 << k) - 1, 0, 1);
    Ok(e.acc)
}

fn to_count(x: i128) -> BigCount {
    BigCount::try_from(x).expect("inclusion–exclusion totals are never negative")
}

/// Number of injective `p: D -> Z+` with `sum_{m in D} m * p(m) = n`.
pub fn n_injective(set: &MultiplicitySet, n: u64) -> Result<BigCount, CountError> {
    if set.is_empty() {
        return Ok(BigCount::from(u8::from(n == 0)));
    }
    let table = injective_table(set, n as usize)?;
    Ok(to_count(table[n as usize]))
}

/// `by_r[n][r]` for all `n <= ceiling`, `r <= r_max(ceiling)`.
fn by_r_table(ceiling: u64) -> Result<Vec<Vec<BigCount>>, CountError> {
    let width = if ceiling == 0 { 1 } else { r_max(ceiling) as usize + 1 };
    let mut acc = vec![vec![0i128; width]; ceiling as usize + 1];
    for set in feasible_sets(ceiling) {
        let r = set.len();
        for (w, v) in injective_table(&set, ceiling as usize)?.into_iter().enumerate() {
            acc[w][r] += v;
        }
    }
    acc[0][0] = 1;
    Ok(acc
        .into_iter()
        .map(|row| row.into_iter().map(to_count).collect())
        .collect())
}

fn check_limit(n: u64, limits: &Limits) -> Result<(), CountError> {
    if n > limits.dual_max_n {
        return Err(CountError::DualLimit {
            n,
            limit: limits.dual_max_n,
        });
    }
    Ok(())
}

/// f(n) by the dual engine with default limits.
pub fn f_dual(n: u64) -> Result<BigCount, CountError> {
    DualCounter::new(Limits::default()).count(n)
}

/// f(n, r) for `1 <= r <= r_max(n)`.
pub fn f_by_r(n: u64) -> Result<BTreeMap<usize, BigCount>, CountError> {
    DualCounter::new(Limits::default()).by_r(n)
}

/// Counter for the `dual` engine; also the source of the per-r split.
#[derive(Debug, Clone)]
pub struct DualCounter {
    limits: Limits,
    table: Vec<Vec<BigCount>>,
}

impl DualCounter {
    pub fn new(limits: Limits) -> Self {
        DualCounter {
            limits,
            table: Vec::new(),
        }
    }

    fn ensure(&mut self, n: u64) -> Result<(), CountError> {
        check_limit(n, &self.limits)?;
        if n as usize >= self.table.len() {
            self.table = by_r_table(n)?;
        }
        Ok(())
    }

    pub fn by_r(&mut self, n: u64) -> Result<BTreeMap<usize, BigCount>, CountError> {
        self.ensure(n)?;
        let rmax = if n == 0 { 0 } else { r_max(n) as usize };
        let row = &self.table[n as usize];
        Ok((1..=rmax)
            .map(|r| (r, row.get(r).cloned().unwrap_or_default()))
            .collect())
    }
}

impl WilfCounter for DualCounter {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Dual
    }

    fn count(&mut self, n: u64) -> Result<BigCount, CountError> {
        self.ensure(n)?;
        Ok(self.table[n as usize].iter().sum())
    }

    fn count_upto(&mut self, upto: u64) -> Result<Vec<BigCount>, CountError> {
        self.ensure(upto)?;
        Ok(self.table[..=upto as usize]
            .iter()
            .map(|row| row.iter().sum())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> MultiplicitySet {
        MultiplicitySet::new(v.iter().copied()).unwrap()
    }

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    #[test]
    fn injective_examples() {
        assert_eq!(n_injective(&set(&[1, 2]), 6).unwrap(), big(1));
        assert_eq!(n_injective(&set(&[1, 5]), 6).unwrap(), big(0));
        for m in 1..8 {
            for n in 1..30 {
                let expect = u64::from(n % m == 0);
                assert_eq!(n_injective(&set(&[m]), n).unwrap(), big(expect));
            }
        }
    }

    #[test]
    fn injective_matches_exhaustive_search() {
        fn brute(d: &[u64], n: u64, used: &mut Vec<u64>) -> u64 {
            let Some((&m, rest)) = d.split_first() else {
                return u64::from(n == 0);
            };
            let mut total = 0;
            let mut p = 1;
            while m * p <= n {
                if !used.contains(&p) {
                    used.push(p);
                    total += brute(rest, n - m * p, used);
                    used.pop();
                }
                p += 1;
            }
            total
        }
        for d in [&[1u64, 2, 3][..], &[1, 4], &[2, 3, 5, 7], &[1, 2, 3, 4]] {
            let table = injective_table(&set(d), 60).unwrap();
            for (n, &got) in table.iter().enumerate() {
                assert_eq!(got, brute(d, n as u64, &mut Vec::new()) as i128, "D {d:?} n {n}");
            }
        }
    }

    /// The inclusion–exclusion sum evaluated literally, one set partition
    /// at a time.
    fn literal(d: &MultiplicitySet, ceiling: usize) -> Vec<i128> {
        let mut acc = vec![0i128; ceiling + 1];
        for blocks in crate::count::set_partitions(d) {
            let mut coeff: i128 = blocks.iter().map(|b| (1..b.len() as i128).product::<i128>()).product();
            if (d.len() - blocks.len()) % 2 == 1 {
                coeff = -coeff;
            }
            let mut l = vec![0i128; ceiling + 1];
            l[0] = 1;
            for b in &blocks {
                let s = b.iter().sum::<u64>() as usize;
                let mut next = vec![0i128; ceiling + 1];
                for w in s..=ceiling {
                    next[w] = next[w - s] + l[w - s];
                }
                l = next;
            }
            for (a, x) in acc.iter_mut().zip(&l) {
                *a += coeff * x;
            }
        }
        acc
    }

    #[test]
    fn blockwise_expansion_matches_the_literal_sum() {
        for d in [&[3u64][..], &[1, 2], &[1, 2, 3, 4, 5], &[2, 3, 5, 7, 11, 13], &[1, 2, 3, 4, 5, 6, 7]] {
            let d = set(d);
            assert_eq!(injective_table(&d, 80).unwrap(), literal(&d, 80), "D = {d}");
        }
    }

    #[test]
    fn n_six_contributions() {
        let sets = feasible_sets(6);
        let nonzero: Vec<(String, BigCount)> = sets
            .iter()
            .map(|d| (d.to_string(), n_injective(d, 6).unwrap()))
            .filter(|(_, c)| *c != big(0))
            .collect();
        let expect: Vec<(String, BigCount)> = ["{1}", "{1,2}", "{1,3}", "{1,4}", "{2}", "{3}", "{6}"]
            .iter()
            .map(|s| (s.to_string(), big(1)))
            .collect();
        assert_eq!(nonzero, expect);
        let by_r = f_by_r(6).unwrap();
        assert_eq!(by_r, BTreeMap::from([(1, big(4)), (2, big(3))]));
        assert_eq!(f_dual(6).unwrap(), big(7));
    }

    #[test]
    fn feasible_sets_respect_min_weight() {
        let sets = feasible_sets(20);
        assert!(sets.iter().all(|d| d.min_weight() <= 20));
        assert!(sets.contains(&set(&[1, 2, 3, 4])));
        assert!(!sets.contains(&set(&[1, 2, 3, 5])));
        // brute check of completeness over subsets of 1..=20 with at most 4 elements
        let mut expected = 0;
        for mask in 1u32..(1 << 20) {
            if mask.count_ones() > 4 {
                continue;
            }
            let d = MultiplicitySet::new((0..20).filter(|b| mask >> b & 1 == 1).map(|b| b as u64 + 1)).unwrap();
            if d.min_weight() <= 20 {
                expected += 1;
            }
        }
        assert_eq!(sets.len(), expected);
    }

    #[test]
    fn by_r_sums_to_total() {
        let mut c = DualCounter::new(Limits::default());
        c.count_upto(40).unwrap();
        for n in 1..=40 {
            let split: BigCount = c.by_r(n).unwrap().values().sum();
            assert_eq!(split, c.count(n).unwrap());
        }
    }

    #[test]
    fn limit_is_enforced() {
        let limits = Limits {
            dual_max_n: 20,
            ..Limits::default()
        };
        assert_eq!(
            DualCounter::new(limits).count(21),
            Err(CountError::DualLimit { n: 21, limit: 20 })
        );
    }
}
