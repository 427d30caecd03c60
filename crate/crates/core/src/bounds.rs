//! How many terms a Wilf partition can have, an upper bound on f(n) from
//! divisor counts, and a randomized check of the factorial lower-bound
//! construction.

use std::collections::HashSet;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::count::PartitionTable;
use crate::partition::{Term, WilfPartition};
use crate::BigCount;

/// Least weight carrying `r` distinct multiplicities: `r(r+1)(r+2)/6`.
pub fn n_min(r: u64) -> u64 {
    r * (r + 1) * (r + 2) / 6
}

/// Largest `r` with `n_min(r) <= n`, found by exact integer search.
pub fn r_max(n: u64) -> u64 {
    assert!(n >= 1, "r_max is defined for n >= 1");
    // (6n)^(1/3) + 1 bounds the answer; exponential then binary search keeps
    // everything in integers
    let mut hi = 1u64;
    while n_min(hi) <= n {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if n_min(mid) <= n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Part `i` with multiplicity `r + 1 - i`: the lightest partition with `r`
/// terms.
pub fn staircase(r: u64) -> WilfPartition {
    assert!(r >= 1, "staircase needs r >= 1");
    let terms = (1..=r).map(|i| Term::new(i, r + 1 - i)).collect();
    WilfPartition::from_sorted_unchecked(n_min(r), terms)
}

/// Divisor counts `d(1..=N)` and their running maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    d: Vec<u32>,
    dmax: Vec<u32>,
}

impl DivisorTable {
    /// Harmonic sieve: every `i` bumps each of its multiples.
    pub fn new(ceiling: usize) -> Self {
        assert!(ceiling >= 1, "divisor table needs a ceiling >= 1");
        let mut d = vec![0u32; ceiling + 1];
        for i in 1..=ceiling {
            for j in (i..=ceiling).step_by(i) {
                d[j] += 1;
            }
        }
        let mut dmax = vec![0u32; ceiling + 1];
        for j in 1..=ceiling {
            dmax[j] = dmax[j - 1].max(d[j]);
        }
        DivisorTable { d, dmax }
    }

    pub fn ceiling(&self) -> usize {
        self.d.len() - 1
    }

    pub fn d(&self, j: usize) -> u32 {
        assert!((1..=self.ceiling()).contains(&j), "d({j}) outside the table");
        self.d[j]
    }

    /// `max{d(j) : 1 <= j <= n}`.
    pub fn dmax(&self, n: usize) -> u32 {
        assert!((1..=self.ceiling()).contains(&n), "Dmax({n}) outside the table");
        self.dmax[n]
    }
}

/// `p(n, r) * Dmax(n)^r` for `r = 1..=r_max(n)`, indexed from `r = 1`.
///
/// Each term of a Wilf partition with `r` terms is a product `m * p`; listing
/// the products in canonical order gives a partition of n into r parts, and
/// each product splits into `(m, p)` in at most `Dmax(n)` ways.
pub fn certificate_terms(n: u64, divisors: &DivisorTable, parts: &PartitionTable) -> Vec<BigCount> {
    let dmax = BigCount::from(divisors.dmax(n as usize));
    let mut power = BigCount::one();
    (1..=r_max(n) as usize)
        .map(|r| {
            power *= &dmax;
            parts.get(n as usize, r) * &power
        })
        .collect()
}

/// `sum_{r <= r_max(n)} p(n, r) * Dmax(n)^r`, an upper bound on f(n).
pub fn upper_certificate(n: u64, divisors: &DivisorTable) -> BigCount {
    let parts = PartitionTable::new(n as usize);
    certificate_terms(n, divisors, &parts).into_iter().sum()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("epsilon must lie strictly between 0 and 1/2, got {0}")]
    Epsilon(f64),
    #[error("n and K must be positive")]
    NonPositive,
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
}

/// Parameters of the block-reversal construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowerBoundParams {
    pub n: u64,
    pub k: u64,
    pub epsilon: f64,
    pub a: f64,
    pub b: u64,
    pub seed: u64,
}

impl LowerBoundParams {
    /// Derives `a = (6(1 - 2ε))^(1/3)` and `b = floor(a n^(1/3) / K)`.
    pub fn new(n: u64, k: u64, epsilon: f64, seed: u64) -> Result<Self, BoundsError> {
        if n == 0 || k == 0 {
            return Err(BoundsError::NonPositive);
        }
        if !(epsilon > 0.0 && epsilon < 0.5) {
            return Err(BoundsError::Epsilon(epsilon));
        }
        let a = (6.0 * (1.0 - 2.0 * epsilon)).cbrt();
        let b = (a * (n as f64).cbrt() / k as f64).floor() as u64;
        Ok(LowerBoundParams {
            n,
            k,
            epsilon,
            a,
            b,
            seed,
        })
    }

    /// `K * b`, the length of the permuted range.
    pub fn span(&self) -> u64 {
        self.k * self.b
    }

    /// Block `I_j = [(j-1)b + 1, jb]` for `1 <= j <= K`.
    pub fn block(&self, j: u64) -> std::ops::RangeInclusive<u64> {
        (j - 1) * self.b + 1..=j * self.b
    }

    /// The smallest `sum_{i >= 2} i * p_i` over all block-reversal
    /// permutations: within each block pairing, large `i` takes small `p`.
    pub fn min_weighted_sum(&self) -> u64 {
        let mut total = 0;
        for j in 1..=self.k {
            let targets = self.block(self.k + 1 - j);
            for (i, p) in self.block(j).zip(targets.rev()) {
                if i >= 2 {
                    total += i * p;
                }
            }
        }
        total
    }

    fn check_feasible(&self) -> Result<(), BoundsError> {
        if self.span() < 2 {
            return Err(BoundsError::InfeasibleParams(format!(
                "K*b = {} leaves no multiplicity above 1",
                self.span()
            )));
        }
        let min = self.min_weighted_sum();
        if min >= self.n {
            return Err(BoundsError::InfeasibleParams(format!(
                "the smallest weighted sum {min} already reaches n = {}",
                self.n
            )));
        }
        Ok(())
    }
}

/// `(b!)^K`.
pub fn lower_bound_count(params: &LowerBoundParams) -> BigCount {
    let factorial: BigCount = (1..=params.b).map(BigCount::from).product();
    num_traits::pow(factorial, params.k as usize)
}

/// Outcome of [`sample_construction`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub params: LowerBoundParams,
    pub lower_bound: String,
    pub lower_bound_digits: usize,
    pub samples: u64,
    pub valid: u64,
    pub invalid: u64,
    /// Valid samples with `sum_{i >= 2} i * p_i < (1 - ε) n`.
    pub sum_condition_held: u64,
    /// Valid samples whose multiplicities are exactly `{1, ..., Kb}`.
    pub full_multiplicity_set: u64,
    pub all_distinct: bool,
    /// The first few rejected candidates with the reason.
    pub rejected: Vec<String>,
}

/// One block-reversal permutation, as `p[i]` for `i = 1..=Kb` (index 0 unused).
fn draw_permutation(params: &LowerBoundParams, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut p = vec![0u64; params.span() as usize + 1];
    for j in 1..=params.k {
        let mut targets: Vec<u64> = params.block(params.k + 1 - j).collect();
        targets.shuffle(rng);
        for (i, t) in params.block(j).zip(targets) {
            p[i as usize] = t;
        }
    }
    p
}

/// Draws `count` uniform block-reversal permutations and checks the Wilf
/// partition each one induces: multiplicity `i` on part `p_i` for
/// `2 <= i <= Kb`, and one leftover part `n - sum i * p_i`.
///
/// Sample `k` is seeded from `seed + k`, so results do not depend on how
/// the draws are scheduled.
pub fn sample_construction(params: &LowerBoundParams, count: u64) -> Result<LowerBoundReport, BoundsError> {
    params.check_feasible()?;
    let threshold = (1.0 - params.epsilon) * params.n as f64;
    let full: Vec<u64> = (1..=params.span()).collect();
    let mut seen: HashSet<WilfPartition> = HashSet::new();
    let mut report = LowerBoundReport {
        params: *params,
        lower_bound: String::new(),
        lower_bound_digits: 0,
        samples: count,
        valid: 0,
        invalid: 0,
        sum_condition_held: 0,
        full_multiplicity_set: 0,
        all_distinct: true,
        rejected: Vec::new(),
    };
    let bound = lower_bound_count(params).to_string();
    report.lower_bound_digits = bound.len();
    report.lower_bound = bound;

    for k in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed.wrapping_add(k));
        let p = draw_permutation(params, &mut rng);
        let weighted: u64 = (2..=params.span()).map(|i| i * p[i as usize]).sum();
        if weighted >= params.n {
            report.invalid += 1;
            if report.rejected.len() < 5 {
                report.rejected.push(format!("sample {k}: weighted sum {weighted} leaves no leftover part"));
            }
            continue;
        }
        let mut terms: Vec<(u64, u64)> = (2..=params.span()).map(|i| (p[i as usize], i)).collect();
        terms.push((params.n - weighted, 1));
        match WilfPartition::validate(&terms, params.n) {
            Ok(w) => {
                report.valid += 1;
                if (weighted as f64) < threshold {
                    report.sum_condition_held += 1;
                }
                let mut mults: Vec<u64> = w.multiplicities().collect();
                mults.sort_unstable();
                if mults == full {
                    report.full_multiplicity_set += 1;
                }
                if !seen.insert(w) {
                    report.all_distinct = false;
                }
            }
            Err(e) => {
                report.invalid += 1;
                if report.rejected.len() < 5 {
                    report.rejected.push(format!("sample {k}: {e}"));
                }
            }
        }
    }
    Ok(report)
}
