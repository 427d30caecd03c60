//! Exact counting of f(n) = |T(n)|.
//!
//! Four engines with independent failure modes:
//!
//! | engine  | method                                                   | practical range |
//! |---------|----------------------------------------------------------|-----------------|
//! | `dp`    | value sweep over open parts/multiplicities ([`sweep`])   | n ≲ 1000        |
//! | `memo`  | memoized recursion over parts, descending ([`memo`])     | n ≲ 300         |
//! | `dual`  | inclusion–exclusion over multiplicity sets ([`dual`])    | n ≲ 150         |
//! | `brute` | filter every partition ([`crate::enumerate`])            | n ≲ 60          |
//!
//! All engines report f(0) = 1 (the empty partition), matching the OEIS
//! offset of A098859.

pub mod dual;
pub mod memo;
mod multiset;
pub mod set_partition;
pub mod sweep;
mod table;
mod tally;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumerate::{count_brute, DEFAULT_YIELD_CAP};
use crate::BigCount;

pub use dual::{f_by_r, f_dual, feasible_sets, n_injective, DualCounter};
pub use memo::{MemoCounter, MemoKey};
pub use multiset::MultiplicitySet;
pub use set_partition::{set_partitions, RestrictedGrowth};
pub use sweep::SweepCounter;
pub use table::{p_exact, PartitionTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("memo table for n = {n} would exceed {cap} entries")]
    MemoCap { n: u64, cap: usize },
    #[error("dual engine is limited to n <= {limit}, asked for {n}")]
    DualLimit { n: u64, limit: u64 },
    #[error("brute force for n = {n} would visit more than {cap} partitions")]
    CapExceeded { n: u64, cap: u64 },
    #[error("n = {0} is beyond what this engine can represent")]
    Unsupported(u64),
}

/// Resource budgets shared by the engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Memo entries (`memo`) or stored coefficients (`dp`).
    pub memo_entries: usize,
    pub dual_max_n: u64,
    pub brute_yields: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            memo_entries: 1 << 26,
            dual_max_n: 150,
            brute_yields: DEFAULT_YIELD_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dp,
    Memo,
    Dual,
    Brute,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Dp,
        Algorithm::Memo,
        Algorithm::Dual,
        Algorithm::Brute,
    ];

    pub fn counter(self, limits: Limits) -> Box<dyn WilfCounter> {
        match self {
            Algorithm::Dp => Box::new(SweepCounter::new(limits)),
            Algorithm::Memo => Box::new(MemoCounter::new(limits)),
            Algorithm::Dual => Box::new(DualCounter::new(limits)),
            Algorithm::Brute => Box::new(BruteCounter::new(limits)),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Dp => "dp",
            Algorithm::Memo => "memo",
            Algorithm::Dual => "dual",
            Algorithm::Brute => "brute",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dp" => Ok(Algorithm::Dp),
            "memo" => Ok(Algorithm::Memo),
            "dual" => Ok(Algorithm::Dual),
            "brute" => Ok(Algorithm::Brute),
            other => Err(format!(
                "unknown algorithm `{other}` (expected dp, memo, dual or brute)"
            )),
        }
    }
}

/// A source of exact f(n) values. Instances own their caches and are meant
/// for a single caller; shard ranges of n across separate instances.
pub trait WilfCounter {
    fn algorithm(&self) -> Algorithm;

    fn count(&mut self, n: u64) -> Result<BigCount, CountError>;

    /// `f(0), ..., f(upto)`.
    fn count_upto(&mut self, upto: u64) -> Result<Vec<BigCount>, CountError> {
        (0..=upto).map(|n| self.count(n)).collect()
    }
}

/// Exhaustive filtering of [`crate::enumerate::partitions`].
#[derive(Debug, Clone)]
pub struct BruteCounter {
    cap: u64,
}

impl BruteCounter {
    pub fn new(limits: Limits) -> Self {
        BruteCounter {
            cap: limits.brute_yields,
        }
    }
}

impl WilfCounter for BruteCounter {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Brute
    }

    fn count(&mut self, n: u64) -> Result<BigCount, CountError> {
        count_brute(n, self.cap)
    }
}

/// f(n) with the default `dp` engine and limits.
pub fn f_dp(n: u64) -> Result<BigCount, CountError> {
    SweepCounter::new(Limits::default()).count(n)
}
