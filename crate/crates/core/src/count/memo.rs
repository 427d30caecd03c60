//! The `memo` engine: memoized recursion over parts in descending order.
//!
//! `B(rem, i, S)` counts the ways to finish a partition with `rem` still to
//! place using parts `<= i` whose multiplicities avoid the set `S` already
//! used by larger parts:
//!
//! ```text
//! B(rem, i, S) = B(rem, i-1, S) + sum_{m >= 1, m not in S, m*i <= rem} B(rem - m*i, i-1, S + {m})
//! B(0, _, _) = 1,   B(rem > 0, 0, _) = 0,   f(n) = B(n, n, {})
//! ```
//!
//! Pruning, none of which changes the result:
//! - `i` is clamped to `rem` and `S` to its elements `<= rem`, so equivalent
//!   states share one memo entry;
//! - a state whose placed-term count already equals `r_max(n)` cannot take
//!   another term;
//! - a state where every multiplicity `1..=rem` is taken is dead;
//! - `i <= 2` has a closed form and is never stored.

use rustc_hash::FxHashMap;

use super::tally::{settle, widen, Failure, Tally};
use super::{Algorithm, CountError, Limits, WilfCounter};
use crate::bounds::r_max;
use crate::BigCount;

/// Memo key: remaining weight, largest admissible part, and the used
/// multiplicities that can still matter (sorted, all `<= remaining`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MemoKey {
    pub remaining: u32,
    pub max_part: u32,
    pub used: Box<[u16]>,
}

/// Largest n the engine accepts: multiplicities are stored as `u16` and at
/// most 32 terms fit the scratch buffers (32 terms need n >= 6545).
pub const MAX_N: u64 = 6000;

fn contains(set: &[u16], x: u32) -> bool {
    x <= u16::MAX as u32 && set.binary_search(&(x as u16)).is_ok()
}

/// `B(rem, 1, S)`: only part 1 is left, with multiplicity `rem`.
fn parts_up_to_one(rem: u32, used: &[u16]) -> u64 {
    u64::from(!contains(used, rem))
}

/// `B(rem, 2, S)`: solutions of `a + 2b = rem` with `a, b >= 0`, every
/// positive one outside `S`, and `a != b` unless both are zero. Counted by
/// inclusion–exclusion over the elements of `S` in `O(|S| log |S|)`.
fn parts_up_to_two(rem: u32, used: &[u16]) -> u64 {
    let total = (rem / 2 + 1) as i64;
    let mut b_used = 0i64;
    let mut a_used = 0i64;
    let mut both = 0i64;
    for &x in used {
        let x = x as u32;
        if x == 0 || x > rem {
            continue;
        }
        if x <= rem / 2 {
            b_used += 1;
        }
        if (rem - x).is_multiple_of(2) {
            a_used += 1;
            let b = (rem - x) / 2;
            if b >= 1 && contains(used, b) {
                both += 1;
            }
        }
    }
    let tie = i64::from(rem > 0 && rem.is_multiple_of(3) && !contains(used, rem / 3));
    (total - b_used - a_used + both - tie) as u64
}

struct Memo<T> {
    map: FxHashMap<MemoKey, T>,
    cap: usize,
    // limits for the current target n
    target: u64,
    max_terms: usize,
}

impl<T: Tally> Memo<T> {
    fn new(cap: usize) -> Self {
        Memo {
            map: FxHashMap::default(),
            cap,
            target: 0,
            max_terms: 0,
        }
    }

    fn set_target(&mut self, n: u64) {
        self.target = n;
        self.max_terms = if n == 0 { 0 } else { r_max(n) as usize };
    }

    fn count(&mut self, n: u64) -> Result<T, Failure> {
        self.set_target(n);
        self.completions(n as u32, n as u32, &[], 0)
    }

    fn completions(&mut self, rem: u32, max_part: u32, used: &[u16], placed: usize) -> Result<T, Failure> {
        if rem == 0 {
            return Ok(T::one());
        }
        if max_part == 0 || placed >= self.max_terms {
            return Ok(T::zero());
        }
        let i = max_part.min(rem);
        let used = &used[..used.partition_point(|&m| m as u32 <= rem)];
        if used.len() as u32 == rem {
            return Ok(T::zero());
        }
        match i {
            1 => return Ok(T::from_u64(parts_up_to_one(rem, used))),
            2 => return Ok(T::from_u64(parts_up_to_two(rem, used))),
            _ => {}
        }
        let key = MemoKey {
            remaining: rem,
            max_part: i,
            used: used.into(),
        };
        if let Some(v) = self.map.get(&key) {
            return Ok(v.clone());
        }

        let mut total = self.completions(rem, i - 1, used, placed)?;
        let mut scratch = [0u16; 33];
        let len = used.len();
        for m in 1..=rem / i {
            if contains(used, m) {
                continue;
            }
            let pos = used.partition_point(|&x| (x as u32) < m);
            scratch[..pos].copy_from_slice(&used[..pos]);
            scratch[pos] = m as u16;
            scratch[pos + 1..=len].copy_from_slice(&used[pos..]);
            let sub = self.completions(rem - m * i, i - 1, &scratch[..=len], placed + 1)?;
            total.accumulate(&sub)?;
        }

        if self.map.len() >= self.cap {
            return Err(CountError::MemoCap {
                n: self.target,
                cap: self.cap,
            }
            .into());
        }
        self.map.insert(key, total.clone());
        Ok(total)
    }
}

fn check_range(n: u64) -> Result<(), Failure> {
    if n > MAX_N {
        return Err(CountError::Unsupported(n).into());
    }
    Ok(())
}

fn memo_single<T: Tally>(n: u64, cap: usize) -> Result<BigCount, Failure> {
    check_range(n)?;
    Ok(Memo::<T>::new(cap).count(n)?.to_big())
}

fn memo_range<T: Tally>(upto: u64, cap: usize) -> Result<Vec<BigCount>, Failure> {
    check_range(upto)?;
    // keys do not depend on n, so one table serves the whole range
    let mut memo = Memo::<T>::new(cap);
    (0..=upto)
        .map(|n| memo.count(n).map(|v| v.to_big()))
        .collect()
}

/// Counter for the `memo` engine.
#[derive(Debug, Clone)]
pub struct MemoCounter {
    limits: Limits,
    cache: Vec<BigCount>,
}

impl MemoCounter {
    pub fn new(limits: Limits) -> Self {
        MemoCounter {
            limits,
            cache: Vec::new(),
        }
    }
}

impl WilfCounter for MemoCounter {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Memo
    }

    fn count(&mut self, n: u64) -> Result<BigCount, CountError> {
        if let Some(v) = self.cache.get(n as usize) {
            return Ok(v.clone());
        }
        let cap = self.limits.memo_entries;
        settle(widen!(memo_single(n, cap)))
    }

    fn count_upto(&mut self, upto: u64) -> Result<Vec<BigCount>, CountError> {
        if (upto as usize) >= self.cache.len() {
            let cap = self.limits.memo_entries;
            self.cache = settle(widen!(memo_range(upto, cap)))?;
        }
        Ok(self.cache[..=upto as usize].to_vec())
    }
}
