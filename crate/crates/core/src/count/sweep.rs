//! The `dp` engine: one sweep over the values v = 1, 2, ..., N.
//!
//! A Wilf partition is a set of `(part, multiplicity)` pairs in which the
//! parts are pairwise distinct and so are the multiplicities. Each pair is
//! settled when the sweep reaches its larger coordinate. The smaller
//! coordinate is *opened* when the sweep passes it and *closed* later by the
//! value it pairs with; a diagonal pair `(v, v)` is placed directly. At each
//! value v the sweep may use v once as a part and once as a multiplicity.
//!
//! The frontier state is the pair of open sets (open parts, open
//! multiplicities) and carries a polynomial in the weight. An open value x
//! will cost at least `x * (v + 1)` when it closes, so open values never
//! exceed about √N and the states fit in two `u128` bitmasks.
//!
//! f(0..=N) are read off the empty state once the sweep passes N.

use rustc_hash::FxHashMap;

use super::tally::{settle, widen, Failure, Tally};
use super::{Algorithm, CountError, Limits, WilfCounter};
use crate::BigCount;

/// Largest N for which open values are guaranteed to fit the 128-bit masks
/// (a value v can only open while `v * (v + 1) <= N`).
pub const MAX_N: u64 = 127 * 128 - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct OpenSets {
    parts: u128,
    mults: u128,
}

fn bit_sum(mut mask: u128) -> u64 {
    let mut s = 0;
    while mask != 0 {
        s += mask.trailing_zeros() as u64;
        mask &= mask - 1;
    }
    s
}

fn bits(mut mask: u128) -> impl Iterator<Item = u64> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let b = mask.trailing_zeros() as u64;
        mask &= mask - 1;
        Some(b)
    })
}

/// Coefficients for weights `offset .. offset + coeffs.len()`.
#[derive(Debug, Clone)]
struct Window<T> {
    offset: usize,
    coeffs: Vec<T>,
}

impl<T: Tally> Window<T> {
    /// Adds `src` shifted up by `shift`, dropping weights above `top`.
    fn add_shifted(&mut self, src: &Window<T>, shift: usize, top: usize) -> Result<(), Failure> {
        let start = src.offset + shift;
        let len = src.coeffs.len().min(top + 1 - start);
        if self.coeffs.is_empty() {
            self.offset = start;
            self.coeffs = src.coeffs[..len].to_vec();
            return Ok(());
        }
        if start < self.offset {
            let mut grown = vec![T::zero(); self.offset - start];
            grown.append(&mut self.coeffs);
            self.coeffs = grown;
            self.offset = start;
        }
        let end = start + len;
        if end > self.offset + self.coeffs.len() {
            self.coeffs.resize(end - self.offset, T::zero());
        }
        let base = start - self.offset;
        for (dst, c) in self.coeffs[base..base + len].iter_mut().zip(&src.coeffs[..len]) {
            dst.accumulate(c)?;
        }
        Ok(())
    }
}

fn sweep<T: Tally>(upto: u64, cell_cap: usize) -> Result<Vec<BigCount>, Failure> {
    if upto > MAX_N {
        return Err(CountError::Unsupported(upto).into());
    }
    let n = upto as usize;
    let mut frontier: FxHashMap<OpenSets, Window<T>> = FxHashMap::default();
    frontier.insert(
        OpenSets { parts: 0, mults: 0 },
        Window {
            offset: 0,
            coeffs: vec![T::one()],
        },
    );

    let mut moves: Vec<(u128, u128, usize, bool)> = Vec::new();
    for v in 1..=n {
        let vbit = if v < 128 { 1u128 << v } else { 0 };
        let mut next: FxHashMap<OpenSets, Window<T>> = FxHashMap::default();
        let mut cells = 0usize;
        for (state, window) in &frontier {
            let (op, om) = (state.parts, state.mults);
            // v as a part
            moves.clear();
            moves.push((op, om, 0, false));
            if vbit != 0 {
                moves.push((op | vbit, om, 0, false));
            }
            for x in bits(om) {
                moves.push((op, om & !(1u128 << x), x as usize * v, false));
            }
            moves.push((op, om, v * v, true));

            for &(a, b, w, diagonal) in &moves {
                // then v as a multiplicity, unless the diagonal pair used it
                let mut emit = |parts: u128, mults: u128, added: usize| -> Result<(), Failure> {
                    let pending = (v + 1) as u128 * (bit_sum(parts) + bit_sum(mults)) as u128;
                    if pending + (window.offset + added) as u128 > n as u128 {
                        return Ok(());
                    }
                    let top = n - pending as usize;
                    let slot = next.entry(OpenSets { parts, mults }).or_insert(Window {
                        offset: 0,
                        coeffs: Vec::new(),
                    });
                    let before = slot.coeffs.len();
                    slot.add_shifted(window, added, top)?;
                    cells += slot.coeffs.len() - before;
                    Ok(())
                };
                emit(a, b, w)?;
                if diagonal {
                    continue;
                }
                if vbit != 0 {
                    emit(a, b | vbit, w)?;
                }
                for y in bits(op) {
                    emit(a & !(1u128 << y), b, w + y as usize * v)?;
                }
            }
        }
        if cells > cell_cap {
            return Err(CountError::MemoCap { n: upto, cap: cell_cap }.into());
        }
        frontier = next;
    }

    let done = frontier
        .remove(&OpenSets { parts: 0, mults: 0 })
        .expect("the empty state always survives");
    let mut out = vec![BigCount::default(); n + 1];
    for (i, c) in done.coeffs.iter().enumerate() {
        out[done.offset + i] = c.to_big();
    }
    Ok(out)
}

/// f(0), ..., f(upto) from a single sweep.
pub fn sweep_table(upto: u64, limits: Limits) -> Result<Vec<BigCount>, CountError> {
    let cap = limits.memo_entries;
    settle(widen!(sweep(upto, cap)))
}

/// Counter for the `dp` engine; keeps the longest table computed so far.
#[derive(Debug, Clone)]
pub struct SweepCounter {
    limits: Limits,
    table: Vec<BigCount>,
}

impl SweepCounter {
    pub fn new(limits: Limits) -> Self {
        SweepCounter {
            limits,
            table: Vec::new(),
        }
    }

    fn ensure(&mut self, upto: u64) -> Result<(), CountError> {
        if (upto as usize) >= self.table.len() {
            self.table = sweep_table(upto, self.limits)?;
        }
        Ok(())
    }
}

impl WilfCounter for SweepCounter {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Dp
    }

    fn count(&mut self, n: u64) -> Result<BigCount, CountError> {
        self.ensure(n)?;
        Ok(self.table[n as usize].clone())
    }

    fn count_upto(&mut self, upto: u64) -> Result<Vec<BigCount>, CountError> {
        self.ensure(upto)?;
        Ok(self.table[..=upto as usize].to_vec())
    }
}
