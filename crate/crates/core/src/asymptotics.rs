//! Floating-point views of exact counts: `ln f(n)`, the normalized growth
//! ratio, and an empirical monotonicity scan.

use std::f64::consts::LN_2;
use std::io::{self, Write};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::DivisorTable;
use crate::count::{CountError, WilfCounter};
use crate::BigCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the logarithm of zero is undefined")]
pub struct DomainError;

/// Natural logarithm of a big integer.
///
/// Writes `x = m * 2^e` with `m` in `[1, 2)` taken from the top 64 bits, so
/// the only rounding is in `ln m` and the final addition.
pub fn ln_big(x: &BigCount) -> Result<f64, DomainError> {
    if x.is_zero() {
        return Err(DomainError);
    }
    let bits = x.bits();
    let top: u64 = if bits <= 64 {
        let v = x.iter_u64_digits().next().unwrap_or(0);
        v << (64 - bits)
    } else {
        let shifted: BigCount = x >> (bits - 64);
        shifted.iter_u64_digits().next().unwrap_or(0)
    };
    let m = top as f64 / 2f64.powi(63);
    let e = (bits - 1) as f64;
    Ok(m.ln() + e * LN_2)
}

/// `(6n)^(1/3) * ln((6n)^(1/3))`, the normalization of `ln f(n)`.
pub fn scale(n: u64) -> f64 {
    let c = (6.0 * n as f64).cbrt();
    c * c.ln()
}

/// One row of the growth-ratio series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioPoint {
    pub n: u64,
    pub f_digits: usize,
    pub ratio: f64,
}

impl RatioPoint {
    pub fn new(n: u64, f: &BigCount) -> Self {
        assert!(n >= 1, "the ratio is defined for n >= 1");
        RatioPoint {
            n,
            f_digits: f.to_string().len(),
            ratio: ln_big(f).expect("f(n) >= 1") / scale(n),
        }
    }
}

/// `ln f(n) / ((6n)^(1/3) ln (6n)^(1/3))` for every `n` in `from..=to`.
pub fn ratio_series(from: u64, to: u64, counter: &mut dyn WilfCounter) -> Result<Vec<RatioPoint>, CountError> {
    assert!(1 <= from && from <= to, "need 1 <= from <= to");
    let values = counter.count_upto(to)?;
    Ok((from..=to)
        .map(|n| RatioPoint::new(n, &values[n as usize]))
        .collect())
}

/// Formats `x` with `digits` significant digits in plain notation.
fn significant(x: f64, digits: i32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Writes `n,f_digits,ratio` with a header row.
pub fn write_ratio_csv<W: Write>(points: &[RatioPoint], mut out: W) -> io::Result<()> {
    writeln!(out, "n,f_digits,ratio")?;
    for p in points {
        writeln!(out, "{},{},{}", p.n, p.f_digits, significant(p.ratio, 12))?;
    }
    Ok(())
}

/// A step where f decreased.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: u64,
    #[serde(serialize_with = "decimal")]
    pub f_n: BigCount,
    #[serde(serialize_with = "decimal")]
    pub f_next: BigCount,
}

fn decimal<S: serde::Serializer>(x: &BigCount, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Every `n < upto` with `f(n + 1) < f(n)`.
pub fn monotone_scan(upto: u64, counter: &mut dyn WilfCounter) -> Result<Vec<Violation>, CountError> {
    let values = counter.count_upto(upto)?;
    Ok(values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] < w[0])
        .map(|(n, w)| Violation {
            n: n as u64,
            f_n: w[0].clone(),
            f_next: w[1].clone(),
        })
        .collect())
}

/// `ln d(n) * ln ln n / ln n` for `3 <= n <= N`. Report only: the values
/// creep towards `ln 2` far too slowly to test anything at this scale.
pub fn wigert_diagnostic(ceiling: u64, divisors: &DivisorTable) -> Vec<(u64, f64)> {
    assert!(ceiling >= 3, "ln ln n needs n >= 3");
    (3..=ceiling)
        .map(|n| {
            let ln_n = (n as f64).ln();
            let d = divisors.d(n as usize) as f64;
            (n, d.ln() * ln_n.ln() / ln_n)
        })
        .collect()
}
