use num_traits::{One, Zero};

use crate::BigCount;

/// Raised when a fixed-width tally wraps; the caller retries wider.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

/// Exact counter arithmetic. Engines run on `u64` first and fall back to
/// `u128`, then [`BigCount`], whenever an addition would overflow.
pub(crate) trait Tally: Clone + Zero + One {
    fn accumulate(&mut self, other: &Self) -> Result<(), Overflow>;
    fn to_big(&self) -> BigCount;
    fn from_u64(x: u64) -> Self;
}

impl Tally for u64 {
    fn accumulate(&mut self, other: &Self) -> Result<(), Overflow> {
        *self = self.checked_add(*other).ok_or(Overflow)?;
        Ok(())
    }

    fn to_big(&self) -> BigCount {
        BigCount::from(*self)
    }

    fn from_u64(x: u64) -> Self {
        x
    }
}

impl Tally for u128 {
    fn accumulate(&mut self, other: &Self) -> Result<(), Overflow> {
        *self = self.checked_add(*other).ok_or(Overflow)?;
        Ok(())
    }

    fn to_big(&self) -> BigCount {
        BigCount::from(*self)
    }

    fn from_u64(x: u64) -> Self {
        x as u128
    }
}

impl Tally for BigCount {
    fn accumulate(&mut self, other: &Self) -> Result<(), Overflow> {
        *self += other;
        Ok(())
    }

    fn to_big(&self) -> BigCount {
        self.clone()
    }

    fn from_u64(x: u64) -> Self {
        BigCount::from(x)
    }
}

/// Outcome of an engine pass at one tally width.
#[derive(Debug)]
pub(crate) enum Failure {
    Overflow,
    Count(super::CountError),
}

impl From<Overflow> for Failure {
    fn from(_: Overflow) -> Self {
        Failure::Overflow
    }
}

impl From<super::CountError> for Failure {
    fn from(e: super::CountError) -> Self {
        Failure::Count(e)
    }
}

/// Runs the generic pass `$f` at `u64`, then `u128`, then arbitrary
/// precision. `$f` must return `Result<_, Failure>` with its output already
/// converted out of the tally type.
macro_rules! widen {
    ($f:ident ( $($arg:expr),* $(,)? )) => {{
        use $crate::count::tally::Failure;
        match $f::<u64>($($arg),*) {
            Err(Failure::Overflow) => match $f::<u128>($($arg),*) {
                Err(Failure::Overflow) => $f::<$crate::BigCount>($($arg),*),
                other => other,
            },
            other => other,
        }
    }};
}
pub(crate) use widen;

pub(crate) fn settle<T>(r: Result<T, Failure>) -> Result<T, super::CountError> {
    match r {
        Ok(v) => Ok(v),
        Err(Failure::Count(e)) => Err(e),
        Err(Failure::Overflow) => unreachable!("arbitrary precision cannot overflow"),
    }
}
