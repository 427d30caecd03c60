//! Exact enumeration and counting of Wilf partitions: partitions of n whose
//! part multiplicities are pairwise distinct (OEIS A098859).
//!
//! - [`partition`]: the [`WilfPartition`] type, validation, canonical product
//!   order, and the parts/multiplicities involution.
//! - [`enumerate`]: brute-force streams used as the oracle.
//! - [`count`]: exact f(n) through several independent engines.
//! - [`bounds`]: extremal term counts, the divisor certificate, and the
//!   block-reversal lower-bound construction.
//! - [`asymptotics`]: big-integer logarithms, the normalized growth ratio and
//!   a monotonicity scan.
//! - [`bfile`]: reading, writing and checking OEIS b-files.

pub mod asymptotics;
pub mod bfile;
pub mod bounds;
pub mod count;
pub mod enumerate;
pub mod partition;

/// Arbitrary-precision nonnegative integer used for every exact count.
pub type BigCount = num_bigint::BigUint;

pub use asymptotics::{ln_big, monotone_scan, ratio_series, RatioPoint, Violation};
pub use bfile::{parse_bfile, verify, BFile, BFileError, VerifyReport};
pub use bounds::{
    lower_bound_count, n_min, r_max, sample_construction, staircase, upper_certificate,
    BoundsError, DivisorTable, LowerBoundParams, LowerBoundReport,
};
pub use count::{
    f_by_r, f_dp, f_dual, n_injective, p_exact, set_partitions, Algorithm, CountError, Limits,
    MemoKey, MultiplicitySet, WilfCounter,
};
pub use enumerate::{count_brute, fixed_points, partitions, wilf_partitions, PartitionStream};
pub use partition::{CanonicalForm, PartitionError, Term, WilfPartition};
