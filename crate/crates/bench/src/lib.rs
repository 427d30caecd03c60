//! Benchmark inputs shared by the criterion targets.

/// Weights at which the engines are timed.
pub const SIZES: [u64; 3] = [40, 100, 200];
