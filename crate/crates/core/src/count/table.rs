use crate::BigCount;
use num_traits::{One, Zero};

/// Dense table of p(n, r), the number of partitions of n into exactly r
/// parts, for `0 <= r <= n <= ceiling`.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    // rows[n][r], r in 0..=n
    rows: Vec<Vec<BigCount>>,
}

impl PartitionTable {
    /// p(n, r) = p(n-1, r-1) + p(n-r, r), p(0, 0) = 1, p(n, 0) = 0 for n > 0.
    pub fn new(ceiling: usize) -> Self {
        let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(ceiling + 1);
        for n in 0..=ceiling {
            let mut row = vec![BigCount::zero(); n + 1];
            if n == 0 {
                row[0] = BigCount::one();
            }
            for r in 1..=n {
                let mut v = rows[n - 1].get(r - 1).cloned().unwrap_or_default();
                if let Some(x) = rows[n - r].get(r) {
                    v += x;
                }
                row[r] = v;
            }
            rows.push(row);
        }
        PartitionTable { rows }
    }

    pub fn ceiling(&self) -> usize {
        self.rows.len() - 1
    }

    /// p(n, r); zero whenever r > n. Panics if n exceeds the ceiling.
    pub fn get(&self, n: usize, r: usize) -> BigCount {
        assert!(n <= self.ceiling(), "p({n}, {r}) is beyond the table");
        self.rows[n].get(r).cloned().unwrap_or_default()
    }

    /// Classical partition number p(n) as the row sum.
    pub fn total(&self, n: usize) -> BigCount {
        self.rows[n].iter().sum()
    }
}

/// Exact p(n, r).
pub fn p_exact(n: usize, r: usize) -> BigCount {
    PartitionTable::new(n).get(n, r)
}
