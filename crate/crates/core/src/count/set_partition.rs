//! Set partitions as restricted growth strings.

/// Restricted growth strings of length `k`: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. Each encodes one set partition of a k-set
/// (element i lies in block `a[i]`). Yields Bell(k) strings, lexicographically.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    a: Vec<usize>,
    // prefix_max[i] = max(a[..=i])
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(k: usize) -> Self {
        RestrictedGrowth {
            a: vec![0; k],
            prefix_max: vec![0; k],
            started: false,
            done: k == 0,
        }
    }

    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.a);
        }
        let k = self.a.len();
        let mut i = k - 1;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            if self.a[i] <= self.prefix_max[i - 1] {
                break;
            }
            i -= 1;
        }
        self.a[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.a[i]);
        for j in i + 1..k {
            self.a[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
        Some(&self.a)
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// Every set partition of `set` exactly once, as lists of blocks.
pub fn set_partitions(set: &super::MultiplicitySet) -> impl Iterator<Item = Vec<Vec<u64>>> + '_ {
    RestrictedGrowth::new(set.len()).map(move |rgs| {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); blocks];
        for (&b, &m) in rgs.iter().zip(set.as_slice()) {
            out[b].push(m);
        }
        out
    })
}
