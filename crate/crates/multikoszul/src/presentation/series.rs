use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Dimensions indexed by (homological degree i, Adams degree n) within bounds (H, D).
/// Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedTable {
    pub bounds: (usize, usize),
    pub entries: BTreeMap<usize, BTreeMap<usize, usize>>,
}

impl BigradedTable {
    pub fn new(h: usize, d: usize) -> BigradedTable {
        BigradedTable { bounds: (h, d), entries: BTreeMap::new() }
    }

    pub fn set(&mut self, i: usize, n: usize, dim: usize) {
        assert!(i <= self.bounds.0 && n <= self.bounds.1, "cell ({i}, {n}) outside bounds");
        if dim == 0 {
            if let Some(row) = self.entries.get_mut(&i) {
                row.remove(&n);
                if row.is_empty() {
                    self.entries.remove(&i);
                }
            }
        } else {
            self.entries.entry(i).or_default().insert(n, dim);
        }
    }

    pub fn get(&self, i: usize, n: usize) -> usize {
        assert!(i <= self.bounds.0 && n <= self.bounds.1, "cell ({i}, {n}) outside bounds");
        self.entries.get(&i).and_then(|r| r.get(&n)).copied().unwrap_or(0)
    }

    /// Row i as a coefficient list [dim_{i,0}, …, dim_{i,D}].
    pub fn row(&self, i: usize) -> Vec<usize> {
        (0..=self.bounds.1).map(|n| self.get(i, n)).collect()
    }

    /// Restriction to smaller bounds.
    pub fn restrict(&self, h: usize, d: usize) -> BigradedTable {
        let mut t = BigradedTable::new(h.min(self.bounds.0), d.min(self.bounds.1));
        for (i, row) in &self.entries {
            for (n, v) in row {
                if *i <= t.bounds.0 && *n <= t.bounds.1 {
                    t.set(*i, *n, *v);
                }
            }
        }
        t
    }

    /// JSON object {"i": {"n": dim}} with nonzero entries only.
    pub fn to_json(&self) -> serde_json::Value {
        let m: BTreeMap<String, BTreeMap<String, usize>> = self
            .entries
            .iter()
            .map(|(i, r)| (i.to_string(), r.iter().map(|(n, v)| (n.to_string(), *v)).collect()))
            .collect();
        serde_json::to_value(m).unwrap()
    }

    pub fn from_json(bounds: (usize, usize), v: &serde_json::Value) -> Option<BigradedTable> {
        let m: BTreeMap<String, BTreeMap<String, usize>> = serde_json::from_value(v.clone()).ok()?;
        let mut t = BigradedTable::new(bounds.0, bounds.1);
        for (i, r) in m {
            for (n, d) in r {
                t.set(i.parse().ok()?, n.parse().ok()?, d);
            }
        }
        Some(t)
    }
}

/// Truncated product of integer power series.
pub fn series_mul(a: &[i128], b: &[i128], len: usize) -> Vec<i128> {
    let mut out = vec![0i128; len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a power series with constant term 1, truncated to `len` terms.
pub fn series_inverse(a: &[i128], len: usize) -> Vec<i128> {
    assert_eq!(a.first(), Some(&1), "constant term must be 1");
    let mut out = vec![0i128; len];
    out[0] = 1;
    for n in 1..len {
        let s: i128 = (1..=n).filter(|k| *k < a.len()).map(|k| a[k] * out[n - k]).sum();
        out[n] = -s;
    }
    out
}
