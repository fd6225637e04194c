use std::cmp::Ordering;

use super::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, one: Scalar) -> SparseVec {
        SparseVec { entries: vec![(i, one)] }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> SparseVec {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, d)) if *j == i => *d = d.add(&c),
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    /// Builds from pairs already sorted by index with no duplicates or zeros.
    pub fn from_sorted(entries: Vec<(usize, Scalar)>) -> SparseVec {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, a)| (*i, a.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, a)| (*i, a.neg())).collect(),
        }
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut p, mut q) = (0, 0);
        while p < a.len() || q < b.len() {
            let ord = match (a.get(p), b.get(q)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[p].clone());
                    p += 1;
                }
                Ordering::Greater => {
                    out.push((b[q].0, b[q].1.mul(c)));
                    q += 1;
                }
                Ordering::Equal => {
                    let v = a[p].1.add(&b[q].1.mul(c));
                    if !v.is_zero() {
                        out.push((a[p].0, v));
                    }
                    p += 1;
                    q += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&c.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&c.field().one().neg(), other),
        }
    }

    /// Relabels indices through `f`, which must be injective.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    /// Linear combination `Σ coeffs[k] · vectors[k]`.
    pub fn combination<'a>(terms: impl IntoIterator<Item = (Scalar, &'a SparseVec)>) -> SparseVec {
        let mut pairs = Vec::new();
        for (c, v) in terms {
            if c.is_zero() {
                continue;
            }
            for (i, a) in v.iter() {
                pairs.push((*i, a.mul(&c)));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn to_dense(&self, len: usize, zero: &Scalar) -> Vec<Scalar> {
        let mut out = vec![zero.clone(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_pairs(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn axpy_cancels() {
        let f = Field::Rational;
        let a = SparseVec::from_pairs(vec![(0, f.int(1)), (3, f.int(2))]);
        let b = SparseVec::from_pairs(vec![(3, f.int(1)), (5, f.int(1))]);
        let c = a.axpy(&f.int(-2), &b);
        assert_eq!(c.entries(), &[(0, f.int(1)), (5, f.int(-2))]);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn from_pairs_merges() {
        let f = Field::prime(5).unwrap();
        let v = SparseVec::from_pairs(vec![(2, f.int(3)), (1, f.int(1)), (2, f.int(2))]);
        assert_eq!(v.entries(), &[(1, f.int(1))]);
    }
}
