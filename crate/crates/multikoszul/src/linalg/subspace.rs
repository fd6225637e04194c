use std::collections::BTreeMap;

use super::{Field, Scalar, SparseVec, SpanSolver};
use crate::Error;

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub cols: usize,
    pub rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn new(field: Field, cols: usize, rows: Vec<SparseVec>) -> Matrix {
        debug_assert!(rows.iter().all(|r| r.entries().last().is_none_or(|e| e.0 < cols)));
        Matrix { field, cols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Canonical reduced row echelon form, zero rows removed.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let s = Subspace::span(self.cols, self.field, self.rows.iter().cloned());
        let pivots = s.pivots().to_vec();
        (Matrix::new(self.field, self.cols, s.rows), pivots)
    }

    pub fn rank(&self) -> usize {
        let mut solver = SpanSolver::new(self.cols, self.field, false);
        for r in &self.rows {
            solver.add(r);
        }
        solver.rank()
    }
}

/// Incrementally maintained reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    field: Field,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ambient: usize, field: Field) -> Echelon {
        Echelon { ambient, field, rows: BTreeMap::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Echelon {
        Echelon {
            ambient: s.ambient,
            field: s.field,
            rows: s.pivots.iter().copied().zip(s.rows.iter().cloned()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` modulo the current span; it has no entries in pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(Scalar, &SparseVec)> = v
            .iter()
            .filter_map(|(j, c)| self.rows.get(j).map(|r| (c.neg(), r)))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        if hits.len() == 1 {
            return v.axpy(&hits[0].0, hits[0].1);
        }
        let mut terms = hits;
        terms.push((self.field.one(), v));
        SparseVec::combination(terms)
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&lead.inv());
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(p) {
                *row = row.axpy(&c.neg(), &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn into_subspace(self) -> Subspace {
        let (pivots, rows) = self.rows.into_iter().unzip();
        Subspace { ambient: self.ambient, field: self.field, rows, pivots }
    }
}

/// Subspace of a coordinate space, stored by its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: Field) -> Subspace {
        Subspace { ambient, field, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize, field: Field) -> Subspace {
        Subspace {
            ambient,
            field,
            rows: (0..ambient).map(|i| SparseVec::unit(i, field.one())).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, field: Field, vectors: impl IntoIterator<Item = SparseVec>) -> Subspace {
        let mut solver = SpanSolver::new(ambient, field, false);
        for v in vectors {
            solver.add(&v);
        }
        solver.into_subspace()
    }

    pub(crate) fn from_rref_parts(ambient: usize, field: Field, rows: Vec<SparseVec>, pivots: Vec<usize>) -> Subspace {
        Subspace { ambient, field, rows, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::new(self.field, self.ambient, self.rows.clone())
    }

    fn check(&self, o: &Subspace) -> Result<(), Error> {
        if self.ambient != o.ambient {
            return Err(Error::Internal(format!(
                "ambient mismatch: {} vs {}",
                self.ambient, o.ambient
            )));
        }
        Ok(())
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(Scalar, &SparseVec)> = self
            .pivots
            .iter()
            .zip(&self.rows)
            .filter_map(|(p, r)| v.get(*p).map(|c| (c.neg(), r)))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut terms = hits;
        terms.push((self.field.one(), v));
        SparseVec::combination(terms)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        self.ambient == o.ambient && o.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is not a member.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coeffs: Vec<Option<Scalar>> = self.pivots.iter().map(|p| v.get(*p).cloned()).collect();
        let terms = coeffs
            .iter()
            .zip(&self.rows)
            .filter_map(|(c, r)| c.as_ref().map(|c| (c.clone(), r)));
        let recon = SparseVec::combination(terms);
        if recon != *v {
            return None;
        }
        Some(coeffs.into_iter().map(|c| c.unwrap_or_else(|| self.field.zero())).collect())
    }

    /// Sparse coordinates (index into the basis) of a member vector.
    pub fn sparse_coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut pairs = Vec::new();
        for (k, p) in self.pivots.iter().enumerate() {
            if let Some(c) = v.get(*p) {
                pairs.push((k, c.clone()));
            }
        }
        let recon = SparseVec::combination(pairs.iter().map(|(k, c)| (c.clone(), &self.rows[*k])));
        (recon == *v).then(|| SparseVec::from_sorted(pairs))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, Error> {
        self.check(o)?;
        let mut e = Echelon::from_subspace(self);
        for r in &o.rows {
            e.insert(r);
        }
        Ok(e.into_subspace())
    }

    pub fn intersect(&self, o: &Subspace) -> Result<Subspace, Error> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Subspace::zero(self.ambient, self.field));
        }
        // Combinations of self's rows whose residual modulo o vanishes.
        let (small, big) = if self.dim() <= o.dim() { (self, o) } else { (o, self) };
        let mut solver = SpanSolver::new(self.ambient, self.field, true);
        for r in &small.rows {
            solver.add(&big.reduce(r));
        }
        let vecs = solver
            .dependencies()
            .iter()
            .map(|c| SparseVec::combination(c.iter().map(|(k, a)| (a.clone(), &small.rows[*k]))))
            .collect::<Vec<_>>();
        Ok(Subspace::span(self.ambient, self.field, vecs))
    }

    /// Deterministic complement of `self` inside `w`: the canonical rows of `w`
    /// whose pivots are not pivots of `self`.
    pub fn complement_in(&self, w: &Subspace) -> Result<Subspace, Error> {
        self.check(w)?;
        if !w.contains_subspace(self) {
            return Err(Error::Internal("complement_in: containment violated".into()));
        }
        let mine: std::collections::HashSet<usize> = self.pivots.iter().copied().collect();
        let rows: Vec<SparseVec> = w
            .pivots
            .iter()
            .zip(&w.rows)
            .filter(|(p, _)| !mine.contains(p))
            .map(|(_, r)| r.clone())
            .collect();
        Ok(Subspace::span(self.ambient, self.field, rows))
    }

    /// Rows of `w`'s canonical basis picked by `complement_in`, unreduced.
    pub fn complement_rows(&self, w: &Subspace) -> Vec<SparseVec> {
        let mine: std::collections::HashSet<usize> = self.pivots.iter().copied().collect();
        w.pivots
            .iter()
            .zip(&w.rows)
            .filter(|(p, _)| !mine.contains(p))
            .map(|(_, r)| r.clone())
            .collect()
    }

    /// Relabels coordinates through an injective map into a space of size `ambient`.
    pub fn embed(&self, ambient: usize, f: impl Fn(usize) -> usize) -> Subspace {
        Subspace::span(ambient, self.field, self.rows.iter().map(|r| r.reindex(&f)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn v(f: Field, xs: &[i64]) -> SparseVec {
        xs.iter().enumerate().map(|(i, x)| (i, f.int(*x))).collect()
    }

    #[test]
    fn rref_examples() {
        let f = Field::Rational;
        let (m, p) = Matrix::new(f, 1, vec![v(f, &[0])]).rref();
        assert_eq!(m.nrows(), 0);
        assert!(p.is_empty());
        let id = Matrix::new(f, 3, vec![v(f, &[1, 0, 0]), v(f, &[0, 1, 0]), v(f, &[0, 0, 1])]);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let (m, p) = Matrix::new(f, 2, vec![v(f, &[2, 4]), v(f, &[1, 2])]).rref();
        assert_eq!(m.rows, vec![v(f, &[1, 2])]);
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn intersection_examples() {
        let f = Field::Rational;
        let e1 = Subspace::span(2, f, [v(f, &[1, 0])]);
        let e2 = Subspace::span(2, f, [v(f, &[0, 1])]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        let u = Subspace::span(4, f, [v(f, &[1, 1, 0, 0]), v(f, &[0, 0, 1, 0])]);
        let w = Subspace::span(4, f, [v(f, &[1, 1, 0, 0]), v(f, &[0, 0, 0, 1])]);
        assert_eq!(u.intersect(&w).unwrap(), Subspace::span(4, f, [v(f, &[1, 1, 0, 0])]));
        assert!(u.intersect(&Subspace::zero(3, f)).is_err());
    }

    #[test]
    fn sum_and_complement_examples() {
        let f = Field::Rational;
        let e1 = Subspace::span(2, f, [v(f, &[1, 0])]);
        let e2 = Subspace::span(2, f, [v(f, &[0, 1])]);
        let both = e1.sum(&e2).unwrap();
        assert_eq!(both, Subspace::full(2, f));
        assert_eq!(e1.sum(&Subspace::zero(2, f)).unwrap(), e1);
        assert_eq!(Subspace::zero(2, f).complement_in(&both).unwrap(), both);
        assert!(both.complement_in(&both).unwrap().is_zero());
        assert_eq!(e1.complement_in(&both).unwrap(), e2);
        assert!(both.complement_in(&e1).is_err());
    }

    #[test]
    fn coordinate_examples() {
        let f = Field::Rational;
        let u = Subspace::span(3, f, [v(f, &[1, 0, 2]), v(f, &[0, 1, 5])]);
        assert_eq!(u.coordinates(&SparseVec::new()).unwrap(), vec![f.zero(), f.zero()]);
        let e2 = Subspace::span(2, f, [v(f, &[0, 1])]);
        assert!(e2.coordinates(&v(f, &[1, 0])).is_none());
        let b1 = &u.basis()[0];
        let b2 = &u.basis()[1];
        let target = b1.scale(&f.int(2)).axpy(&f.int(-3), b2);
        assert_eq!(u.coordinates(&target).unwrap(), vec![f.int(2), f.int(-3)]);
    }
}
