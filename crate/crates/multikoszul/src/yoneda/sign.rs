use std::collections::BTreeMap;

use crate::komplex::DegreeMatrix;
use crate::linalg::{Field, Scalar, SparseVec};

/// Exponent of the sign in c(f_1⊗…⊗f_n)(w_1⊗…⊗w_n) for factors of
/// cohomological degrees `degrees`: Σ_{l<k} d_l d_k. Adams degrees never enter.
pub fn c_sign(degrees: &[usize]) -> usize {
    let mut s = 0;
    let mut right: usize = degrees.iter().sum();
    for &d in degrees {
        right -= d;
        s += d * right;
    }
    s
}

/// Exponent of the Koszul sign for (id^r ⊗ f ⊗ id^t) applied to x_1⊗…,
/// where f has degree `deg` and `passed` holds the degrees of x_1, …, x_r.
pub fn koszul_sign(deg: usize, passed: &[usize]) -> usize {
    deg * passed.iter().sum::<usize>()
}

/// A homogeneous linear map between graded spaces given by one matrix per
/// source degree; `degree` is added to the source degree.
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub field: Field,
    pub degree: i64,
    pub blocks: BTreeMap<i64, DegreeMatrix>,
}

impl GradedMap {
    pub fn compose(&self, inner: &GradedMap) -> GradedMap {
        let mut blocks = BTreeMap::new();
        for (&p, m) in &inner.blocks {
            if let Some(outer) = self.blocks.get(&(p + inner.degree)) {
                blocks.insert(p, outer.compose(m));
            }
        }
        GradedMap { field: self.field, degree: self.degree + inner.degree, blocks }
    }

    /// f^#(λ) = (−1)^{deg f · deg λ} λ∘f. The dual of V_p sits in degree −p.
    pub fn dual(&self) -> GradedMap {
        let mut blocks = BTreeMap::new();
        for (&p, m) in &self.blocks {
            let target = p + self.degree;
            let t = transpose(m);
            let odd = (self.degree * target).rem_euclid(2) == 1;
            let t = if odd { negate(&t) } else { t };
            blocks.insert(-target, t);
        }
        GradedMap { field: self.field, degree: self.degree, blocks }
    }

    pub fn scale(&self, c: &Scalar) -> GradedMap {
        let blocks = self
            .blocks
            .iter()
            .map(|(&p, m)| (p, DegreeMatrix { rows: m.rows, columns: m.columns.iter().map(|v| v.scale(c)).collect() }))
            .collect();
        GradedMap { field: self.field, degree: self.degree, blocks }
    }
}

pub fn transpose(m: &DegreeMatrix) -> DegreeMatrix {
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.rows];
    for (k, c) in m.columns.iter().enumerate() {
        for (r, x) in c.iter() {
            cols[*r].push((k, x.clone()));
        }
    }
    DegreeMatrix { rows: m.columns.len(), columns: cols.into_iter().map(SparseVec::from_sorted).collect() }
}

fn negate(m: &DegreeMatrix) -> DegreeMatrix {
    DegreeMatrix { rows: m.rows, columns: m.columns.iter().map(|v| v.neg()).collect() }
}
