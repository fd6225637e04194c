use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::sign::c_sign;
use crate::jspaces::{iota2, JBasis, JFamily};
use crate::komplex::DegreeMatrix;
use crate::linalg::{rank, Field, Scalar, SparseVec};
use crate::presentation::BigradedTable;
use crate::Error;

/// m_2 : (J_i^#)_n ⊗ (J_{i'}^#)_{n'} → (J_{i+i'}^#)_{n+n'} in dual bases.
///
/// Column `a · dim (J_{i'})_{n'} + b` is the product ξ_a · ξ_b; rows index the
/// dual basis of (J_{i+i'})_{n+n'}.
#[derive(Clone, Debug)]
pub struct ProductTable {
    pub field: Field,
    pub hmax: usize,
    pub bound: usize,
    pub blocks: BTreeMap<(usize, usize), BTreeMap<(usize, usize), DegreeMatrix>>,
    pub dims: BigradedTable,
    /// Set when the input was not verified multi-Koszul.
    pub formal: bool,
}

pub fn yoneda_products(j: &JFamily, i_max: usize) -> Result<ProductTable, Error> {
    let i_max = i_max.min(j.hmax());
    let pairs: Vec<(usize, usize)> = (0..=i_max).flat_map(|s| (0..=s).map(move |i| (i, s - i))).collect();
    let blocks = pairs
        .par_iter()
        .map(|&(i, i2)| {
            let iota = iota2(j, i, i2)?;
            let sign = c_sign(&[i, i2]);
            let mut mats: BTreeMap<(usize, usize), DegreeMatrix> = BTreeMap::new();
            for n in j.get(i).degrees() {
                for n2 in j.get(i2).degrees() {
                    if n + n2 > j.bound() {
                        continue;
                    }
                    let (d1, d2) = (j.dim(i, n), j.dim(i2, n2));
                    let mut cols = vec![Vec::new(); d1 * d2];
                    for idx in 0..j.dim(i + i2, n + n2) {
                        let Some(t) = iota.image(n + n2, idx) else { continue };
                        for (k, c) in t {
                            if k[0].degree == n && k[1].degree == n2 {
                                cols[k[0].index * d2 + k[1].index].push((idx, c.signed(sign)));
                            }
                        }
                    }
                    let columns = cols.into_iter().map(SparseVec::from_pairs).collect();
                    mats.insert((n, n2), DegreeMatrix { rows: j.dim(i + i2, n + n2), columns });
                }
            }
            Ok(((i, i2), mats))
        })
        .collect::<Result<BTreeMap<_, _>, Error>>()?;
    Ok(ProductTable { field: j.space().field(), hmax: i_max, bound: j.bound(), blocks, dims: j.table(), formal: false })
}

#[derive(Clone, Debug, Serialize)]
pub struct K2Failure {
    pub i: usize,
    pub adams: usize,
    pub span: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct K2Report {
    pub i_max: usize,
    pub failures: Vec<K2Failure>,
}

impl K2Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl ProductTable {
    pub fn block(&self, i: usize, i2: usize, n: usize, n2: usize) -> Option<&DegreeMatrix> {
        self.blocks.get(&(i, i2)).and_then(|b| b.get(&(n, n2)))
    }

    /// m_2(ξ ⊗ ξ') for dual basis elements, as coordinates in the dual basis of J_{i+i'}.
    pub fn product(&self, x: &JBasis, y: &JBasis) -> Option<SparseVec> {
        let m = self.block(x.i, y.i, x.degree, y.degree)?;
        m.columns.get(x.index * self.dim(y.i, y.degree) + y.index).cloned()
    }

    pub fn dim(&self, i: usize, n: usize) -> usize {
        self.dims.get(i, n)
    }

    /// Every block has the shape of a map of bidegree (0, 0).
    pub fn bidegree_ok(&self) -> bool {
        self.blocks.iter().all(|(&(i, i2), mats)| {
            mats.iter().all(|(&(n, n2), m)| m.rows == self.dim(i + i2, n + n2) && m.columns.len() == self.dim(i, n) * self.dim(i2, n2))
        })
    }

    /// Products with Ext^0 on either side are the identity.
    pub fn unit_ok(&self) -> bool {
        (0..=self.hmax).all(|i| {
            (0..=self.bound).all(|n| {
                let d = self.dim(i, n);
                let id = |m: Option<&DegreeMatrix>| {
                    d == 0 || m.is_some_and(|m| m.columns.iter().enumerate().all(|(k, v)| *v == SparseVec::unit(k, self.field.one())))
                };
                id(self.block(0, i, 0, n)) && id(self.block(i, 0, n, 0))
            })
        })
    }

    /// (ξ ξ') ξ'' = ξ (ξ' ξ'') on every basis triple inside the computed range.
    pub fn associativity_failures(&self) -> Vec<(JBasis, JBasis, JBasis)> {
        let mut basis = Vec::new();
        for i in 0..=self.hmax {
            for n in 0..=self.bound {
                basis.extend((0..self.dim(i, n)).map(|index| JBasis { i, degree: n, index }));
            }
        }
        let mut bad = Vec::new();
        for x in &basis {
            for y in &basis {
                if x.i + y.i > self.hmax || x.degree + y.degree > self.bound {
                    continue;
                }
                for z in &basis {
                    if x.i + y.i + z.i > self.hmax || x.degree + y.degree + z.degree > self.bound {
                        continue;
                    }
                    let left = self.times_basis(&self.product(x, y).unwrap_or_default(), x.i + y.i, x.degree + y.degree, z, true);
                    let right = self.times_basis(&self.product(y, z).unwrap_or_default(), y.i + z.i, y.degree + z.degree, x, false);
                    if left != right {
                        bad.push((*x, *y, *z));
                    }
                }
            }
        }
        bad
    }

    /// v · ξ (or ξ · v when `v_left` is false) for v ∈ (J_i^#)_n.
    fn times_basis(&self, v: &SparseVec, i: usize, n: usize, z: &JBasis, v_left: bool) -> SparseVec {
        let terms: Vec<(Scalar, SparseVec)> = v
            .iter()
            .filter_map(|(k, c)| {
                let y = JBasis { i, degree: n, index: *k };
                let p = if v_left { self.product(&y, z) } else { self.product(z, &y) };
                p.map(|p| (c.clone(), p))
            })
            .collect();
        SparseVec::combination(terms.iter().map(|(c, p)| (c.clone(), p)))
    }

    /// Ext^i is spanned by Ext^1 · Ext^{i−1} + Ext^2 · Ext^{i−2}, for 3 ≤ i ≤ i_max.
    pub fn k2_check(&self, i_max: usize) -> K2Report {
        let i_max = i_max.min(self.hmax);
        let mut report = K2Report { i_max, failures: Vec::new() };
        for i in 3..=i_max {
            for n in 0..=self.bound {
                let dim = self.dim(i, n);
                if dim == 0 {
                    continue;
                }
                let mut cols = Vec::new();
                for k in [1, 2] {
                    if let Some(mats) = self.blocks.get(&(k, i - k)) {
                        for (&(a, b), m) in mats {
                            if a + b == n {
                                cols.extend(m.columns.iter().cloned());
                            }
                        }
                    }
                }
                let span = rank(dim, self.field, &cols);
                if span != dim {
                    report.failures.push(K2Failure { i, adams: n, span, dim });
                }
            }
        }
        report
    }
}
