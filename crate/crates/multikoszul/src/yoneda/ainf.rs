use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::sign::{c_sign, koszul_sign};
use crate::jspaces::{iota2, iota_multi, tensor_add, JBasis, JFamily, Tensor};
use crate::linalg::{Field, Scalar};
use crate::Error;

/// An element of J^#, in the basis dual to the J basis.
pub type Dual = BTreeMap<JBasis, Scalar>;

/// The coaugmented A∞-coalgebra J and the dual A∞-algebra J^#.
#[derive(Clone, Debug)]
pub struct AInfStructure {
    pub field: Field,
    pub hmax: usize,
    pub bound: usize,
    pub n_max: usize,
    /// Δ_n on every basis element of J_0, …, J_H, for 2 ≤ n ≤ n_max.
    pub coproducts: BTreeMap<usize, BTreeMap<JBasis, Tensor>>,
    pub basis: Vec<JBasis>,
}

pub fn j_basis(j: &JFamily) -> Vec<JBasis> {
    let mut out = Vec::new();
    for i in 0..=j.hmax() {
        for degree in j.get(i).degrees() {
            for index in 0..j.dim(i, degree) {
                out.push(JBasis { i, degree, index });
            }
        }
    }
    out
}

/// Odd tuples (i_1, …, i_n) with Σ i_l + 2 − n = i.
pub fn odd_tuples(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, sum: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let mut x = 1;
        while x + (n - 1) <= sum {
            prefix.push(x);
            rec(n - 1, sum - x, prefix, out);
            prefix.pop();
            x += 2;
        }
    }
    let mut out = Vec::new();
    if i + n >= 2 {
        rec(n, i + n - 2, &mut Vec::new(), &mut out);
    }
    out
}

fn add_map(target: &mut BTreeMap<JBasis, Tensor>, source: usize, images: &BTreeMap<(usize, usize), Tensor>) {
    for (&(degree, index), t) in images {
        let e = target.entry(JBasis { i: source, degree, index }).or_default();
        for (k, c) in t {
            tensor_add(e, k.clone(), c.clone());
        }
    }
}

/// Δ_n restricted to the odd tuples whose factors satisfy `keep`.
pub(crate) fn higher_coproduct(j: &JFamily, n: usize, keep: impl Fn(&[usize]) -> bool + Sync) -> Result<BTreeMap<JBasis, Tensor>, Error> {
    let tuples: Vec<Vec<usize>> = (0..=j.hmax()).flat_map(|i| odd_tuples(n, i)).filter(|t| keep(t)).collect();
    let maps = tuples.par_iter().map(|t| iota_multi(j, t)).collect::<Result<Vec<_>, Error>>()?;
    let mut out = BTreeMap::new();
    for m in maps {
        add_map(&mut out, m.source, &m.images);
    }
    Ok(out)
}

/// Δ_2 = Σ_l ι_{l,i−l} and Δ_n = Σ ι_{i_1,…,i_n} over odd tuples, 3 ≤ n ≤ n_max.
pub fn ainf_coproducts(j: &JFamily, n_max: usize) -> Result<AInfStructure, Error> {
    let basis = j_basis(j);
    let mut coproducts = BTreeMap::new();
    let pairs: Vec<(usize, usize)> = (0..=j.hmax()).flat_map(|i| (0..=i).map(move |l| (l, i - l))).collect();
    let maps = pairs.par_iter().map(|&(l, r)| iota2(j, l, r)).collect::<Result<Vec<_>, Error>>()?;
    let mut delta2: BTreeMap<JBasis, Tensor> = basis.iter().map(|b| (*b, Tensor::new())).collect();
    for m in maps {
        add_map(&mut delta2, m.source, &m.images);
    }
    coproducts.insert(2, delta2);
    for n in 3..=n_max {
        let mut d: BTreeMap<JBasis, Tensor> = basis.iter().map(|b| (*b, Tensor::new())).collect();
        for (b, t) in higher_coproduct(j, n, |_| true)? {
            d.insert(b, t);
        }
        coproducts.insert(n, d);
    }
    Ok(AInfStructure { field: j.space().field(), hmax: j.hmax(), bound: j.bound(), n_max, coproducts, basis })
}

/// Sign exponent relating m_n to the transpose of Δ_n on factors of degrees `degrees`:
/// the c-map sign plus the graded-dual sign of a map of degree n − 2.
pub(crate) fn dual_sign(degrees: &[usize]) -> usize {
    let n = degrees.len();
    c_sign(degrees) + (n + 2) * degrees.iter().sum::<usize>()
}

impl AInfStructure {
    pub fn coproduct(&self, n: usize, b: &JBasis) -> Option<&Tensor> {
        self.coproducts.get(&n).and_then(|m| m.get(b))
    }

    /// (id^r ⊗ Δ_s ⊗ id^t) applied to a tensor, Koszul sign included.
    pub fn apply_at(&self, s: usize, r: usize, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        let Some(delta) = self.coproducts.get(&s) else { return out };
        for (key, c) in t {
            let Some(img) = delta.get(&key[r]) else { continue };
            let passed: Vec<usize> = key[..r].iter().map(|b| b.i).collect();
            let sign = koszul_sign(s, &passed);
            for (k2, c2) in img {
                let mut nk = key[..r].to_vec();
                nk.extend_from_slice(k2);
                nk.extend_from_slice(&key[r + 1..]);
                tensor_add(&mut out, nk, c.mul(c2).signed(sign));
            }
        }
        out
    }

    /// m_n as a table from input tuples of dual basis elements to J^#.
    pub fn products(&self, n: usize) -> HashMap<Vec<JBasis>, Dual> {
        let mut out: HashMap<Vec<JBasis>, Dual> = HashMap::new();
        let Some(delta) = self.coproducts.get(&n) else { return out };
        for (b, t) in delta {
            for (key, c) in t {
                let degrees: Vec<usize> = key.iter().map(|x| x.i).collect();
                let v = c.signed(dual_sign(&degrees));
                let e = out.entry(key.clone()).or_default();
                let x = e.entry(*b).or_insert_with(|| self.field.zero());
                *x = x.add(&v);
                if x.is_zero() {
                    e.remove(b);
                }
            }
        }
        out.retain(|_, v| !v.is_empty());
        out
    }

    /// m_n(ξ_1, …, ξ_n) on dual basis elements.
    pub fn product(&self, inputs: &[JBasis]) -> Dual {
        let n = inputs.len();
        let mut out = Dual::new();
        let Some(delta) = self.coproducts.get(&n) else { return out };
        let degrees: Vec<usize> = inputs.iter().map(|x| x.i).collect();
        let sign = dual_sign(&degrees);
        let i = degrees.iter().sum::<usize>() + 2 - n;
        let degree: usize = inputs.iter().map(|x| x.degree).sum();
        for (b, t) in delta.range(JBasis { i, degree, index: 0 }..JBasis { i, degree: degree + 1, index: 0 }) {
            if let Some(c) = t.get(inputs) {
                out.insert(*b, c.signed(sign));
            }
        }
        out
    }

    /// (ε ⊗ id)Δ_2 = id = (id ⊗ ε)Δ_2 and ε kills the other legs: returns the
    /// basis elements where the counit law fails.
    pub fn counit_failures(&self) -> Vec<JBasis> {
        let one = JBasis { i: 0, degree: 0, index: 0 };
        let delta = &self.coproducts[&2];
        self.basis
            .iter()
            .filter(|b| {
                let t = &delta[b];
                let left = t.get(&vec![one, **b]);
                let right = t.get(&vec![**b, one]);
                !(left.is_some_and(|c| c.is_one()) && right.is_some_and(|c| c.is_one()))
            })
            .copied()
            .collect()
    }

    /// Δ_n(1) = 0 for n ≠ 2 and Δ_2(1) = 1 ⊗ 1.
    pub fn coaugmentation_ok(&self) -> bool {
        let one = JBasis { i: 0, degree: 0, index: 0 };
        self.coproducts.iter().all(|(&n, d)| {
            let t = d.get(&one).cloned().unwrap_or_default();
            if n == 2 {
                t.len() == 1 && t.get(&vec![one, one]).is_some_and(|c| c.is_one())
            } else {
                t.is_empty()
            }
        })
    }

    /// Every Δ_n has homological degree n − 2 and Adams degree 0, and for
    /// n ≥ 3 lands in odd factors.
    pub fn bidegree_ok(&self) -> bool {
        self.coproducts.iter().all(|(&n, d)| {
            d.iter().all(|(b, t)| {
                t.keys().all(|k| {
                    let hom: usize = k.iter().map(|x| x.i).sum();
                    let adams: usize = k.iter().map(|x| x.degree).sum();
                    k.len() == n && hom + 2 == b.i + n && adams == b.degree && (n == 2 || k.iter().all(|x| x.i % 2 == 1))
                })
            })
        })
    }
}
