use std::collections::BTreeMap;

use serde::Serialize;

use super::JFamily;
use crate::linalg::{Scalar, SparseVec};
use crate::tensoralg::{Choice, Factor, Factorizer, Label};
use crate::Error;

/// A basis element of J: the canonical basis vector `index` of (J_i)_degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct JBasis {
    pub i: usize,
    pub degree: usize,
    pub index: usize,
}

/// An element of J^{⊗k} in the basis of tensors of J basis elements.
pub type Tensor = BTreeMap<Vec<JBasis>, Scalar>;

pub fn tensor_add(t: &mut Tensor, key: Vec<JBasis>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(x) => {
            *x = x.add(&c);
            if x.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c);
        }
    }
}

/// A linear map J_source → J_{t_1} ⊗ … ⊗ J_{t_k}, stored on the basis of J_source.
#[derive(Clone, Debug)]
pub struct TensorMap {
    pub source: usize,
    pub targets: Vec<usize>,
    /// Keyed by (Adams degree, basis index) of the source element.
    pub images: BTreeMap<(usize, usize), Tensor>,
}

impl TensorMap {
    pub fn image(&self, degree: usize, index: usize) -> Option<&Tensor> {
        self.images.get(&(degree, index))
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(|t| t.is_empty())
    }
}

fn label_to_basis(label: &[Choice], targets: &[usize]) -> Vec<JBasis> {
    label
        .iter()
        .zip(targets)
        .map(|(c, &i)| {
            let (degree, index) = c.basis();
            JBasis { i, degree, index }
        })
        .collect()
}

/// Expansion of a vector over a product of J's, as a tensor.
fn expand(fac: &Factorizer, v: &SparseVec, targets: &[usize], skip: usize) -> Result<Tensor, Error> {
    let mut t = Tensor::new();
    for (col, c) in fac.factor_indices(v)? {
        let label: &Label = &fac.labels()[col];
        tensor_add(&mut t, label_to_basis(&label[skip..], targets), c);
    }
    Ok(t)
}

fn check_range(j: &JFamily, needed: usize) -> Result<(), Error> {
    if needed > j.hmax() {
        return Err(Error::Internal(format!("J_{needed} is beyond the computed range H = {}", j.hmax())));
    }
    Ok(())
}

/// ι_{i,i'}: J_{i+i'} → J_i ⊗ J_{i'}.
///
/// With i or i' even this is the factorization through J_i·J_{i'}; with both
/// odd, J_{i+i'} is factored through T(V)·J_i·J_{i'} and only the terms with
/// empty leading word are kept.
pub fn iota2(j: &JFamily, i: usize, i2: usize) -> Result<TensorMap, Error> {
    let src = i + i2;
    check_range(j, src)?;
    let space = j.space();
    let targets = vec![i, i2];
    let both_odd = i % 2 == 1 && i2 % 2 == 1;
    let mut images = BTreeMap::new();
    for n in j.get(src).degrees() {
        let basis = j.get(src).part(n).basis();
        if both_odd {
            let fac = Factorizer::new(space, &[Factor::Free, Factor::Space(j.get(i)), Factor::Space(j.get(i2))], n)?;
            for (idx, w) in basis.iter().enumerate() {
                let mut t = Tensor::new();
                for (col, c) in fac.factor_indices(w)? {
                    let label = &fac.labels()[col];
                    if label[0].word().is_empty() {
                        tensor_add(&mut t, label_to_basis(&label[1..], &targets), c);
                    }
                }
                images.insert((n, idx), t);
            }
        } else {
            let fac = Factorizer::new(space, &[Factor::Space(j.get(i)), Factor::Space(j.get(i2))], n)?;
            for (idx, w) in basis.iter().enumerate() {
                images.insert((n, idx), expand(&fac, w, &targets, 0)?);
            }
        }
    }
    Ok(TensorMap { source: src, targets, images })
}

/// ι_{i_1,…,i_n} for odd i_l and n ≥ 3: J_{Σi_l+2-n} → J_{i_1} ⊗ … ⊗ J_{i_n}.
///
/// The source is factored through T(V)·J_{i_1-1}·…·J_{i_n-1}; the part whose
/// leading word has length n is the N = n summand, which is then expanded in
/// J_{i_1}·…·J_{i_n}.
pub fn iota_multi(j: &JFamily, tuple: &[usize]) -> Result<TensorMap, Error> {
    let n_f = tuple.len();
    if n_f < 3 || tuple.iter().any(|i| i % 2 == 0) {
        return Err(Error::Internal(format!("iota_multi needs at least three odd indices, got {tuple:?}")));
    }
    let src = tuple.iter().sum::<usize>() + 2 - n_f;
    check_range(j, src)?;
    let space = j.space();
    let mut images = BTreeMap::new();
    for n in j.get(src).degrees() {
        let mut lower: Vec<Factor> = vec![Factor::Free];
        lower.extend(tuple.iter().map(|&i| Factor::Space(j.get(i - 1))));
        let fac = Factorizer::new(space, &lower, n)?;
        let upper: Vec<Factor> = tuple.iter().map(|&i| Factor::Space(j.get(i))).collect();
        let top = Factorizer::new(space, &upper, n)?;
        for (idx, w) in j.get(src).part(n).basis().iter().enumerate() {
            let terms: Vec<(Scalar, &SparseVec)> = fac
                .factor_indices(w)?
                .into_iter()
                .filter(|(col, _)| fac.labels()[*col][0].word().len() == n_f)
                .map(|(col, c)| (c, fac.column(col)))
                .collect();
            let component = SparseVec::combination(terms);
            let t = expand(&top, &component, tuple, 0).map_err(|_| {
                Error::Internal(format!("ι_{tuple:?}: the N = {n_f} component of a degree-{n} element is not in the product"))
            })?;
            images.insert((n, idx), t);
        }
    }
    Ok(TensorMap { source: src, targets: tuple.to_vec(), images })
}
