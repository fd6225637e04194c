use std::collections::HashMap;

use rayon::prelude::*;

use crate::linalg::{rank, SparseVec};
use crate::presentation::{BigradedTable, TruncatedAlgebra};
use crate::tensoralg::WordSpace;
use crate::Error;

/// Basis of (Ā^{⊗i})_n: tuples of (degree, normal index) with positive degrees.
fn bar_basis(a: &TruncatedAlgebra, i: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    if i == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=n {
        if a.dim(first) == 0 || (i == 1 && first != n) {
            continue;
        }
        let rest = bar_basis(a, i - 1, n - first);
        for u in 0..a.dim(first) {
            for r in &rest {
                let mut t = Vec::with_capacity(i);
                t.push((first, u));
                t.extend_from_slice(r);
                out.push(t);
            }
        }
    }
    out
}

/// Σ_{j=1}^{i-1} (−1)^j x_1|…|x_j x_{j+1}|…|x_i on (Ā^{⊗i})_n.
fn bar_differential(a: &TruncatedAlgebra, src: &[Vec<(usize, usize)>], dst: &[Vec<(usize, usize)>]) -> Vec<SparseVec> {
    let index: HashMap<&[(usize, usize)], usize> = dst.iter().enumerate().map(|(k, t)| (t.as_slice(), k)).collect();
    src.par_iter()
        .map(|t| {
            let mut out = Vec::new();
            for j in 1..t.len() {
                let (p, u) = t[j - 1];
                let (q, v) = t[j];
                let prod = a.word_times(&a.normal_words(p)[u], q, &SparseVec::unit(v, a.one()));
                let mut key = t.clone();
                key.remove(j);
                for (x, c) in prod.iter() {
                    key[j - 1] = (p + q, *x);
                    out.push((index[key.as_slice()], c.signed(j)));
                }
            }
            SparseVec::from_pairs(out)
        })
        .collect()
}

/// Tor_i(k, k)_n from the normalized bar complex, for i ≤ h and n up to the
/// algebra's bound.
pub fn bar_tor_oracle(a: &TruncatedAlgebra, h: usize) -> Result<BigradedTable, Error> {
    let d = a.bound();
    let field = a.space().field();
    let cap = a.space().cap();
    let mut t = BigradedTable::new(h, d);
    for n in 0..=d {
        let bases: Vec<Vec<Vec<(usize, usize)>>> = (0..=(h + 1).min(n.max(1))).map(|i| bar_basis(a, i, n)).collect();
        if let Some(big) = bases.iter().find(|b| b.len() > cap) {
            return Err(cap_error(a.space(), big.len(), n));
        }
        let ranks: Vec<usize> = (0..bases.len())
            .map(|i| if i < 2 { 0 } else { rank(bases[i - 1].len(), field, &bar_differential(a, &bases[i], &bases[i - 1])) })
            .collect();
        for i in 0..=h.min(bases.len() - 1) {
            let up = ranks.get(i + 1).copied().unwrap_or(0);
            t.set(i, n, bases[i].len() - ranks[i] - up);
        }
    }
    Ok(t)
}

fn cap_error(space: &WordSpace, size: usize, n: usize) -> Error {
    Error::Cap(format!("bar complex in degree {n} has {size} basis elements, above the cap {}", space.cap()))
}
