use serde::Serialize;

use super::ainf::{higher_coproduct, AInfStructure};
use crate::jspaces::{JBasis, JFamily, Tensor};
use crate::komplex::{build_complex, BiElement, BiTerm, ModuleForm};
use crate::linalg::SparseVec;
use crate::presentation::TruncatedAlgebra;
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct TwistedReport {
    pub equal: bool,
    /// Generators of J whose images differ: (i, Adams degree, index).
    pub mismatches: Vec<(usize, usize, usize)>,
    /// Number of generator images compared.
    pub compared: usize,
}

/// τ(b_2)⋯τ(b_n) ∈ A, with τ the projection onto J_1 = V followed by V ⊆ A.
fn tau_product(a: &TruncatedAlgebra, j: &JFamily, legs: &[JBasis]) -> Option<(usize, SparseVec)> {
    let mut deg = 0;
    let mut x = SparseVec::unit(0, a.one());
    for b in legs {
        if b.i != 1 {
            return None;
        }
        let v = &j.get(1).part(b.degree).basis()[b.index];
        let y = a.project(b.degree, v);
        x = a.mul(deg, &x, b.degree, &y);
        deg += b.degree;
    }
    Some((deg, x))
}

fn add_tensor(out: &mut BiElement, a: &TruncatedAlgebra, j: &JFamily, t: &Tensor) {
    for (key, c) in t {
        let Some((deg, x)) = tau_product(a, j, &key[1..]) else { continue };
        for (k, cx) in x.iter() {
            let term = BiTerm { left: (0, 0), target: key[0], right: (deg, *k) };
            let e = out.entry(term).or_insert_with(|| a.space().field().zero());
            *e = e.add(&c.mul(cx));
        }
    }
    out.retain(|_, v| !v.is_zero());
}

/// d_τ = Σ_n (id ⊗ μ^{(n)})(id ⊗ τ^{⊗(n−1)} ⊗ id)(Δ_n ⊗ id) on the generators
/// b ⊗ 1 of J ⊗ A, compared with the right multi-Koszul differential.
///
/// Arities above the structure's n_max are computed on demand, restricted to
/// the tuples (i − 1, 1, …, 1) that τ does not kill.
pub fn twisted_complex_check(s: &AInfStructure, a: &TruncatedAlgebra, j: &JFamily) -> Result<TwistedReport, Error> {
    let right = build_complex(a, j, ModuleForm::Right)?;
    let mut extra = Vec::new();
    for n in s.n_max + 1..=a.bound() + 1 {
        extra.push(higher_coproduct(j, n, |t| t[1..].iter().all(|&x| x == 1))?);
    }
    let mut report = TwistedReport { equal: true, mismatches: Vec::new(), compared: 0 };
    for level in right.levels.iter().skip(1) {
        for (&(degree, index), image) in &level.images {
            let b = JBasis { i: level.i, degree, index };
            let mut d = BiElement::new();
            for n in 2..=s.n_max {
                if let Some(t) = s.coproduct(n, &b) {
                    add_tensor(&mut d, a, j, t);
                }
            }
            for m in &extra {
                if let Some(t) = m.get(&b) {
                    add_tensor(&mut d, a, j, t);
                }
            }
            report.compared += 1;
            if &d != image {
                report.equal = false;
                report.mismatches.push((b.i, degree, index));
            }
        }
    }
    Ok(report)
}
