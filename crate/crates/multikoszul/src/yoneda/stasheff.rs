use std::collections::HashMap;

use serde::Serialize;

use super::ainf::{AInfStructure, Dual};
use super::sign::koszul_sign;
use crate::jspaces::{tensor_add, JBasis, Tensor};
use crate::linalg::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Σ (−1)^{rs+t} (id^r ⊗ Δ_s ⊗ id^t) ∘ Δ_{r+1+t} = 0.
    Coalgebra,
    /// Σ_{r=0}^{n−1} (−1)^r (id^r ⊗ Δ_2 ⊗ id^{n−r−1}) Δ_n = (id ⊗ Δ_n) Δ_2 − (−1)^n (Δ_n ⊗ id) Δ_2.
    Reduced,
    /// Σ (−1)^{r+st} m_{r+1+t} ∘ (id^r ⊗ m_s ⊗ id^t) = 0.
    Algebra,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub side: Side,
    pub arity: usize,
    pub adams: usize,
    /// The basis element (coalgebra) or the tuple of dual basis elements (algebra).
    pub source: Vec<JBasis>,
    /// The offending entry of the result.
    pub entry: Vec<JBasis>,
    pub value: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StasheffReport {
    pub max_arity: usize,
    /// Number of (identity, source) pairs evaluated, per side.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl StasheffReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn scaled(t: &Tensor, c: &Scalar) -> Vec<(Vec<JBasis>, Scalar)> {
    t.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect()
}

fn record(out: &mut Vec<Violation>, side: Side, arity: usize, source: Vec<JBasis>, adams: usize, t: &Tensor) {
    if let Some((entry, value)) = t.iter().next() {
        out.push(Violation { side, arity, adams, source, entry: entry.clone(), value: value.to_string() });
    }
}

impl AInfStructure {
    /// Σ_{r+s+t=n} (−1)^{rs+t} (id^r ⊗ Δ_s ⊗ id^t) Δ_{r+1+t}(b).
    pub fn coalgebra_identity(&self, n: usize, b: &JBasis) -> Tensor {
        let mut sum = Tensor::new();
        for s in 2..n {
            let m = n - s + 1;
            let Some(outer) = self.coproduct(m, b) else { continue };
            for r in 0..m {
                let t = m - 1 - r;
                let sign = r * s + t;
                let one = self.field.one().signed(sign);
                for (k, c) in scaled(&self.apply_at(s, r, outer), &one) {
                    tensor_add(&mut sum, k, c);
                }
            }
        }
        sum
    }

    /// Left side minus right side of the reduced identity in arity n + 1.
    pub fn reduced_identity(&self, n: usize, b: &JBasis) -> Tensor {
        let mut sum = Tensor::new();
        let one = self.field.one();
        if let Some(dn) = self.coproduct(n, b) {
            for r in 0..n {
                for (k, c) in scaled(&self.apply_at(2, r, dn), &one.signed(r)) {
                    tensor_add(&mut sum, k, c);
                }
            }
        }
        if let Some(d2) = self.coproduct(2, b) {
            for (k, c) in scaled(&self.apply_at(n, 1, d2), &one.neg()) {
                tensor_add(&mut sum, k, c);
            }
            for (k, c) in scaled(&self.apply_at(n, 0, d2), &one.signed(n)) {
                tensor_add(&mut sum, k, c);
            }
        }
        sum
    }

    /// Σ_{r+s+t=n} (−1)^{r+st} m_{r+1+t}(id^r ⊗ m_s ⊗ id^t)(x).
    pub fn algebra_identity(&self, tables: &HashMap<usize, HashMap<Vec<JBasis>, Dual>>, x: &[JBasis]) -> Dual {
        let n = x.len();
        let mut sum = Dual::new();
        for s in 2..n {
            let m = n - s + 1;
            let (Some(inner_t), Some(outer_t)) = (tables.get(&s), tables.get(&m)) else { continue };
            for r in 0..m {
                let t = m - 1 - r;
                let Some(inner) = inner_t.get(&x[r..r + s]) else { continue };
                let passed: Vec<usize> = x[..r].iter().map(|b| b.i).collect();
                let sign = r + s * t + koszul_sign(s, &passed);
                for (y, c) in inner {
                    let mut key = x[..r].to_vec();
                    key.push(*y);
                    key.extend_from_slice(&x[r + s..]);
                    let Some(outer) = outer_t.get(&key) else { continue };
                    for (z, c2) in outer {
                        let v = c.mul(c2).signed(sign);
                        let e = sum.entry(*z).or_insert_with(|| self.field.zero());
                        *e = e.add(&v);
                    }
                }
            }
        }
        sum.retain(|_, v| !v.is_zero());
        sum
    }

    /// Tuples of positive-degree basis elements of length n whose algebra
    /// identity lands in the computed range.
    fn input_tuples(&self, n: usize) -> Vec<Vec<JBasis>> {
        let pos: Vec<JBasis> = self.basis.iter().filter(|b| b.i > 0).copied().collect();
        let max_hom = self.hmax + n - 3;
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<JBasis>, usize, usize)> = vec![(Vec::new(), 0, 0)];
        while let Some((prefix, hom, adams)) = stack.pop() {
            if prefix.len() == n {
                out.push(prefix);
                continue;
            }
            let left = n - prefix.len() - 1;
            for b in &pos {
                if hom + b.i + left <= max_hom && adams + b.degree + left <= self.bound {
                    let mut p = prefix.clone();
                    p.push(*b);
                    stack.push((p, hom + b.i, adams + b.degree));
                }
            }
        }
        out.sort();
        out
    }

    /// Coalgebra identities for arities 3..=n_max+1, the reduced identities for
    /// 3 ≤ n ≤ n_max and the dual algebra identities, on every computed basis
    /// element and input tuple.
    pub fn check_stasheff(&self) -> StasheffReport {
        let mut report = StasheffReport { max_arity: self.n_max + 1, ..Default::default() };
        for n in 3..=self.n_max + 1 {
            for b in &self.basis {
                report.checked += 1;
                record(&mut report.violations, Side::Coalgebra, n, vec![*b], b.degree, &self.coalgebra_identity(n, b));
            }
        }
        for n in 3..=self.n_max {
            for b in &self.basis {
                report.checked += 1;
                record(&mut report.violations, Side::Reduced, n + 1, vec![*b], b.degree, &self.reduced_identity(n, b));
            }
        }
        let tables: HashMap<usize, HashMap<Vec<JBasis>, Dual>> =
            (2..=self.n_max).map(|n| (n, self.products(n))).collect();
        for n in 3..=self.n_max + 1 {
            for x in self.input_tuples(n) {
                report.checked += 1;
                let r = self.algebra_identity(&tables, &x);
                if let Some((z, v)) = r.iter().next() {
                    let adams = x.iter().map(|b| b.degree).sum();
                    report.violations.push(Violation {
                        side: Side::Algebra,
                        arity: n,
                        adams,
                        source: x,
                        entry: vec![*z],
                        value: v.to_string(),
                    });
                }
            }
        }
        report
    }
}
