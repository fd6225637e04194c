use std::collections::BTreeMap;

use super::family::compositions;
use super::JFamily;
use crate::linalg::{SparseVec, SpanSolver, Subspace};
use crate::tensoralg::{product_columns, Factor, GradedSubspace};
use crate::Error;

/// Which bigraded space to split by special degree N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    /// ⁱT: summands ⋂_l V^{(l)}·R^{(i)}·V^{(N-l)}.
    T(usize),
    /// ʲT̃: summands ⋂_l V^{(l)}·J_{2j+1}·V^{(N-l)}.
    TTilde(usize),
    /// The decomposition attached to a tuple j̄ = (j_1, …, j_n), n ≥ 2: summands,
    /// for N ≥ 2, ⋂_m̄ V^{(m_1)}·J_{2j'_1}·…·J_{2j'_n}·V^{(m_{n+1})} with j_l = 2j'_l + r_l.
    Tuple(Vec<usize>),
}

/// The summands of one Adams degree and a solver splitting their direct sum.
#[derive(Debug)]
pub struct SpecialDecomposition {
    kind: SpecialKind,
    degree: usize,
    summands: BTreeMap<usize, Subspace>,
    owners: Vec<(usize, usize)>,
    solver: SpanSolver,
}

impl SpecialDecomposition {
    pub fn kind(&self) -> &SpecialKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero summands keyed by N.
    pub fn summands(&self) -> &BTreeMap<usize, Subspace> {
        &self.summands
    }

    pub fn total_dim(&self) -> usize {
        self.owners.len()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.solver.residual(v).is_zero()
    }

    /// The N-components of ω; absent keys are zero.
    pub fn decompose(&self, v: &SparseVec) -> Result<BTreeMap<usize, SparseVec>, Error> {
        let c = self.solver.solve(v).map_err(|_| {
            Error::Internal(format!("element of degree {} is outside the {:?} decomposition", self.degree, self.kind))
        })?;
        let mut parts: BTreeMap<usize, Vec<(crate::linalg::Scalar, &SparseVec)>> = BTreeMap::new();
        for (k, a) in c.iter() {
            let (big_n, idx) = self.owners[*k];
            parts.entry(big_n).or_default().push((a.clone(), &self.summands[&big_n].basis()[idx]));
        }
        Ok(parts
            .into_iter()
            .map(|(big_n, terms)| (big_n, SparseVec::combination(terms)))
            .filter(|(_, v)| !v.is_zero())
            .collect())
    }
}

pub fn special_summands(j: &JFamily, kind: &SpecialKind, n: usize) -> Result<SpecialDecomposition, Error> {
    let space = j.space();
    let field = space.field();
    let ambient = space.ambient(n);
    let ming = space.gens().min_degree().unwrap_or(usize::MAX);
    let max_n = if ming == 0 || ming == usize::MAX { 0 } else { n / ming };
    let factors_of = |lists: &[Vec<Factor>]| -> Result<Subspace, Error> {
        let mut acc: Option<Subspace> = None;
        for fl in lists {
            let cols = product_columns(space, fl, n)?;
            let p = Subspace::span(ambient, field, cols.into_iter().map(|c| c.1));
            acc = Some(match acc {
                None => p,
                Some(a) => a.intersect(&p)?,
            });
            if acc.as_ref().unwrap().is_zero() {
                break;
            }
        }
        Ok(acc.unwrap_or_else(|| Subspace::zero(ambient, field)))
    };
    let middle: Vec<&GradedSubspace> = match kind {
        SpecialKind::T(i) => vec![j
            .relation_power(*i)
            .ok_or_else(|| Error::Internal(format!("R^({i}) was not formed")))?],
        SpecialKind::TTilde(jj) => vec![j.get(2 * jj + 1)],
        SpecialKind::Tuple(jbar) => jbar.iter().map(|&x| j.get(2 * (x / 2))).collect(),
    };
    let mut summands = BTreeMap::new();
    for big_n in 0..=max_n {
        let lists: Vec<Vec<Factor>> = match kind {
            SpecialKind::T(_) | SpecialKind::TTilde(_) => (0..=big_n)
                .map(|l| vec![Factor::Length(l), Factor::Space(middle[0]), Factor::Length(big_n - l)])
                .collect(),
            SpecialKind::Tuple(_) => {
                if big_n < 2 {
                    continue;
                }
                compositions(big_n, middle.len() + 1)
                    .into_iter()
                    .map(|m| {
                        let mut fl = Vec::with_capacity(2 * middle.len() + 1);
                        for (l, u) in middle.iter().enumerate() {
                            fl.push(Factor::Length(m[l]));
                            fl.push(Factor::Space(u));
                        }
                        fl.push(Factor::Length(m[middle.len()]));
                        fl
                    })
                    .collect()
            }
        };
        let s = factors_of(&lists)?;
        if !s.is_zero() {
            summands.insert(big_n, s);
        }
    }
    let mut solver = SpanSolver::new(ambient, field, true);
    let mut owners = Vec::new();
    for (&big_n, s) in &summands {
        for (idx, v) in s.basis().iter().enumerate() {
            if solver.add(v).is_some() {
                return Err(Error::Internal(format!("summands of {kind:?} are dependent in degree {n}")));
            }
            owners.push((big_n, idx));
        }
    }
    Ok(SpecialDecomposition { kind: kind.clone(), degree: n, summands, owners, solver })
}
