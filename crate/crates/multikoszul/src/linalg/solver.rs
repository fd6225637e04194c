use std::collections::HashMap;

use super::{Field, Scalar, SparseVec, Subspace};

/// Gaussian elimination over a growing list of generators, optionally
/// remembering how each echelon row was formed from them.
///
/// Rows are kept in semi-echelon form: every row is zero left of its pivot.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    ambient: usize,
    field: Field,
    track: bool,
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    ngens: usize,
    deps: Vec<SparseVec>,
}

impl SpanSolver {
    pub fn new(ambient: usize, field: Field, track: bool) -> SpanSolver {
        SpanSolver {
            ambient,
            field,
            track,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_row: HashMap::new(),
            ngens: 0,
            deps: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.ngens
    }

    /// Combinations of generators that vanish, one per dependent generator.
    pub fn dependencies(&self) -> &[SparseVec] {
        &self.deps
    }

    fn eliminate(&self, v: &SparseVec, mut combo: Option<SparseVec>) -> (SparseVec, Option<SparseVec>) {
        let mut v = v.clone();
        let mut pos = 0;
        loop {
            let next = v.entries()[pos..]
                .iter()
                .position(|(j, _)| self.pivot_row.contains_key(j))
                .map(|k| k + pos);
            let Some(k) = next else { break };
            let (j, c) = v.entries()[k].clone();
            let r = self.pivot_row[&j];
            let f = c.neg();
            v = v.axpy(&f, &self.rows[r]);
            if let Some(cb) = combo.as_mut() {
                *cb = cb.axpy(&f, &self.combos[r]);
            }
            pos = k;
        }
        (v, combo)
    }

    /// Adds a generator. Returns the vanishing combination when it is dependent.
    pub fn add(&mut self, v: &SparseVec) -> Option<SparseVec> {
        debug_assert!(v.entries().last().is_none_or(|e| e.0 < self.ambient));
        let id = self.ngens;
        self.ngens += 1;
        let combo = self.track.then(|| SparseVec::unit(id, self.field.one()));
        let (r, combo) = self.eliminate(v, combo);
        match r.leading().cloned() {
            None => {
                let c = combo.unwrap_or_default();
                if self.track {
                    self.deps.push(c.clone());
                }
                Some(c)
            }
            Some((p, lead)) => {
                let inv = lead.inv();
                self.pivot_row.insert(p, self.rows.len());
                self.rows.push(r.scale(&inv));
                self.combos.push(combo.map(|c| c.scale(&inv)).unwrap_or_default());
                None
            }
        }
    }

    /// Expresses `v` through the generators, or returns the nonzero residual.
    pub fn solve(&self, v: &SparseVec) -> Result<SparseVec, SparseVec> {
        assert!(self.track, "solve needs a tracking solver");
        let (r, combo) = self.eliminate(v, Some(SparseVec::new()));
        if r.is_zero() {
            Ok(combo.unwrap().neg())
        } else {
            Err(r)
        }
    }

    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        self.eliminate(v, None).0
    }

    pub fn into_subspace(self) -> Subspace {
        back_substitute(self.ambient, self.field, self.rows)
    }
}

/// Turns semi-echelon rows with distinct pivots into the canonical RREF.
pub(crate) fn back_substitute(ambient: usize, field: Field, rows: Vec<SparseVec>) -> Subspace {
    let mut rows: Vec<SparseVec> = rows;
    rows.sort_by_key(|r| r.leading().unwrap().0);
    let pivots: Vec<usize> = rows.iter().map(|r| r.leading().unwrap().0).collect();
    let pos: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    for k in (0..rows.len()).rev() {
        let row = &rows[k];
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .skip(1)
            .filter_map(|(j, c)| pos.get(j).map(|&m| (m, c.neg())))
            .collect();
        if hits.is_empty() {
            continue;
        }
        let mut terms: Vec<(Scalar, &SparseVec)> = hits.iter().map(|(m, c)| (c.clone(), &rows[*m])).collect();
        let one = row.leading().unwrap().1.clone();
        terms.push((one, row));
        let reduced = SparseVec::combination(terms);
        rows[k] = reduced;
    }
    Subspace::from_rref_parts(ambient, field, rows, pivots)
}

/// Kernel of the map whose columns are `images`, as a subspace of the domain.
pub fn kernel(domain: usize, codomain: usize, images: &[SparseVec], field: Field) -> Subspace {
    let mut s = SpanSolver::new(codomain, field, true);
    for v in images {
        s.add(v);
    }
    Subspace::span(domain, field, s.deps)
}

pub fn rank(ambient: usize, field: Field, vectors: &[SparseVec]) -> usize {
    let mut s = SpanSolver::new(ambient, field, false);
    for v in vectors {
        s.add(v);
    }
    s.rank()
}
