use super::{GradedSubspace, Word, WordSpace};
use crate::linalg::{Scalar, SparseVec, SpanSolver};
use crate::Error;

/// One slot of an internal product inside T(V).
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    /// A graded subspace, through its canonical basis.
    Space(&'a GradedSubspace),
    /// V^{(m)}: all words of tensor length m.
    Length(usize),
    /// T(V): all words.
    Free,
}

/// The basis element chosen in one slot of a product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Choice {
    Basis { degree: usize, index: usize },
    Word(Word),
}

impl Choice {
    pub fn basis(&self) -> (usize, usize) {
        match self {
            Choice::Basis { degree, index } => (*degree, *index),
            Choice::Word(_) => panic!("not a basis choice"),
        }
    }

    pub fn word(&self) -> &Word {
        match self {
            Choice::Word(w) => w,
            Choice::Basis { .. } => panic!("not a word choice"),
        }
    }
}

pub type Label = Vec<Choice>;

/// Concatenation of a degree-`a` vector with a degree-`b` vector.
pub fn concat(space: &WordSpace, a: usize, u: &SparseVec, b: usize, w: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(u.nnz() * w.nnz());
    for (i, c) in u.iter() {
        let s = if a == 0 { 0 } else { space.block_start(&space.word_at(a, *i), a + b) };
        for (j, d) in w.iter() {
            out.push((s + j, c.mul(d)));
        }
    }
    SparseVec::from_sorted(out)
}

fn min_degree(space: &WordSpace, f: &Factor) -> Option<usize> {
    match f {
        Factor::Space(u) => u.min_degree(),
        Factor::Length(0) | Factor::Free => Some(0),
        Factor::Length(m) => space.gens().min_degree().map(|d| d * m),
    }
}

fn choices(space: &WordSpace, f: &Factor, q: usize) -> Result<Vec<(Choice, SparseVec)>, Error> {
    let one = space.field().one();
    Ok(match f {
        Factor::Space(u) => match u.get(q) {
            Some(p) => p
                .basis()
                .iter()
                .enumerate()
                .map(|(k, v)| (Choice::Basis { degree: q, index: k }, v.clone()))
                .collect(),
            None => return Err(Error::Internal(format!("factor unknown in degree {q}"))),
        },
        Factor::Length(m) => space
            .words_of_length(q, *m)?
            .iter()
            .map(|w| (Choice::Word(w.clone()), SparseVec::unit(space.index(w), one.clone())))
            .collect(),
        Factor::Free => space
            .words_of_degree(q)?
            .into_iter()
            .map(|w| {
                let i = space.index(&w);
                (Choice::Word(w), SparseVec::unit(i, one.clone()))
            })
            .collect(),
    })
}

/// All concatenations of factor basis elements landing in degree `n`.
pub fn product_columns(space: &WordSpace, factors: &[Factor], n: usize) -> Result<Vec<(Label, SparseVec)>, Error> {
    let mins: Vec<usize> = match factors.iter().map(|f| min_degree(space, f)).collect::<Option<Vec<_>>>() {
        Some(m) => m,
        None => return Ok(Vec::new()),
    };
    let mut rest_min = vec![0; factors.len() + 1];
    for k in (0..factors.len()).rev() {
        rest_min[k] = rest_min[k + 1] + mins[k];
    }
    if rest_min[0] > n {
        return Ok(Vec::new());
    }
    space.dim(n)?;
    let one = space.field().one();
    let mut partial: Vec<(usize, SparseVec, Label)> = vec![(0, SparseVec::unit(0, one), Vec::new())];
    for (k, f) in factors.iter().enumerate() {
        let mut next = Vec::new();
        let last = k + 1 == factors.len();
        let mut cache: Vec<Option<Vec<(Choice, SparseVec)>>> = vec![None; n + 1];
        for (d, v, label) in &partial {
            let lo = if last { n - d } else { mins[k] };
            let hi = n - d - rest_min[k + 1];
            for q in lo..=hi {
                if cache[q].is_none() {
                    cache[q] = Some(choices(space, f, q)?);
                }
                for (c, w) in cache[q].as_ref().unwrap() {
                    let mut l = label.clone();
                    l.push(c.clone());
                    next.push((d + q, concat(space, *d, v, q, w), l));
                }
            }
        }
        partial = next;
    }
    Ok(partial.into_iter().map(|(_, v, l)| (l, v)).collect())
}

/// Unique expansions of degree-`n` elements over the concatenations of a factor list.
#[derive(Debug)]
pub struct Factorizer {
    labels: Vec<Label>,
    columns: Vec<SparseVec>,
    solver: SpanSolver,
}

impl Factorizer {
    /// Fails when the concatenations are linearly dependent, so expansions would not be unique.
    pub fn new(space: &WordSpace, factors: &[Factor], n: usize) -> Result<Factorizer, Error> {
        let cols = product_columns(space, factors, n)?;
        let mut solver = SpanSolver::new(space.ambient(n), space.field(), true);
        let mut labels = Vec::with_capacity(cols.len());
        let mut columns = Vec::with_capacity(cols.len());
        for (l, v) in cols {
            if solver.add(&v).is_some() {
                return Err(Error::Internal(format!(
                    "factorization in degree {n} is not unique: the factors are not tensor-intersection faithful"
                )));
            }
            labels.push(l);
            columns.push(v);
        }
        Ok(Factorizer { labels, columns, solver })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// The concatenation behind label `k`.
    pub fn column(&self, k: usize) -> &SparseVec {
        &self.columns[k]
    }

    /// Expansion of `v` as (column index, coefficient) pairs.
    pub fn factor_indices(&self, v: &SparseVec) -> Result<Vec<(usize, Scalar)>, Error> {
        let c = self
            .solver
            .solve(v)
            .map_err(|_| Error::Internal("element does not lie in the product".into()))?;
        Ok(c.into_entries())
    }

    pub fn rank(&self) -> usize {
        self.solver.rank()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.solver.residual(v).is_zero()
    }

    pub fn factor(&self, v: &SparseVec) -> Result<Vec<(&Label, Scalar)>, Error> {
        let c = self
            .solver
            .solve(v)
            .map_err(|_| Error::Internal("element does not lie in the product".into()))?;
        Ok(c.iter().map(|(k, a)| (&self.labels[*k], a.clone())).collect())
    }
}

/// One-shot factorization of `v` in degree `n`.
pub fn factorize(space: &WordSpace, v: &SparseVec, factors: &[Factor], n: usize) -> Result<Vec<(Label, Scalar)>, Error> {
    let f = Factorizer::new(space, factors, n)?;
    Ok(f.factor(v)?.into_iter().map(|(l, c)| (l.clone(), c)).collect())
}
