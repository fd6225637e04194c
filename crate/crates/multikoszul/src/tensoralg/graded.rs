use super::{Factor, TensorPoly, WordSpace};
use crate::linalg::{Field, SparseVec, Subspace};
use crate::Error;

/// A subspace of T(V) known in every Adams degree `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    parts: Vec<Subspace>,
}

impl GradedSubspace {
    pub fn from_parts(parts: Vec<Subspace>) -> GradedSubspace {
        assert!(!parts.is_empty(), "a graded subspace needs degree 0");
        GradedSubspace { parts }
    }

    pub fn zero(space: &WordSpace, bound: usize) -> GradedSubspace {
        let f = space.field();
        GradedSubspace { parts: (0..=bound).map(|n| Subspace::zero(space.ambient(n), f)).collect() }
    }

    /// span{1} = T(V)^0.
    pub fn scalars(space: &WordSpace, bound: usize) -> GradedSubspace {
        let mut g = GradedSubspace::zero(space, bound);
        g.parts[0] = Subspace::full(1, space.field());
        g
    }

    /// V, spanned by the generators.
    pub fn generators(space: &WordSpace, bound: usize) -> GradedSubspace {
        let f = space.field();
        let mut vecs: Vec<Vec<SparseVec>> = vec![Vec::new(); bound + 1];
        for g in 0..space.gens().len() as u8 {
            let d = space.gens().degree(g);
            if d <= bound {
                vecs[d].push(SparseVec::unit(space.index(&[g]), f.one()));
            }
        }
        GradedSubspace::from_vectors(space, vecs)
    }

    /// Spans of homogeneous polynomials; those above `bound` are ignored.
    pub fn from_polys(space: &WordSpace, bound: usize, polys: &[TensorPoly]) -> Result<GradedSubspace, Error> {
        let mut vecs: Vec<Vec<SparseVec>> = vec![Vec::new(); bound + 1];
        for p in polys {
            let d = p
                .homogeneous_degree(space.gens())
                .map_err(|_| Error::Input("inhomogeneous element".into()))?;
            if let Some(d) = d.filter(|d| *d <= bound) {
                space.dim(d)?;
                vecs[d].push(p.to_vector(space));
            }
        }
        Ok(GradedSubspace::from_vectors(space, vecs))
    }

    pub fn from_vectors(space: &WordSpace, vecs: Vec<Vec<SparseVec>>) -> GradedSubspace {
        let f = space.field();
        GradedSubspace {
            parts: vecs
                .into_iter()
                .enumerate()
                .map(|(n, v)| Subspace::span(space.ambient(n), f, v))
                .collect(),
        }
    }

    pub fn bound(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn field(&self) -> Field {
        self.parts[0].field()
    }

    /// Degree `n` part; panics above the bound, where nothing is known.
    pub fn part(&self, n: usize) -> &Subspace {
        match self.parts.get(n) {
            Some(p) => p,
            None => panic!("degree {n} is above the truncation bound {}", self.bound()),
        }
    }

    pub fn get(&self, n: usize) -> Option<&Subspace> {
        self.parts.get(n)
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn set_part(&mut self, n: usize, s: Subspace) {
        self.parts[n] = s;
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.dim()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.parts.iter().map(|p| p.dim()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    /// Lowest degree with a nonzero part.
    pub fn min_degree(&self) -> Option<usize> {
        self.parts.iter().position(|p| !p.is_zero())
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(n, _)| n)
    }

    pub fn truncate(&self, bound: usize) -> GradedSubspace {
        GradedSubspace { parts: self.parts[..=bound.min(self.bound())].to_vec() }
    }

    pub fn extend_zero(&self, space: &WordSpace, bound: usize) -> GradedSubspace {
        let mut parts = self.parts.clone();
        for n in parts.len()..=bound {
            parts.push(Subspace::zero(space.ambient(n), space.field()));
        }
        GradedSubspace { parts }
    }

    fn zip(&self, o: &GradedSubspace, f: impl Fn(&Subspace, &Subspace) -> Result<Subspace, Error>) -> Result<GradedSubspace, Error> {
        let b = self.bound().min(o.bound());
        Ok(GradedSubspace { parts: (0..=b).map(|n| f(&self.parts[n], &o.parts[n])).collect::<Result<_, _>>()? })
    }

    pub fn sum(&self, o: &GradedSubspace) -> Result<GradedSubspace, Error> {
        self.zip(o, |a, b| a.sum(b))
    }

    pub fn intersect(&self, o: &GradedSubspace) -> Result<GradedSubspace, Error> {
        self.zip(o, |a, b| a.intersect(b))
    }

    /// Containment in every degree both know.
    pub fn contains(&self, o: &GradedSubspace) -> bool {
        (0..=self.bound().min(o.bound())).all(|n| self.parts[n].contains_subspace(&o.parts[n]))
    }

    /// Every word reversed.
    pub fn reverse(&self, space: &WordSpace) -> GradedSubspace {
        let f = space.field();
        GradedSubspace {
            parts: self
                .parts
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    if p.is_zero() {
                        return p.clone();
                    }
                    let rows = p.basis().iter().map(|v| {
                        v.reindex(|i| {
                            let mut w = space.word_at(n, i);
                            w.reverse();
                            space.index(&w)
                        })
                    });
                    Subspace::span(p.ambient(), f, rows)
                })
                .collect(),
        }
    }

    /// Basis elements of degree `n` as polynomials.
    pub fn basis_polys(&self, space: &WordSpace, n: usize) -> Vec<TensorPoly> {
        self.part(n).basis().iter().map(|v| TensorPoly::from_vector(space, n, v)).collect()
    }
}

/// Internal product U·W inside T(V), valid up to the smaller bound.
pub fn subspace_product(space: &WordSpace, u: &GradedSubspace, w: &GradedSubspace) -> Result<GradedSubspace, Error> {
    product(space, &[Factor::Space(u), Factor::Space(w)], u.bound().min(w.bound()))
}

/// Internal product of a list of factors in degrees `0..=bound`.
pub fn product(space: &WordSpace, factors: &[Factor], bound: usize) -> Result<GradedSubspace, Error> {
    let f = space.field();
    let mut parts = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let cols = super::product_columns(space, factors, n)?;
        parts.push(Subspace::span(space.ambient(n), f, cols.into_iter().map(|c| c.1)));
    }
    Ok(GradedSubspace::from_parts(parts))
}

/// U ∩ U·T(V)_{>0} = 0 (left) or U ∩ T(V)_{>0}·U = 0 (right), checked up to `bound`.
pub fn is_tif(space: &WordSpace, u: &GradedSubspace, left: bool, bound: usize) -> Result<bool, Error> {
    let b = bound.min(u.bound());
    for n in 1..=b {
        let un = u.part(n);
        if un.is_zero() {
            continue;
        }
        let mut vecs = Vec::new();
        for a in 0..n {
            let ua = u.part(a);
            if ua.is_zero() {
                continue;
            }
            let words = space.words_of_degree(n - a)?;
            for x in ua.basis() {
                for w in &words {
                    let wv = SparseVec::unit(space.index(w), space.field().one());
                    vecs.push(if left {
                        super::concat(space, a, x, n - a, &wv)
                    } else {
                        super::concat(space, n - a, &wv, a, x)
                    });
                }
            }
        }
        let other = Subspace::span(space.ambient(n), space.field(), vecs);
        if !un.intersect(&other)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
