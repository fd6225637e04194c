use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use super::Presentation;
use crate::linalg::{Scalar, SparseVec, SpanSolver, Subspace};
use crate::tensoralg::{GradedSubspace, Word, WordSpace};
use crate::Error;

/// The algebra A = T(V)/I in degrees `0..=bound`, with normal-word bases.
///
/// Degree n is built from the map T_n → ⊕_g g⊗A_{n-|g|}, g·u ↦ g⊗π(u), whose
/// kernel is (V·I)_n. The image K_n of I_n is spanned by the right-shifted
/// images of lower K's and the images of the relations of degree n, so only
/// coordinates of size Σ_g dim A_{n-|g|} are ever eliminated.
#[derive(Debug)]
pub struct TruncatedAlgebra {
    space: Arc<WordSpace>,
    presentation: Presentation,
    bound: usize,
    normal: Vec<Vec<Word>>,
    normal_index: Vec<HashMap<Word, usize>>,
    /// lmul[n][g][u]: π(g·u) in A_n for u a basis element of A_{n-|g|}.
    lmul: Vec<Vec<Vec<SparseVec>>>,
    /// rmul[m][g][u]: π(u·g) in A_{m+|g|}.
    rmul: Vec<Vec<Vec<SparseVec>>>,
    relations: GradedSubspace,
    warnings: Vec<String>,
    ideal: OnceLock<GradedSubspace>,
}

impl TruncatedAlgebra {
    pub fn new(p: &Presentation, bound: usize) -> Result<TruncatedAlgebra, Error> {
        TruncatedAlgebra::with_space(p, p.space(), bound)
    }

    pub fn with_space(p: &Presentation, space: Arc<WordSpace>, bound: usize) -> Result<TruncatedAlgebra, Error> {
        let gens = p.gens.clone();
        let ng = gens.len();
        let f = p.field;
        let one = f.one();
        let rel_degrees = p.relation_degrees();

        let mut normal: Vec<Vec<Word>> = vec![vec![Word::new()]];
        let mut normal_index: Vec<HashMap<Word, usize>> = vec![[(Word::new(), 0)].into_iter().collect()];
        let mut lmul: Vec<Vec<Vec<SparseVec>>> = vec![vec![Vec::new(); ng]];
        let mut rmul: Vec<Vec<Vec<SparseVec>>> = vec![vec![Vec::new(); ng]; bound + 1];
        let mut kspaces: Vec<Subspace> = vec![Subspace::zero(0, f)];
        let mut relation_rows: Vec<Vec<SparseVec>> = vec![Vec::new()];
        let mut warnings = Vec::new();

        for n in 1..=bound {
            // coordinates (g, u) of ⊕_g g⊗A_{n-|g|}, ordered as the words g·u
            let mut offset = vec![usize::MAX; ng];
            let mut edim = 0usize;
            for g in 0..ng {
                let d = gens.degree(g as u8);
                if d <= n {
                    offset[g] = edim;
                    edim += normal[n - d].len();
                }
            }
            if edim > space.cap() {
                return Err(Error::Cap(format!(
                    "degree {n} needs {edim} coordinates, above the cap of {} (set MK_MAX_WORDS to raise it)",
                    space.cap()
                )));
            }
            let embed = |g: usize, v: &SparseVec| v.reindex(|u| offset[g] + u);

            let mut shifted = SpanSolver::new(edim, f, false);
            for (gp, gdeg) in gens.degrees().iter().enumerate() {
                if *gdeg >= n {
                    continue;
                }
                let m = n - gdeg;
                for row in kspaces[m].basis() {
                    // ρ_{g'}: g⊗a ↦ g⊗(a·g')
                    let mut pairs = Vec::new();
                    for (e, c) in row.iter() {
                        let (g, u) = locate(&gens, &normal, m, *e);
                        let img = &rmul[m - gens.degree(g as u8)][gp][u];
                        for (k, a) in embed(g, img).iter() {
                            pairs.push((*k, a.mul(c)));
                        }
                    }
                    shifted.add(&SparseVec::from_pairs(pairs));
                }
            }
            let mut solver = shifted.clone();
            let old_pivots: HashSet<usize> = shifted.into_subspace().pivots().iter().copied().collect();
            let phi = |w: &Word| -> SparseVec {
                let g = w[0] as usize;
                let rest = project_chain(&gens, &lmul, &w[1..], 0, &SparseVec::unit(0, one.clone()));
                embed(g, &rest)
            };
            for (r, d) in p.relations.iter().zip(&rel_degrees) {
                if *d != n {
                    continue;
                }
                let mut pairs = Vec::new();
                for (w, c) in r.terms() {
                    for (k, a) in phi(w).iter() {
                        pairs.push((*k, a.mul(c)));
                    }
                }
                if solver.add(&SparseVec::from_pairs(pairs)).is_some() {
                    warnings.push(format!(
                        "relation `{}` is redundant and was dropped from the space of relations",
                        r.display(&gens)
                    ));
                }
            }
            let kn = solver.into_subspace();
            let word_of = |e: usize| -> Word {
                let (g, u) = locate(&gens, &normal, n, e);
                let mut w = vec![g as u8];
                w.extend_from_slice(&normal[n - gens.degree(g as u8)][u]);
                w
            };
            let pivots: HashSet<usize> = kn.pivots().iter().copied().collect();
            let nonpivots: Vec<usize> = (0..edim).filter(|e| !pivots.contains(e)).collect();
            let a_index: HashMap<usize, usize> = nonpivots.iter().enumerate().map(|(k, e)| (*e, k)).collect();
            let words_n: Vec<Word> = nonpivots.iter().map(|e| word_of(*e)).collect();

            let mut lm = vec![Vec::new(); ng];
            for g in 0..ng {
                let d = gens.degree(g as u8);
                if d > n {
                    continue;
                }
                lm[g] = (0..normal[n - d].len())
                    .map(|u| {
                        let e = offset[g] + u;
                        let red = kn.reduce(&SparseVec::unit(e, one.clone()));
                        red.reindex(|k| a_index[&k])
                    })
                    .collect();
            }

            // R_n: e_w − nf(w) for the leads contributed by the relations
            let mut rrows = Vec::new();
            for (row, piv) in kn.basis().iter().zip(kn.pivots()) {
                if old_pivots.contains(piv) {
                    continue;
                }
                let w = word_of(*piv);
                let mut pairs = vec![(space.index(&w), one.clone())];
                for (e, c) in row.iter().skip(1) {
                    pairs.push((space.index(&word_of(*e)), c.clone()));
                }
                rrows.push(SparseVec::from_pairs(pairs));
            }
            relation_rows.push(rrows);

            normal_index.push(words_n.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect());
            normal.push(words_n);
            lmul.push(lm);
            kspaces.push(kn);

            // right multiplication landing in degree n
            for gp in 0..ng {
                let dp = gens.degree(gp as u8);
                if dp > n {
                    continue;
                }
                let m = n - dp;
                let imgs: Vec<SparseVec> = (0..normal[m].len())
                    .map(|u| {
                        if m == 0 {
                            return lmul[n][gp][0].clone();
                        }
                        let w = &normal[m][u];
                        let g = w[0] as usize;
                        let rest = normal_index[m - gens.degree(w[0])][&w[1..].to_vec()];
                        let inner = &rmul[m - gens.degree(w[0])][gp][rest];
                        apply(&lmul[n][g], inner)
                    })
                    .collect();
                rmul[m][gp] = imgs;
            }
        }

        let relations = GradedSubspace::from_parts(
            relation_rows
                .into_iter()
                .enumerate()
                .map(|(n, rows)| Subspace::span(space.ambient(n), f, rows))
                .collect(),
        );
        Ok(TruncatedAlgebra {
            space,
            presentation: p.clone(),
            bound,
            normal,
            normal_index,
            lmul,
            rmul,
            relations,
            warnings,
            ideal: OnceLock::new(),
        })
    }

    pub fn space(&self) -> &Arc<WordSpace> {
        &self.space
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn one(&self) -> Scalar {
        self.presentation.field.one()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.normal[n].len()
    }

    /// [dim A_0, …, dim A_D].
    pub fn hilbert_series(&self) -> Vec<usize> {
        self.normal.iter().map(|b| b.len()).collect()
    }

    pub fn normal_words(&self, n: usize) -> &[Word] {
        &self.normal[n]
    }

    pub fn normal_index(&self, w: &[u8]) -> Option<usize> {
        let n = self.space.gens().word_degree(w);
        self.normal_index.get(n)?.get(w).copied()
    }

    /// Minimal space of relations R.
    pub fn relation_space(&self) -> &GradedSubspace {
        &self.relations
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// π(word)·x for x in A_q.
    pub fn word_times(&self, word: &[u8], q: usize, x: &SparseVec) -> SparseVec {
        project_chain(self.space.gens(), &self.lmul, word, q, x)
    }

    /// x·π(word) for x in A_q.
    pub fn times_word(&self, q: usize, x: &SparseVec, word: &[u8]) -> SparseVec {
        let mut v = x.clone();
        let mut d = q;
        for &g in word {
            v = apply(&self.rmul[d][g as usize], &v);
            d += self.space.gens().degree(g);
        }
        v
    }

    /// π(w) in normal-word coordinates.
    pub fn project_word(&self, w: &[u8]) -> SparseVec {
        self.word_times(w, 0, &SparseVec::unit(0, self.one()))
    }

    /// π of a degree-n vector in word coordinates.
    pub fn project(&self, n: usize, v: &SparseVec) -> SparseVec {
        let terms: Vec<(Scalar, SparseVec)> =
            v.iter().map(|(i, c)| (c.clone(), self.project_word(&self.space.word_at(n, *i)))).collect();
        SparseVec::combination(terms.iter().map(|(c, x)| (c.clone(), x)))
    }

    /// Product of x ∈ A_p and y ∈ A_q.
    pub fn mul(&self, p: usize, x: &SparseVec, q: usize, y: &SparseVec) -> SparseVec {
        let terms: Vec<(Scalar, SparseVec)> =
            x.iter().map(|(i, c)| (c.clone(), self.word_times(&self.normal[p][*i], q, y))).collect();
        SparseVec::combination(terms.iter().map(|(c, v)| (c.clone(), v)))
    }

    /// Images of all basis products A_a × A_b → A_{a+b}, indexed [i][j].
    pub fn structure_constants(&self, a: usize, b: usize) -> Vec<Vec<SparseVec>> {
        (0..self.dim(a))
            .map(|i| {
                (0..self.dim(b))
                    .map(|j| self.word_times(&self.normal[a][i], b, &SparseVec::unit(j, self.one())))
                    .collect()
            })
            .collect()
    }

    /// The ideal I in word coordinates: rows e_w − nf(w) over the non-normal words.
    pub fn ideal(&self) -> Result<&GradedSubspace, Error> {
        if let Some(i) = self.ideal.get() {
            return Ok(i);
        }
        let f = self.presentation.field;
        let mut parts = vec![Subspace::zero(1, f)];
        for n in 1..=self.bound {
            let words = self.space.words_of_degree(n)?;
            let mut rows = Vec::new();
            let mut pivots = Vec::new();
            for (i, w) in words.iter().enumerate() {
                if self.normal_index[n].contains_key(w) {
                    continue;
                }
                let nf = self.project_word(w);
                let mut pairs = vec![(i, self.one())];
                for (k, c) in nf.iter() {
                    pairs.push((self.space.index(&self.normal[n][*k]), c.neg()));
                }
                rows.push(SparseVec::from_pairs(pairs));
                pivots.push(i);
            }
            parts.push(Subspace::from_rref_parts(words.len(), f, rows, pivots));
        }
        let _ = self.ideal.set(GradedSubspace::from_parts(parts));
        Ok(self.ideal.get().unwrap())
    }
}

/// Apply a map given by basis images.
fn apply(images: &[SparseVec], x: &SparseVec) -> SparseVec {
    if x.nnz() == 1 {
        let (i, c) = &x.entries()[0];
        return images[*i].scale(c);
    }
    SparseVec::combination(x.iter().map(|(i, c)| (c.clone(), &images[*i])))
}

fn project_chain(
    gens: &crate::tensoralg::GeneratorSet,
    lmul: &[Vec<Vec<SparseVec>>],
    word: &[u8],
    q: usize,
    x: &SparseVec,
) -> SparseVec {
    let mut v = x.clone();
    let mut d = q;
    for &g in word.iter().rev() {
        d += gens.degree(g);
        if d >= lmul.len() {
            panic!("product of degree {d} is above the truncation bound");
        }
        v = apply(&lmul[d][g as usize], &v);
        if v.is_zero() {
            break;
        }
    }
    v
}

/// (g, u) for coordinate `e` of ⊕_g g⊗A_{n-|g|}.
fn locate(gens: &crate::tensoralg::GeneratorSet, normal: &[Vec<Word>], n: usize, mut e: usize) -> (usize, usize) {
    for g in 0..gens.len() {
        let d = gens.degree(g as u8);
        if d > n {
            continue;
        }
        let c = normal[n - d].len();
        if e < c {
            return (g, e);
        }
        e -= c;
    }
    panic!("coordinate out of range")
}
