use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::jspaces::{special_summands, JBasis, JFamily, SpecialKind};
use crate::linalg::{rank, Field, Scalar, SparseVec};
use crate::presentation::{BigradedTable, TruncatedAlgebra};
use crate::tensoralg::{Factor, Factorizer};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleForm {
    /// A ⊗ J_i
    Left,
    /// J_i ⊗ A
    Right,
    /// A ⊗ J_i ⊗ A
    Bimodule,
}

/// A pure tensor a ⊗ b ⊗ a' with a, a' normal basis elements given as (degree, index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiTerm {
    pub left: (usize, usize),
    pub target: JBasis,
    pub right: (usize, usize),
}

pub type BiElement = BTreeMap<BiTerm, Scalar>;

fn add_term(e: &mut BiElement, t: BiTerm, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = e.entry(t).or_insert_with(|| c.field().zero());
    *slot = slot.add(&c);
    if slot.is_zero() {
        e.remove(&t);
    }
}

/// A degree-preserving map in one Adams degree, stored by columns.
#[derive(Clone, Debug, Default)]
pub struct DegreeMatrix {
    pub rows: usize,
    pub columns: Vec<SparseVec>,
}

impl DegreeMatrix {
    pub fn rank(&self, field: Field) -> usize {
        rank(self.rows, field, &self.columns)
    }

    /// The composite `self ∘ inner`.
    pub fn compose(&self, inner: &DegreeMatrix) -> DegreeMatrix {
        let columns = inner
            .columns
            .iter()
            .map(|v| SparseVec::combination(v.iter().map(|(k, c)| (c.clone(), &self.columns[*k]))))
            .collect();
        DegreeMatrix { rows: self.rows, columns }
    }
}

#[derive(Clone, Debug)]
pub struct ComplexLevel {
    pub i: usize,
    /// dim (J_i)_m for m = 0..=D.
    pub generators: Vec<usize>,
    /// δ(1⊗b⊗1) for the basis element b = (degree, index) of J_i, already
    /// reduced to the module form.
    pub images: BTreeMap<(usize, usize), BiElement>,
    /// δ_i in Adams degrees 0..=D; for i = 0 this is the augmentation.
    pub differential: Vec<DegreeMatrix>,
}

impl ComplexLevel {
    pub fn dim(&self, n: usize) -> usize {
        self.differential[n].columns.len()
    }
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub form: ModuleForm,
    pub field: Field,
    pub bound: usize,
    pub levels: Vec<ComplexLevel>,
}

/// Coordinates of (C_i)_n: blocks A_a ⊗ (J_i)_m ⊗ A_b with a + m + b = n.
struct Layout {
    offsets: HashMap<(usize, usize), usize>,
    dim: usize,
}

impl Layout {
    fn new(form: ModuleForm, a: &TruncatedAlgebra, gens: &[usize], n: usize) -> Layout {
        let mut offsets = HashMap::new();
        let mut dim = 0;
        for (m, &g) in gens.iter().enumerate().take(n + 1) {
            if g == 0 {
                continue;
            }
            for l in 0..=n - m {
                let r = n - m - l;
                let ok = match form {
                    ModuleForm::Left => r == 0,
                    ModuleForm::Right => l == 0,
                    ModuleForm::Bimodule => true,
                };
                if ok {
                    offsets.insert((l, m), dim);
                    dim += a.dim(l) * g * a.dim(r);
                }
            }
        }
        Layout { offsets, dim }
    }

    /// Enumerates the basis in coordinate order as (l, u, m, idx, r, w).
    fn basis(&self, a: &TruncatedAlgebra, gens: &[usize], n: usize) -> Vec<[usize; 6]> {
        let mut blocks: Vec<(usize, (usize, usize))> = self.offsets.iter().map(|(k, o)| (*o, *k)).collect();
        blocks.sort();
        let mut out = Vec::with_capacity(self.dim);
        for (_, (l, m)) in blocks {
            let r = n - l - m;
            for u in 0..a.dim(l) {
                for idx in 0..gens[m] {
                    for w in 0..a.dim(r) {
                        out.push([l, u, m, idx, r, w]);
                    }
                }
            }
        }
        out
    }

    fn index(&self, a: &TruncatedAlgebra, gens: &[usize], l: usize, u: usize, m: usize, idx: usize, r: usize, w: usize) -> usize {
        self.offsets[&(l, m)] + (u * gens[m] + idx) * a.dim(r) + w
    }
}

/// π(basis u of A_l) · π(basis x of A_p).
fn basis_product(a: &TruncatedAlgebra, l: usize, u: usize, p: usize, x: usize) -> SparseVec {
    a.word_times(&a.normal_words(l)[u], p, &SparseVec::unit(x, a.one()))
}

fn projected(a: &TruncatedAlgebra, w: &[u8]) -> (usize, SparseVec) {
    (a.space().gens().word_degree(w), a.project_word(w))
}

/// Adds c · π(u) ⊗ b ⊗ π(w) to `e`.
fn add_expanded(e: &mut BiElement, a: &TruncatedAlgebra, u: &[u8], b: JBasis, w: &[u8], c: &Scalar) {
    let (p, lu) = projected(a, u);
    let (q, rw) = projected(a, w);
    for (x, cx) in lu.iter() {
        for (y, cy) in rw.iter() {
            add_term(e, BiTerm { left: (p, *x), target: b, right: (q, *y) }, c.mul(cx).mul(cy));
        }
    }
}

/// δᵇ on the basis of J_i, i ≥ 1.
fn bimodule_images(a: &TruncatedAlgebra, j: &JFamily, i: usize) -> Result<BTreeMap<(usize, usize), BiElement>, Error> {
    let space = j.space();
    let ji = j.get(i);
    let below = j.get(i - 1);
    let mut images = BTreeMap::new();
    for m in ji.degrees() {
        let basis = ji.part(m).basis();
        if i % 2 == 1 {
            let left = Factorizer::new(space, &[Factor::Length(1), Factor::Space(below)], m)?;
            let right = Factorizer::new(space, &[Factor::Space(below), Factor::Length(1)], m)?;
            for (idx, w) in basis.iter().enumerate() {
                let mut e = BiElement::new();
                for (col, c) in left.factor_indices(w)? {
                    let label = &left.labels()[col];
                    let (d, k) = label[1].basis();
                    add_expanded(&mut e, a, label[0].word(), JBasis { i: i - 1, degree: d, index: k }, &[], &c);
                }
                for (col, c) in right.factor_indices(w)? {
                    let label = &right.labels()[col];
                    let (d, k) = label[0].basis();
                    add_expanded(&mut e, a, &[], JBasis { i: i - 1, degree: d, index: k }, label[1].word(), &c.neg());
                }
                images.insert((m, idx), e);
            }
        } else {
            let half = i / 2;
            let dec = special_summands(j, &SpecialKind::TTilde(half - 1), m)?;
            let mut facs: HashMap<(usize, usize), Factorizer> = HashMap::new();
            for (idx, w) in basis.iter().enumerate() {
                let mut e = BiElement::new();
                for (big_n, comp) in dec.decompose(w)? {
                    for l in 0..=big_n {
                        if let std::collections::hash_map::Entry::Vacant(e) = facs.entry((big_n, l)) {
                            let f = Factorizer::new(
                                space,
                                &[Factor::Length(l), Factor::Space(below), Factor::Length(big_n - l)],
                                m,
                            )?;
                            e.insert(f);
                        }
                        let fac = &facs[&(big_n, l)];
                        for (col, c) in fac.factor_indices(&comp)? {
                            let label = &fac.labels()[col];
                            let (d, k) = label[1].basis();
                            add_expanded(&mut e, a, label[0].word(), JBasis { i: i - 1, degree: d, index: k }, label[2].word(), &c);
                        }
                    }
                }
                images.insert((m, idx), e);
            }
        }
    }
    Ok(images)
}

/// Restricts bimodule images to a one-sided form.
fn reduce_images(form: ModuleForm, i: usize, images: &BTreeMap<(usize, usize), BiElement>) -> BTreeMap<(usize, usize), BiElement> {
    images
        .iter()
        .map(|(k, e)| {
            let r: BiElement = e
                .iter()
                .filter(|(t, _)| match form {
                    ModuleForm::Left => t.right.0 == 0,
                    ModuleForm::Right => t.left.0 == 0,
                    ModuleForm::Bimodule => true,
                })
                .map(|(t, c)| (*t, if form == ModuleForm::Right { c.signed(i) } else { c.clone() }))
                .collect();
            (*k, r)
        })
        .collect()
}

fn level_matrix(
    form: ModuleForm,
    a: &TruncatedAlgebra,
    gens: &[usize],
    below: &[usize],
    images: &BTreeMap<(usize, usize), BiElement>,
    n: usize,
) -> DegreeMatrix {
    let src = Layout::new(form, a, gens, n);
    let dst = Layout::new(form, a, below, n);
    let columns = src
        .basis(a, gens, n)
        .into_iter()
        .map(|[l, u, m, idx, r, w]| {
            let mut out = Vec::new();
            for (t, c) in &images[&(m, idx)] {
                let lv = basis_product(a, l, u, t.left.0, t.left.1);
                let rv = basis_product(a, t.right.0, t.right.1, r, w);
                let (l2, r2) = (l + t.left.0, t.right.0 + r);
                for (x, cx) in lv.iter() {
                    for (y, cy) in rv.iter() {
                        let k = dst.index(a, below, l2, *x, t.target.degree, t.target.index, r2, *y);
                        out.push((k, c.mul(cx).mul(cy)));
                    }
                }
            }
            SparseVec::from_pairs(out)
        })
        .collect();
    DegreeMatrix { rows: dst.dim, columns }
}

fn augmentation(form: ModuleForm, a: &TruncatedAlgebra, n: usize) -> DegreeMatrix {
    let gens = {
        let mut g = vec![0; n + 1];
        g[0] = 1;
        g
    };
    let src = Layout::new(form, a, &gens, n);
    let basis = src.basis(a, &gens, n);
    match form {
        ModuleForm::Bimodule => DegreeMatrix {
            rows: a.dim(n),
            columns: basis.into_iter().map(|[l, u, _, _, r, w]| basis_product(a, l, u, r, w)).collect(),
        },
        _ => DegreeMatrix {
            rows: usize::from(n == 0),
            columns: basis
                .into_iter()
                .map(|_| if n == 0 { SparseVec::unit(0, a.one()) } else { SparseVec::new() })
                .collect(),
        },
    }
}

fn generator_dims(j: &JFamily, i: usize, d: usize) -> Vec<usize> {
    (0..=d).map(|m| j.dim(i, m)).collect()
}

fn assemble(form: ModuleForm, a: &TruncatedAlgebra, j: &JFamily, images: Vec<BTreeMap<(usize, usize), BiElement>>) -> Complex {
    let d = a.bound().min(j.bound());
    let gens: Vec<Vec<usize>> = (0..images.len()).map(|i| generator_dims(j, i, d)).collect();
    let levels = images
        .into_iter()
        .enumerate()
        .map(|(i, im)| {
            let differential = (0..=d)
                .into_par_iter()
                .map(|n| if i == 0 { augmentation(form, a, n) } else { level_matrix(form, a, &gens[i], &gens[i - 1], &im, n) })
                .collect();
            ComplexLevel { i, generators: gens[i].clone(), images: im, differential }
        })
        .collect();
    Complex { form, field: a.space().field(), bound: d, levels }
}

fn all_bimodule_images(a: &TruncatedAlgebra, j: &JFamily) -> Result<Vec<BTreeMap<(usize, usize), BiElement>>, Error> {
    (0..=j.hmax())
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                let mut m = BTreeMap::new();
                m.insert((0, 0), BiElement::new());
                Ok(m)
            } else {
                bimodule_images(a, j, i)
            }
        })
        .collect()
}

/// The bimodule complex A⊗J_i⊗A for i ≤ H, in Adams degrees up to the common bound.
pub fn build_bimodule_complex(a: &TruncatedAlgebra, j: &JFamily) -> Result<Complex, Error> {
    let images = all_bimodule_images(a, j)?;
    Ok(assemble(ModuleForm::Bimodule, a, j, images))
}

/// Applies − ⊗_A k and k ⊗_A − to a bimodule complex.
pub fn left_right_complexes(a: &TruncatedAlgebra, j: &JFamily, bimodule: &Complex) -> (Complex, Complex) {
    let reduce = |form| {
        bimodule
            .levels
            .iter()
            .map(|l| reduce_images(form, l.i, &l.images))
            .collect::<Vec<_>>()
    };
    let left = assemble(ModuleForm::Left, a, j, reduce(ModuleForm::Left));
    let right = assemble(ModuleForm::Right, a, j, reduce(ModuleForm::Right));
    (left, right)
}

/// A single complex of the given form.
pub fn build_complex(a: &TruncatedAlgebra, j: &JFamily, form: ModuleForm) -> Result<Complex, Error> {
    let images = all_bimodule_images(a, j)?
        .into_iter()
        .enumerate()
        .map(|(i, im)| reduce_images(form, i, &im))
        .collect();
    Ok(assemble(form, a, j, images))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    /// (i, n) of the first nonzero composite δ_{i-1} ∘ δ_i, with δ_0 the augmentation.
    pub failure: Option<(usize, usize)>,
}

impl Complex {
    pub fn zero(form: ModuleForm, field: Field, bound: usize) -> Complex {
        Complex { form, field, bound, levels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn differential(&self, i: usize, n: usize) -> &DegreeMatrix {
        &self.levels[i].differential[n]
    }

    pub fn verify(&self) -> VerifyReport {
        for i in 1..self.levels.len() {
            for n in 0..=self.bound {
                let c = self.levels[i - 1].differential[n].compose(&self.levels[i].differential[n]);
                if c.columns.iter().any(|v| !v.is_zero()) {
                    return VerifyReport { ok: false, failure: Some((i, n)) };
                }
            }
        }
        VerifyReport { ok: true, failure: None }
    }

    /// rank δ_i in each degree, for every level.
    pub fn ranks(&self) -> Vec<Vec<usize>> {
        self.levels
            .par_iter()
            .map(|l| l.differential.par_iter().map(|m| m.rank(self.field)).collect())
            .collect()
    }

    /// dim H_i in degree n for i ≤ len − 2; H_0 is the cokernel of δ_1.
    pub fn homology_table(&self) -> BigradedTable {
        let top = self.levels.len().saturating_sub(2);
        let mut t = BigradedTable::new(top, self.bound);
        if self.levels.len() < 2 {
            return t;
        }
        let ranks = self.ranks();
        for i in 0..=top {
            for n in 0..=self.bound {
                let below = if i == 0 { 0 } else { ranks[i][n] };
                t.set(i, n, self.levels[i].dim(n) - below - ranks[i + 1][n]);
            }
        }
        t
    }

    /// No term of any δ(b) has both outer factors in degree 0.
    pub fn is_minimal(&self) -> bool {
        self.levels
            .iter()
            .skip(1)
            .all(|l| l.images.values().all(|e| e.keys().all(|t| t.left.0 + t.right.0 > 0)))
    }

    /// Degrees (i + 1, n) where δ_{i+1} restricted to 1 ⊗ (J_{i+1})_n fails to be injective.
    pub fn generator_injectivity_failures(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for l in self.levels.iter().skip(1) {
            for n in 0..=self.bound {
                let g = l.generators[n];
                if g == 0 {
                    continue;
                }
                let m = &l.differential[n];
                // 1 ⊗ (J_i)_n ⊗ 1 is the block with m = n, which comes last
                let cols = &m.columns[m.columns.len() - g..];
                if rank(m.rows, self.field, cols) != g {
                    bad.push((l.i, n));
                }
            }
        }
        bad
    }
}
