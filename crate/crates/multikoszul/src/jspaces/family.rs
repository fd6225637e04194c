use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::linalg::{kernel, Scalar, SparseVec, Subspace};
use crate::presentation::{BigradedTable, TruncatedAlgebra};
use crate::tensoralg::{product, product_columns, Factor, Factorizer, GradedSubspace, WordSpace};
use crate::Error;

/// How the (i+1)-part compositions m̄ of N are enumerated in the even step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionReading {
    /// Zeros allowed in every slot.
    AllSlots,
    /// The last slot must be positive.
    LastSlotPositive,
}

#[derive(Clone, Copy, Debug)]
pub struct JOptions {
    /// Recompute every even level with the N ≥ 1 formula and the other
    /// composition reading, and compare.
    pub debug_crosscheck: bool,
    pub reading: CompositionReading,
}

impl Default for JOptions {
    fn default() -> Self {
        JOptions { debug_crosscheck: false, reading: CompositionReading::AllSlots }
    }
}

/// The spaces J_0, …, J_H inside T(V), each known in Adams degrees `0..=bound`.
#[derive(Clone, Debug)]
pub struct JFamily {
    space: Arc<WordSpace>,
    bound: usize,
    relations: GradedSubspace,
    spaces: Vec<GradedSubspace>,
    /// J_i vanishes below this degree for structural reasons.
    lower: Vec<usize>,
    rpow: Vec<GradedSubspace>,
    opts: JOptions,
    notes: Vec<String>,
}

/// One slot of a canonical product: V^{(m)} or J_e.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Slot {
    Len(usize),
    J(usize),
}

pub fn compute_j(a: &TruncatedAlgebra, h: usize) -> Result<JFamily, Error> {
    compute_j_with(a, h, JOptions::default())
}

pub fn compute_j_with(a: &TruncatedAlgebra, h: usize, opts: JOptions) -> Result<JFamily, Error> {
    let mut j = JFamily::empty(a.space().clone(), a.bound(), a.relation_space().clone(), opts);
    j.extend(h)?;
    Ok(j)
}

impl JFamily {
    fn empty(space: Arc<WordSpace>, bound: usize, relations: GradedSubspace, opts: JOptions) -> JFamily {
        let rpow = vec![GradedSubspace::scalars(&space, bound), relations.clone()];
        JFamily { space, bound, relations, spaces: Vec::new(), lower: Vec::new(), rpow, opts, notes: Vec::new() }
    }

    /// A family given level by level, with lower bounds read off the data.
    pub(crate) fn from_spaces(space: Arc<WordSpace>, relations: GradedSubspace, spaces: Vec<GradedSubspace>) -> JFamily {
        let bound = relations.bound();
        let mut j = JFamily::empty(space, bound, relations, JOptions::default());
        for s in spaces {
            j.lower.push(s.min_degree().unwrap_or(bound + 1));
            j.spaces.push(s);
        }
        j
    }

    pub fn space(&self) -> &Arc<WordSpace> {
        &self.space
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn hmax(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn relations(&self) -> &GradedSubspace {
        &self.relations
    }

    pub fn get(&self, i: usize) -> &GradedSubspace {
        match self.spaces.get(i) {
            Some(s) => s,
            None => panic!("J_{i} was not computed (H = {})", self.hmax()),
        }
    }

    pub fn levels(&self) -> &[GradedSubspace] {
        &self.spaces
    }

    pub fn dim(&self, i: usize, n: usize) -> usize {
        self.spaces.get(i).and_then(|s| s.get(n)).map_or(0, |p| p.dim())
    }

    /// True when J_i is zero in degree n by the minimal-degree bookkeeping alone.
    pub fn structurally_zero(&self, i: usize, n: usize) -> bool {
        n < self.lower[i]
    }

    pub fn lower_bound(&self, i: usize) -> usize {
        self.lower[i]
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// R^{(k)}, the k-fold internal product of R, when it has been formed.
    pub fn relation_power(&self, k: usize) -> Option<&GradedSubspace> {
        self.rpow.get(k)
    }

    pub fn table(&self) -> BigradedTable {
        let mut t = BigradedTable::new(self.hmax(), self.bound);
        for (i, s) in self.spaces.iter().enumerate() {
            for n in s.degrees() {
                t.set(i, n, s.part(n).dim());
            }
        }
        t
    }

    /// Both J_{H-1} and J_H vanish up to the bound, so every later level does too.
    pub fn stabilized(&self) -> bool {
        let h = self.spaces.len();
        h >= 2 && self.spaces[h - 1].is_zero() && self.spaces[h - 2].is_zero()
    }

    /// Computes further levels until J_h is known.
    pub fn extend(&mut self, h: usize) -> Result<(), Error> {
        while self.spaces.len() <= h {
            self.push_level()?;
        }
        Ok(())
    }

    /// Computes levels until all later ones are forced to vanish, or `max_h` is reached.
    pub fn extend_until_stable(&mut self, max_h: usize) -> Result<bool, Error> {
        while !self.stabilized() && self.spaces.len() <= max_h {
            self.push_level()?;
        }
        Ok(self.stabilized())
    }

    fn min_gen_degree(&self) -> usize {
        self.space.gens().min_degree().unwrap_or(self.bound + 1)
    }

    fn actual_min(&self, k: usize) -> usize {
        self.spaces[k].min_degree().unwrap_or(self.bound + 1)
    }

    fn structural_lower(&self, i: usize) -> usize {
        let inf = self.bound + 1;
        let minr = self.relations.min_degree().unwrap_or(inf);
        let l = match i {
            0 => 0,
            1 => self.min_gen_degree(),
            2 => minr,
            _ if i % 2 == 1 => (self.actual_min(i - 1) + self.min_gen_degree()).max(self.actual_min(i - 2) + minr),
            _ => self.actual_min(i - 2) + minr,
        };
        l.min(inf)
    }

    fn push_level(&mut self) -> Result<(), Error> {
        let i = self.spaces.len();
        let lower = self.structural_lower(i);
        let level = match i {
            0 => GradedSubspace::scalars(&self.space, self.bound),
            1 => GradedSubspace::generators(&self.space, self.bound),
            2 => self.relations.clone(),
            _ if lower > self.bound => GradedSubspace::zero(&self.space, self.bound),
            _ if i % 2 == 1 => self.degreewise(lower, |n| self.odd_part(i, n))?,
            _ => {
                let k = i / 2 - 1;
                while self.rpow.len() <= k + 1 {
                    let last = self.rpow.last().unwrap();
                    let next = product(&self.space, &[Factor::Space(last), Factor::Space(&self.relations)], self.bound)?;
                    self.rpow.push(next);
                }
                let level = self.degreewise(lower, |n| self.even_part(k, n, self.opts.reading, 2))?;
                if self.opts.debug_crosscheck {
                    self.crosscheck_even(k, lower, &level)?;
                }
                level
            }
        };
        self.lower.push(lower);
        self.spaces.push(level);
        Ok(())
    }

    fn degreewise(
        &self,
        lower: usize,
        f: impl Fn(usize) -> Result<Subspace, Error> + Sync,
    ) -> Result<GradedSubspace, Error> {
        let parts: Vec<Subspace> = (0..=self.bound)
            .into_par_iter()
            .map(|n| {
                if n < lower {
                    Ok(Subspace::zero(self.space.ambient(n), self.space.field()))
                } else {
                    f(n)
                }
            })
            .collect::<Result<_, Error>>()?;
        Ok(GradedSubspace::from_parts(parts))
    }

    fn span_of(&self, factors: &[Factor], n: usize) -> Result<Subspace, Error> {
        let cols = product_columns(&self.space, factors, n)?;
        Ok(Subspace::span(self.space.ambient(n), self.space.field(), cols.into_iter().map(|c| c.1)))
    }

    /// (V·J_{i-1}) ∩ (J_{i-1}·V) in degree n.
    fn odd_part(&self, i: usize, n: usize) -> Result<Subspace, Error> {
        let prev = &self.spaces[i - 1];
        let left = self.span_of(&[Factor::Length(1), Factor::Space(prev)], n)?;
        if left.is_zero() {
            return Ok(left);
        }
        let right = self.span_of(&[Factor::Space(prev), Factor::Length(1)], n)?;
        left.intersect(&right)
    }

    fn factors<'a>(&'a self, key: &[Slot]) -> Vec<Factor<'a>> {
        key.iter()
            .map(|s| match s {
                Slot::Len(m) => Factor::Length(*m),
                Slot::J(e) => Factor::Space(&self.spaces[*e]),
            })
            .collect()
    }

    /// J_{2k+2} in degree n: the elements of R^{(k+1)} whose T-length-N
    /// components, in T·R^{(k)}, vanish for N < `min_n` and lie in every
    /// product V^{(m_1)}·J_{2n_1}·…·J_{2n_k}·V^{(m_{k+1})} for N ≥ `min_n`.
    fn even_part(&self, k: usize, n: usize, reading: CompositionReading, min_n: usize) -> Result<Subspace, Error> {
        let ambient = self.space.ambient(n);
        let field = self.space.field();
        let top = self.rpow[k + 1].part(n);
        if top.is_zero() {
            return Ok(top.clone());
        }
        let omegas = top.basis();
        let comps = self.length_components(k, n, omegas)?;
        let mut cache: HashMap<Vec<Slot>, Subspace> = HashMap::new();
        let mut images: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); omegas.len()];
        let mut offset = 0;
        for (&big_n, vs) in &comps {
            if big_n < min_n {
                push_block(&mut images, vs.iter().cloned(), offset);
                offset += ambient;
                continue;
            }
            for key in product_keys(k, big_n, reading) {
                if !cache.contains_key(&key) {
                    let s = self.span_of(&self.factors(&key), n)?;
                    cache.insert(key.clone(), s);
                }
                let p = &cache[&key];
                push_block(&mut images, vs.iter().map(|v| p.reduce(v)), offset);
                offset += ambient;
            }
        }
        let images: Vec<SparseVec> = images.into_iter().map(SparseVec::from_pairs).collect();
        let ker = kernel(omegas.len(), offset.max(1), &images, field);
        let vecs = ker
            .basis()
            .iter()
            .map(|c| SparseVec::combination(c.iter().map(|(k, a)| (a.clone(), &omegas[*k]))));
        Ok(Subspace::span(ambient, field, vecs))
    }

    /// For each basis element ω of R^{(k+1)}_n, its components ω_N in V^{(N)}·R^{(k)}.
    fn length_components(&self, k: usize, n: usize, omegas: &[SparseVec]) -> Result<BTreeMap<usize, Vec<SparseVec>>, Error> {
        let fac = Factorizer::new(&self.space, &[Factor::Free, Factor::Space(&self.rpow[k])], n)?;
        let mut comps: BTreeMap<usize, Vec<Vec<(Scalar, usize)>>> = BTreeMap::new();
        for (idx, w) in omegas.iter().enumerate() {
            for (col, c) in fac.factor_indices(w)? {
                let big_n = fac.labels()[col][0].word().len();
                comps.entry(big_n).or_insert_with(|| vec![Vec::new(); omegas.len()])[idx].push((c, col));
            }
        }
        Ok(comps
            .into_iter()
            .map(|(big_n, per)| {
                let vs = per
                    .into_iter()
                    .map(|terms| SparseVec::combination(terms.iter().map(|(c, col)| (c.clone(), fac.column(*col)))))
                    .collect();
                (big_n, vs)
            })
            .collect())
    }

    fn crosscheck_even(&mut self, k: usize, lower: usize, level: &GradedSubspace) -> Result<(), Error> {
        let i = 2 * k + 2;
        let with_one = self.degreewise(lower, |n| self.even_part(k, n, self.opts.reading, 1))?;
        if &with_one != level {
            return Err(Error::Internal(format!("J_{i}: the N ≥ 1 and N ≥ 2 formulas disagree")));
        }
        let odd = &self.spaces[2 * k + 1];
        for n in 0..=self.bound {
            let summand = self.intersection_of_keys(k, 1, n, self.opts.reading)?;
            if &summand != odd.part(n) {
                self.notes.push(format!(
                    "J_{i}: the N = 1 summand differs from J_{} in degree {n} under the {:?} reading",
                    2 * k + 1,
                    self.opts.reading
                ));
            }
        }
        let other = match self.opts.reading {
            CompositionReading::AllSlots => CompositionReading::LastSlotPositive,
            CompositionReading::LastSlotPositive => CompositionReading::AllSlots,
        };
        let alt = self.degreewise(lower, |n| self.even_part(k, n, other, 2))?;
        for n in 0..=self.bound {
            if alt.part(n) != level.part(n) {
                self.notes.push(format!(
                    "J_{i} in degree {n}: dimension {} under the {:?} reading, {} under {:?}",
                    level.part(n).dim(),
                    self.opts.reading,
                    alt.part(n).dim(),
                    other
                ));
            }
        }
        Ok(())
    }

    fn intersection_of_keys(&self, k: usize, big_n: usize, n: usize, reading: CompositionReading) -> Result<Subspace, Error> {
        let mut acc: Option<Subspace> = None;
        for key in product_keys(k, big_n, reading) {
            let s = self.span_of(&self.factors(&key), n)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Subspace::full(self.space.ambient(n), self.space.field())))
    }
}

fn push_block(images: &mut [Vec<(usize, Scalar)>], vs: impl Iterator<Item = SparseVec>, offset: usize) {
    for (img, v) in images.iter_mut().zip(vs) {
        img.extend(v.into_entries().into_iter().map(|(j, c)| (offset + j, c)));
    }
}

/// Weak compositions of `total` into `parts` parts.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Canonical factor lists V^{(m_1)}·J_{2n_1}·…·J_{2n_k}·V^{(m_{k+1})} with
/// J_0 and V^{(0)} elided and adjacent V-powers merged.
fn product_keys(k: usize, big_n: usize, reading: CompositionReading) -> BTreeSet<Vec<Slot>> {
    let mut keys = BTreeSet::new();
    let ms: Vec<Vec<usize>> = compositions(big_n, k + 1)
        .into_iter()
        .filter(|m| reading == CompositionReading::AllSlots || m[k] > 0)
        .collect();
    for nbar in compositions(k, k) {
        for m in &ms {
            let mut key = Vec::new();
            let mut run = 0;
            for l in 0..=k {
                run += m[l];
                if l < k && nbar[l] > 0 {
                    if run > 0 {
                        key.push(Slot::Len(run));
                    }
                    run = 0;
                    key.push(Slot::J(2 * nbar[l]));
                }
            }
            if run > 0 {
                key.push(Slot::Len(run));
            }
            keys.insert(key);
        }
    }
    keys
}

#[cfg(test)]
pub(crate) fn keys_for_test(k: usize, big_n: usize, all: bool) -> usize {
    let r = if all { CompositionReading::AllSlots } else { CompositionReading::LastSlotPositive };
    product_keys(k, big_n, r).len()
}
