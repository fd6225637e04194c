use rayon::prelude::*;

use super::DegreeMatrix;
use crate::linalg::{kernel, Field, SparseVec, Subspace};
use crate::presentation::{BigradedTable, TruncatedAlgebra};

/// P_i = A ⊗ W_i of a minimal free resolution of k.
#[derive(Clone, Debug)]
pub struct ResolutionLevel {
    pub i: usize,
    /// d_i of the generators of W_i in degree m, as elements of (P_{i-1})_m.
    pub generators: Vec<Vec<SparseVec>>,
    /// d_i in Adams degrees 0..=D; d_0 is the augmentation.
    pub differential: Vec<DegreeMatrix>,
    /// Ker d_i per degree (empty for the last level).
    pub kernels: Vec<Subspace>,
}

impl ResolutionLevel {
    pub fn counts(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.len()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub field: Field,
    pub bound: usize,
    pub levels: Vec<ResolutionLevel>,
}

/// Coordinates of (A ⊗ W)_n: blocks A_{n-m} ⊗ W_m in increasing m, index off_m + u·|W_m| + g.
struct Coords {
    offsets: Vec<usize>,
    dim: usize,
}

impl Coords {
    fn new(a: &TruncatedAlgebra, counts: &[usize], n: usize) -> Coords {
        let mut offsets = vec![0; n + 1];
        let mut dim = 0;
        for m in 0..=n {
            offsets[m] = dim;
            dim += a.dim(n - m) * counts[m];
        }
        Coords { offsets, dim }
    }

    /// (m, u, g) of coordinate k.
    fn decode(&self, counts: &[usize], k: usize) -> (usize, usize, usize) {
        let m = self.offsets.partition_point(|&o| o <= k) - 1;
        let r = k - self.offsets[m];
        (m, r / counts[m], r % counts[m])
    }

    fn index(&self, counts: &[usize], m: usize, u: usize, g: usize) -> usize {
        self.offsets[m] + u * counts[m] + g
    }
}

/// u · z for u the basis element `u` of A_a and z ∈ (A ⊗ W)_m.
fn left_mul(a: &TruncatedAlgebra, counts: &[usize], deg: usize, u: usize, m: usize, z: &SparseVec) -> SparseVec {
    let src = Coords::new(a, counts, m);
    let dst = Coords::new(a, counts, deg + m);
    let word = &a.normal_words(deg)[u];
    let mut out = Vec::new();
    for (k, c) in z.iter() {
        let (mm, v, g) = src.decode(counts, *k);
        for (x, cx) in a.word_times(word, m - mm, &SparseVec::unit(v, a.one())).iter() {
            out.push((dst.index(counts, mm, *x, g), c.mul(cx)));
        }
    }
    SparseVec::from_pairs(out)
}

fn differential_matrix(a: &TruncatedAlgebra, gens: &[Vec<SparseVec>], below: &[usize], n: usize) -> DegreeMatrix {
    let dst = Coords::new(a, below, n);
    let mut columns = Vec::new();
    for (m, gs) in gens.iter().enumerate().take(n + 1) {
        for u in 0..a.dim(n - m) {
            for z in gs {
                columns.push(left_mul(a, below, n - m, u, m, z));
            }
        }
    }
    DegreeMatrix { rows: dst.dim, columns }
}

/// Minimal free resolution of the trivial module up to homological degree `h`,
/// exact in Adams degrees up to the algebra's bound.
pub fn minimal_resolution(a: &TruncatedAlgebra, h: usize) -> Resolution {
    let d = a.bound();
    let field = a.space().field();
    let mut gens0 = vec![Vec::new(); d + 1];
    gens0[0].push(SparseVec::unit(0, a.one()));
    let aug: Vec<DegreeMatrix> = (0..=d)
        .map(|n| DegreeMatrix {
            rows: usize::from(n == 0),
            columns: (0..a.dim(n)).map(|_| if n == 0 { SparseVec::unit(0, a.one()) } else { SparseVec::new() }).collect(),
        })
        .collect();
    let mut levels = vec![ResolutionLevel { i: 0, generators: gens0, differential: aug, kernels: Vec::new() }];
    for i in 1..=h {
        let prev = levels.last_mut().unwrap();
        prev.kernels = prev
            .differential
            .par_iter()
            .map(|m| kernel(m.columns.len(), m.rows, &m.columns, field))
            .collect();
        let prev = &levels[i - 1];
        let below = prev.counts();
        let mut gens: Vec<Vec<SparseVec>> = vec![Vec::new(); d + 1];
        let mut differential = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut mat = differential_matrix(a, &gens, &below, n);
            let image = Subspace::span(mat.rows, field, mat.columns.iter().cloned());
            let fresh = image.complement_rows(&prev.kernels[n]);
            mat.columns.extend(fresh.iter().cloned());
            gens[n] = fresh;
            differential.push(mat);
        }
        levels.push(ResolutionLevel { i, generators: gens, differential, kernels: Vec::new() });
    }
    Resolution { field, bound: d, levels }
}

impl Resolution {
    /// dim Tor_i(k, k)_n = dim (W_i)_n.
    pub fn tor_table(&self) -> BigradedTable {
        let mut t = BigradedTable::new(self.levels.len().saturating_sub(1), self.bound);
        for l in &self.levels {
            for (n, g) in l.generators.iter().enumerate() {
                t.set(l.i, n, g.len());
            }
        }
        t
    }

    /// The induced differential on k ⊗_A P vanishes: no generator image has a
    /// component in A_0 ⊗ W, the last block of its degree.
    pub fn is_minimal(&self, a: &TruncatedAlgebra) -> bool {
        self.levels.iter().skip(1).all(|l| {
            let below = self.levels[l.i - 1].counts();
            l.generators.iter().enumerate().all(|(m, gs)| {
                let start = Coords::new(a, &below, m).offsets[m];
                gs.iter().all(|z| z.iter().all(|(k, _)| *k < start))
            })
        })
    }

    /// d_{i-1} ∘ d_i = 0 in every degree.
    pub fn is_complex(&self) -> bool {
        self.levels.windows(2).all(|w| {
            w[0].differential
                .iter()
                .zip(&w[1].differential)
                .all(|(lo, hi)| lo.compose(hi).columns.iter().all(|v| v.is_zero()))
        })
    }
}
