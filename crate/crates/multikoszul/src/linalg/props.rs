use proptest::prelude::*;

use super::*;

fn to_vecs(f: Field, rows: &[Vec<i64>]) -> Vec<SparseVec> {
    rows.iter()
        .map(|r| r.iter().enumerate().map(|(i, x)| (i, f.int(*x))).collect())
        .collect()
}

/// Plain dense Gauss-Jordan, the reference the sparse kernel must match.
fn dense_rref(f: Field, rows: &[Vec<i64>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|x| f.int(*x)).collect()).collect();
    let mut out_row = 0;
    for c in 0..cols {
        let Some(p) = (out_row..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(out_row, p);
        let inv = m[out_row][c].inv();
        m[out_row] = m[out_row].iter().map(|x| x.mul(&inv)).collect();
        for r in 0..m.len() {
            if r != out_row && !m[r][c].is_zero() {
                let k = m[r][c].clone();
                m[r] = m[r].iter().zip(&m[out_row]).map(|(a, b)| a.sub(&b.mul(&k))).collect();
            }
        }
        out_row += 1;
    }
    m.truncate(out_row);
    m
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), 0..=rows)
}

proptest! {
    #[test]
    fn sparse_rref_matches_dense(m in small_matrix(6, 6)) {
        let f = Field::Rational;
        let s = Subspace::span(6, f, to_vecs(f, &m));
        let dense = dense_rref(f, &m, 6);
        let got: Vec<Vec<Scalar>> = s.basis().iter().map(|r| r.to_dense(6, &f.zero())).collect();
        prop_assert_eq!(got, dense);
    }

    #[test]
    fn rref_is_order_independent(m in small_matrix(6, 5)) {
        let f = Field::Rational;
        let mut rev = m.clone();
        rev.reverse();
        prop_assert_eq!(Subspace::span(5, f, to_vecs(f, &m)), Subspace::span(5, f, to_vecs(f, &rev)));
        let mut e = Echelon::new(5, f);
        for v in to_vecs(f, &rev) {
            e.insert(&v);
        }
        prop_assert_eq!(e.into_subspace(), Subspace::span(5, f, to_vecs(f, &m)));
    }

    #[test]
    fn grassmann_formula(a in small_matrix(4, 6), b in small_matrix(4, 6), p in prop::bool::ANY) {
        let f = if p { Field::Prime(32003) } else { Field::Rational };
        let u = Subspace::span(6, f, to_vecs(f, &a));
        let w = Subspace::span(6, f, to_vecs(f, &b));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
        prop_assert!(s.contains_subspace(&u) && s.contains_subspace(&w));
    }

    #[test]
    fn complement_is_direct(a in small_matrix(3, 6), b in small_matrix(3, 6)) {
        let f = Field::Rational;
        let sub = Subspace::span(6, f, to_vecs(f, &a));
        let w = sub.sum(&Subspace::span(6, f, to_vecs(f, &b))).unwrap();
        let c = sub.complement_in(&w).unwrap();
        prop_assert!(c.intersect(&sub).unwrap().is_zero());
        prop_assert_eq!(c.sum(&sub).unwrap(), w);
    }

    #[test]
    fn coordinates_round_trip(m in small_matrix(4, 6), c in prop::collection::vec(-5i64..=5, 4)) {
        let f = Field::Rational;
        let s = Subspace::span(6, f, to_vecs(f, &m));
        let coeffs: Vec<Scalar> = c.iter().take(s.dim()).map(|x| f.int(*x)).collect();
        let v = SparseVec::combination(coeffs.iter().cloned().zip(s.basis()));
        let mut expect = coeffs.clone();
        expect.resize(s.dim(), f.zero());
        prop_assert_eq!(s.coordinates(&v).unwrap(), expect);
    }

    #[test]
    fn kernel_is_kernel(m in small_matrix(6, 4)) {
        let f = Field::Rational;
        let imgs = to_vecs(f, &m);
        let k = kernel(imgs.len(), 4, &imgs, f);
        prop_assert_eq!(k.dim() + rank(4, f, &imgs), imgs.len());
        for x in k.basis() {
            let img = SparseVec::combination(x.iter().map(|(j, c)| (c.clone(), &imgs[*j])));
            prop_assert!(img.is_zero());
        }
    }
}

/// Fixed-seed run: a random failure here would only mean 32003 divides a minor.
#[test]
fn modular_rank_matches_rational() {
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
    let mut runner = TestRunner::new_with_rng(
        Config::with_cases(200),
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strat = prop::collection::vec(prop::collection::vec(-50i64..=50, 8), 8);
    runner
        .run(&strat, |m| {
            let q = Matrix::new(Field::Rational, 8, to_vecs(Field::Rational, &m)).rank();
            let p = Matrix::new(Field::Prime(32003), 8, to_vecs(Field::Prime(32003), &m)).rank();
            prop_assert_eq!(q, p);
            Ok(())
        })
        .unwrap();
}
