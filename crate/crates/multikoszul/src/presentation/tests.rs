use super::*;
use crate::tensoralg::is_tif;

fn alg(text: &str, d: usize) -> TruncatedAlgebra {
    TruncatedAlgebra::new(&parse_presentation(text).unwrap(), d).unwrap()
}

#[test]
fn parse_examples() {
    let p = parse_presentation("gens: x:1; rels: x^3").unwrap();
    assert_eq!(p.gens.len(), 1);
    assert_eq!(p.relation_degrees(), vec![3]);
    let p = parse_presentation("gens: x:1,y:1; rels: x*y - y*x").unwrap();
    assert_eq!(p.gens.len(), 2);
    assert_eq!(p.relations.len(), 1);
    let e = parse_presentation("gens: x:1; rels: x^2 + x^3").unwrap_err();
    assert!(e.to_string().contains("inhomogeneous"), "{e}");
}

#[test]
fn parse_rejections() {
    assert!(parse_presentation("gens x:1, x:2").unwrap_err().to_string().contains("duplicate"));
    assert!(parse_presentation("gens x:0").unwrap_err().to_string().contains("nonpositive"));
    assert!(parse_presentation("gens x:1\nrel x").unwrap_err().to_string().contains("degree 1 < 2"));
    assert!(parse_presentation("gens x:1\nrel 2").is_err());
    assert!(parse_presentation("field F 6\ngens x:1").is_err());
    assert!(parse_presentation("rel x").is_err());
}

#[test]
fn file_format_round_trip() {
    let text = "# truncated\nfield F 32003\ngens x:1, z:2\nrel x*z - 3*z*x\nrel x^4\n";
    let p = parse_presentation(text).unwrap();
    assert_eq!(p.field, crate::linalg::Field::Prime(32003));
    let again = parse_presentation(&p.to_text()).unwrap();
    assert_eq!(again.relations, p.relations);
    assert_eq!(again.gens, p.gens);
}

#[test]
fn truncated_polynomial_dims() {
    let a = alg("gens x:1\nrel x^3", 6);
    assert_eq!(a.hilbert_series(), vec![1, 1, 1, 0, 0, 0, 0]);
    let i = a.ideal().unwrap();
    assert_eq!(i.dims(), vec![0, 0, 0, 1, 1, 1, 1]);
}

#[test]
fn free_and_polynomial_dims() {
    let free = alg("gens x:1, y:1", 8);
    assert_eq!(free.hilbert_series(), (0..=8).map(|n| 1 << n).collect::<Vec<_>>());
    assert!(free.ideal().unwrap().is_zero());
    let poly = alg("gens x:1, y:1\nrel x*y - y*x", 8);
    assert_eq!(poly.hilbert_series(), (0..=8).map(|n| n + 1).collect::<Vec<_>>());
    let i = poly.ideal().unwrap();
    assert_eq!(i.part(2).dim(), 1);
    assert_eq!(i.part(3).dim(), 4);
}

#[test]
fn ideal_matches_naive_closure() {
    // I_n = rels_n + V·I_{n-1} + I_{n-1}·V computed directly in word coordinates
    for text in ["gens x:1, y:1\nrel x*y - y*x", "gens x:1, y:1\nrel x*x*y - y*x*x\nrel x*y*y + y*y*x", "gens x:2, z:3\nrel x*z - z*x\nrel z*z - x*x*x"] {
        let p = parse_presentation(text).unwrap();
        let a = TruncatedAlgebra::new(&p, 9).unwrap();
        let s = a.space().clone();
        let rels = crate::tensoralg::GradedSubspace::from_polys(&s, 9, &p.relations).unwrap();
        let v = crate::tensoralg::GradedSubspace::generators(&s, 9);
        let mut naive = rels.clone();
        for _ in 0..9 {
            let left = crate::tensoralg::subspace_product(&s, &v, &naive).unwrap();
            let right = crate::tensoralg::subspace_product(&s, &naive, &v).unwrap();
            naive = naive.sum(&left).unwrap().sum(&right).unwrap();
        }
        assert_eq!(a.ideal().unwrap(), &naive, "{text}");
        for n in 0..=9 {
            assert_eq!(a.dim(n) + naive.part(n).dim(), s.ambient(n));
        }
    }
}

#[test]
fn space_of_relations_drops_redundancy() {
    let a = alg("gens x:1\nrel x^3\nrel x^4", 8);
    assert_eq!(a.relation_space().dims(), vec![0, 0, 0, 1, 0, 0, 0, 0, 0]);
    assert_eq!(a.warnings().len(), 1);
    let q = alg("gens x:1, y:1\nrel x*y - y*x", 6);
    let r = q.relation_space();
    assert_eq!(r.dims(), vec![0, 0, 1, 0, 0, 0, 0]);
    let s = q.space();
    assert!(is_tif(s, r, true, 6).unwrap() && is_tif(s, r, false, 6).unwrap());
    // the same ideal presented redundantly has the same R dimensions
    let red = alg("gens x:1, y:1\nrel x*y - y*x\nrel 2*x*y - 2*y*x\nrel x*x*y - y*x*x", 6);
    assert_eq!(red.relation_space().dims(), r.dims());
}

#[test]
fn structure_constants_are_associative() {
    let a = alg("gens x:1, y:1\nrel x*x*y - y*x*x\nrel x*y*y - y*y*x", 7);
    for p in 0..=3 {
        for q in 0..=2 {
            for r in 0..=2 {
                for i in 0..a.dim(p) {
                    for j in 0..a.dim(q) {
                        for k in 0..a.dim(r) {
                            let one = a.one();
                            let (x, y, z) = (
                                crate::linalg::SparseVec::unit(i, one.clone()),
                                crate::linalg::SparseVec::unit(j, one.clone()),
                                crate::linalg::SparseVec::unit(k, one.clone()),
                            );
                            let l = a.mul(p + q, &a.mul(p, &x, q, &y), r, &z);
                            let rr = a.mul(p, &x, q + r, &a.mul(q, &y, r, &z));
                            assert_eq!(l, rr);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn right_multiplication_agrees_with_projection() {
    let a = alg("gens x:1, y:2\nrel x*y - y*x - x*x*x\nrel y*y*x", 9);
    for n in 0..=6 {
        for (i, w) in a.normal_words(n).iter().enumerate() {
            for g in 0..2u8 {
                let mut wg = w.clone();
                wg.push(g);
                let unit = crate::linalg::SparseVec::unit(i, a.one());
                assert_eq!(a.times_word(n, &unit, &[g]), a.project_word(&wg));
            }
        }
    }
}

#[test]
fn combinators() {
    let a = parse_presentation("gens x:1\nrel x^3").unwrap();
    let b = parse_presentation("gens y:1\nrel y^3").unwrap();
    let ab = a.free_product(&b).unwrap();
    assert_eq!(ab.gens.names(), &["x".to_string(), "y".to_string()]);
    assert_eq!(ab.relations.len(), 2);
    let unit = parse_presentation("gens").unwrap();
    let au = a.free_product(&unit).unwrap();
    assert_eq!(au.to_text(), a.to_text());
    let aa = a.free_product(&a).unwrap();
    assert_eq!(aa.gens.names(), &["x".to_string(), "x2".to_string()]);
    let q = parse_presentation("gens x:1,y:1\nrel x*y - y*x").unwrap();
    assert_eq!(q.opposite().relations[0].display(&q.gens), "-x*y + y*x");
    assert_eq!(a.opposite().relations, a.relations);
    assert!(a.free_product(&parse_presentation("field F 5\ngens y:1").unwrap()).is_err());
}

#[test]
fn free_product_hilbert_identity() {
    let a = parse_presentation("gens x:1\nrel x^3").unwrap();
    let b = parse_presentation("gens y:1, z:1\nrel y*z - z*y").unwrap();
    let d = 9;
    let ha: Vec<i128> = TruncatedAlgebra::new(&a, d).unwrap().hilbert_series().iter().map(|x| *x as i128).collect();
    let hb: Vec<i128> = TruncatedAlgebra::new(&b, d).unwrap().hilbert_series().iter().map(|x| *x as i128).collect();
    let hab: Vec<i128> =
        TruncatedAlgebra::new(&a.free_product(&b).unwrap(), d).unwrap().hilbert_series().iter().map(|x| *x as i128).collect();
    let lhs = series_inverse(&hab, d + 1);
    let ia = series_inverse(&ha, d + 1);
    let ib = series_inverse(&hb, d + 1);
    let rhs: Vec<i128> = (0..=d).map(|n| ia[n] + ib[n] - if n == 0 { 1 } else { 0 }).collect();
    assert_eq!(lhs, rhs);
}

#[test]
fn super_yang_mills_relation_degrees() {
    let text = include_str!("../../corpus/sym_2_1.alg");
    let a = alg(text, 8);
    let r = a.relation_space().dims();
    assert_eq!(r[5], 1);
    assert_eq!(r[6], 2);
}

#[test]
fn cap_is_a_hard_error() {
    let p = parse_presentation("gens x:1, y:1, z:1").unwrap();
    let space = std::sync::Arc::new(crate::tensoralg::WordSpace::with_cap(p.gens.clone(), p.field, 1000));
    assert!(matches!(TruncatedAlgebra::with_space(&p, space, 8), Err(crate::Error::Cap(_))));
}
