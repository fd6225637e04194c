use super::*;
use crate::presentation::{parse_presentation, TruncatedAlgebra};
use crate::tensoralg::{is_tif, product, Factor, GradedSubspace, TensorPoly};

fn alg(text: &str, d: usize) -> TruncatedAlgebra {
    TruncatedAlgebra::new(&parse_presentation(text).unwrap(), d).unwrap()
}

fn debug() -> JOptions {
    JOptions { debug_crosscheck: true, ..JOptions::default() }
}

const TRUNC3: &str = "gens x:1; rel x^3";
const POLY2: &str = "gens x:1, y:1; rel x*y - y*x";
const MIXED: &str = "gens x:1, y:1; rels x*x, y^3";

fn poly(a: &TruncatedAlgebra, text: &str) -> SparseVec {
    let p = TensorPoly::parse(text, a.space().gens(), a.space().field()).unwrap();
    p.to_vector(a.space())
}

use crate::linalg::SparseVec;

#[test]
fn truncated_polynomial_dims() {
    for s in 2..=4 {
        let a = alg(&format!("gens x:1; rel x^{s}"), 3 * s);
        let j = compute_j_with(&a, 6, debug()).unwrap();
        for i in 0..=6 {
            for n in 0..=3 * s {
                let expect = usize::from(n == n_s(s, i));
                assert_eq!(j.dim(i, n), expect, "s={s} i={i} n={n}");
            }
        }
        assert!(j.notes().is_empty(), "{:?}", j.notes());
    }
}

#[test]
fn j4_of_trunc3_sits_in_degree_six() {
    let a = alg(TRUNC3, 12);
    let j = compute_j(&a, 4).unwrap();
    assert_eq!(j.get(4).dims(), vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn commutative_polynomial_j3_vanishes() {
    let a = alg(POLY2, 8);
    let j = compute_j_with(&a, 5, debug()).unwrap();
    assert_eq!(j.dim(2, 2), 1);
    assert!(j.get(3).is_zero());
    assert!(j.get(4).is_zero() && j.get(5).is_zero());
    assert!(j.stabilized());
}

#[test]
fn free_algebra_has_no_higher_j() {
    let a = alg("gens x:1, y:1", 6);
    let j = compute_j(&a, 5).unwrap();
    assert_eq!(j.get(1).dims()[1], 2);
    for i in 2..=5 {
        assert!(j.get(i).is_zero());
    }
}

#[test]
fn structural_zero_bookkeeping() {
    let a = alg(TRUNC3, 12);
    let j = compute_j(&a, 6).unwrap();
    assert!(j.structurally_zero(4, 5));
    assert!(!j.structurally_zero(4, 6));
    assert_eq!(j.lower_bound(5), 7);
}

fn families() -> Vec<(&'static str, TruncatedAlgebra)> {
    vec![
        ("trunc3", alg(TRUNC3, 12)),
        ("poly2", alg(POLY2, 8)),
        ("mixed", alg(MIXED, 9)),
        ("weighted", alg("gens x:1, z:2; rels x*z - z*x, x^3", 10)),
    ]
}

#[test]
fn recursion_containments() {
    for (name, a) in families() {
        let j = compute_j(&a, 6).unwrap();
        let sp = a.space();
        let d = a.bound();
        let r = a.relation_space();
        for i in 2..=6 {
            let rl = product(sp, &[Factor::Space(r), Factor::Space(j.get(i - 2))], d).unwrap();
            let rr = product(sp, &[Factor::Space(j.get(i - 2)), Factor::Space(r)], d).unwrap();
            assert!(rl.contains(j.get(i)) && rr.contains(j.get(i)), "{name}: Lemma 2recur at {i}");
        }
        for jj in 0..=6 {
            for i in 0..=jj {
                let ji = j.get(i);
                let jr = j.get(jj - i);
                if i % 2 == 1 && jj % 2 == 0 {
                    let t = product(sp, &[Factor::Free, Factor::Space(jr), Factor::Space(ji)], d).unwrap();
                    assert!(t.contains(j.get(jj)), "{name}: T·J·J at ({i},{jj})");
                } else {
                    let p = product(sp, &[Factor::Space(jr), Factor::Space(ji)], d).unwrap();
                    let q = product(sp, &[Factor::Space(ji), Factor::Space(jr)], d).unwrap();
                    assert!(p.contains(j.get(jj)) && q.contains(j.get(jj)), "{name}: ({i},{jj})");
                }
            }
        }
        for i in 0..=6 {
            assert!(is_tif(sp, j.get(i), true, d).unwrap(), "{name}: J_{i} left t.i.f.");
            assert!(is_tif(sp, j.get(i), false, d).unwrap(), "{name}: J_{i} right t.i.f.");
        }
        let j3 = j.get(1).clone();
        let _ = j3;
    }
}

#[test]
fn j3_is_the_two_sided_intersection() {
    for (name, a) in families() {
        let j = compute_j(&a, 3).unwrap();
        let sp = a.space();
        let r = a.relation_space();
        let vr = product(sp, &[Factor::Length(1), Factor::Space(r)], a.bound()).unwrap();
        let rv = product(sp, &[Factor::Space(r), Factor::Length(1)], a.bound()).unwrap();
        assert_eq!(j.get(3), &vr.intersect(&rv).unwrap(), "{name}");
    }
}

#[test]
fn degree_one_algebras_match_jtilde() {
    for text in [TRUNC3, POLY2, MIXED, "gens x:1, y:1; rels x*x*y, y*x*x"] {
        let a = alg(text, 9);
        let j = compute_j_with(&a, 6, debug()).unwrap();
        let jt = compute_jtilde(&a, 6).unwrap();
        for i in 0..=6 {
            assert_eq!(j.get(i), jt.get(i), "{text}: J_{i}");
        }
    }
    let weighted = alg("gens x:1, z:2; rel x*z - z*x", 6);
    assert!(compute_jtilde(&weighted, 3).is_err());
}

#[test]
fn opposite_reverses_words() {
    for text in ["gens x:1, y:1; rels x*x*y, y*y*x*x", "gens x:1, y:1; rels x*y - 2*y*x, x^3", MIXED] {
        let p = parse_presentation(text).unwrap();
        let a = TruncatedAlgebra::new(&p, 9).unwrap();
        let b = TruncatedAlgebra::new(&p.opposite(), 9).unwrap();
        let ja = compute_j(&a, 5).unwrap();
        let jb = compute_j(&b, 5).unwrap();
        for i in 0..=5 {
            assert_eq!(&ja.get(i).reverse(a.space()), jb.get(i), "{text}: J_{i}");
        }
    }
}

#[test]
fn free_products_add() {
    let p = parse_presentation(TRUNC3).unwrap();
    let q = parse_presentation("gens y:1; rel y^2").unwrap();
    let pq = p.free_product(&q).unwrap();
    let d = 7;
    let a = TruncatedAlgebra::new(&pq, d).unwrap();
    let j = compute_j(&a, 5).unwrap();
    let sp = a.space();
    let ja = compute_j(&TruncatedAlgebra::new(&p, d).unwrap(), 5).unwrap();
    let jb = compute_j(&TruncatedAlgebra::new(&q, d).unwrap(), 5).unwrap();
    // x keeps index 0 and y becomes index 1
    let embed = |g: &GradedSubspace, shift: u8, from: &crate::tensoralg::WordSpace| {
        let parts = (0..=d)
            .map(|n| {
                g.part(n).embed(sp.ambient(n), |k| {
                    let w: Vec<u8> = from.word_at(n, k).into_iter().map(|c| c + shift).collect();
                    sp.index(&w)
                })
            })
            .collect();
        GradedSubspace::from_parts(parts)
    };
    for i in 1..=5 {
        let sum = embed(ja.get(i), 0, ja.space()).sum(&embed(jb.get(i), 1, jb.space())).unwrap();
        assert_eq!(j.get(i), &sum, "J_{i}");
    }
}

#[test]
fn composition_key_counts() {
    // k = 1: V^{m}·R·V^{N-m} for m = 0..=N
    assert_eq!(family::keys_for_test(1, 2, true), 3);
    assert_eq!(family::keys_for_test(1, 2, false), 2);
}

#[test]
fn special_decompositions() {
    let a = alg(TRUNC3, 12);
    let j = compute_j(&a, 6).unwrap();
    let t = special_summands(&j, &SpecialKind::TTilde(1), 4).unwrap();
    assert_eq!(t.summands().keys().copied().collect::<Vec<_>>(), vec![0]);
    assert_eq!(&t.summands()[&0], j.get(3).part(4));
    assert!(t.decompose(&SparseVec::new()).unwrap().is_empty());
    let x6 = poly(&a, "x^6");
    let sp = special_summands(&j, &SpecialKind::Tuple(vec![1, 3]), 6).unwrap();
    let parts = sp.decompose(&x6).unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts.get(&3), Some(&x6));
    let tt = special_summands(&j, &SpecialKind::T(1), 5).unwrap();
    assert_eq!(tt.summands().keys().copied().collect::<Vec<_>>(), vec![2]);
    assert_eq!(tt.decompose(&poly(&a, "x^5")).unwrap().get(&2), Some(&poly(&a, "x^5")));
    let p = alg(POLY2, 4);
    let jp = compute_j(&p, 2).unwrap();
    let t2 = special_summands(&jp, &SpecialKind::T(1), 2).unwrap();
    assert!(t2.decompose(&poly(&p, "x*y - y*x")).is_ok());
    assert!(t2.decompose(&poly(&p, "x*x")).is_err());
}

fn jb(i: usize, degree: usize) -> JBasis {
    JBasis { i, degree, index: 0 }
}

#[test]
fn iota_examples() {
    let a = alg(TRUNC3, 12);
    let j = compute_j(&a, 6).unwrap();
    let one = a.one();
    let m = iota2(&j, 2, 1).unwrap();
    assert_eq!(m.image(4, 0).unwrap(), &[(vec![jb(2, 3), jb(1, 1)], one.clone())].into_iter().collect::<Tensor>());
    let m = iota2(&j, 0, 3).unwrap();
    assert_eq!(m.image(4, 0).unwrap(), &[(vec![jb(0, 0), jb(3, 4)], one.clone())].into_iter().collect::<Tensor>());
    let m = iota2(&j, 1, 1).unwrap();
    assert!(m.image(3, 0).unwrap().is_empty());
    let m = iota_multi(&j, &[1, 1, 1]).unwrap();
    assert_eq!(
        m.image(3, 0).unwrap(),
        &[(vec![jb(1, 1), jb(1, 1), jb(1, 1)], one.clone())].into_iter().collect::<Tensor>()
    );
    let m = iota_multi(&j, &[3, 1, 1]).unwrap();
    assert_eq!(m.source, 4);
    assert_eq!(
        m.image(6, 0).unwrap(),
        &[(vec![jb(3, 4), jb(1, 1), jb(1, 1)], one)].into_iter().collect::<Tensor>()
    );
    let free = alg("gens x:1, y:1", 6);
    let jf = compute_j(&free, 4).unwrap();
    assert!(iota_multi(&jf, &[1, 1, 1]).unwrap().is_zero());
}

#[test]
fn jtilde_examples() {
    let a = alg(TRUNC3, 12);
    let jt = compute_jtilde(&a, 6).unwrap();
    for i in 0..=6 {
        assert_eq!(jt.get(i).total_dim(), 1);
        assert_eq!(jt.dim(i, n_s(3, i)), 1);
    }
    let p = alg(POLY2, 6);
    let jt = compute_jtilde(&p, 3).unwrap();
    assert_eq!(jt.get(2), p.relation_space());
    assert!(jt.get(3).is_zero());
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn relation() -> impl Strategy<Value = String> {
        (2usize..=3, proptest::collection::vec((-2i64..=2, 0u32..8), 1..=3)).prop_map(|(deg, terms)| {
            let mut out = String::new();
            for (c, bits) in terms {
                let word: Vec<&str> = (0..deg).map(|k| if bits >> k & 1 == 1 { "y" } else { "x" }).collect();
                let c = if c == 0 { 1 } else { c };
                out.push_str(&format!(" {} {}*{}", if c < 0 { '-' } else { '+' }, c.abs(), word.join("*")));
            }
            out
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

        #[test]
        fn j_equals_jtilde_and_is_tif(rels in proptest::collection::vec(relation(), 1..=2)) {
            let mut text = String::from("gens x:1, y:1\n");
            for r in &rels {
                text.push_str(&format!("rel {r}\n"));
            }
            let Ok(p) = parse_presentation(&text) else { return Ok(()) };
            let a = TruncatedAlgebra::new(&p, 7).unwrap();
            let j = compute_j(&a, 5).unwrap();
            let jt = compute_jtilde(&a, 5).unwrap();
            for i in 0..=5 {
                prop_assert_eq!(j.get(i), jt.get(i));
                prop_assert!(is_tif(a.space(), j.get(i), true, 7).unwrap());
                prop_assert!(is_tif(a.space(), j.get(i), false, 7).unwrap());
            }
        }
    }
}

#[test]
fn relation_text_parses() {
    assert!(parse_presentation("gens x:1, y:1\nrel  + 1*x*y - 2*y*x\n").is_ok());
    assert!(parse_presentation("gens x:1, y:1\nrel  - 1*x*y\n").is_ok());
}
