//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact
//! (integer dimensions, field elements); no numeric tolerance is involved.

use std::io::Write;
use std::time::Instant;

use multikoszul::cli::{corpus_text, expected_multikoszul, CORPUS};
use multikoszul::jspaces::{compute_j, compute_jtilde, JBasis};
use multikoszul::komplex::{
    bar_tor_oracle, build_bimodule_complex, decide_multikoszul, left_right_complexes, minimal_resolution, Status,
};
use multikoszul::linalg::Field;
use multikoszul::presentation::{parse_presentation, Presentation, TruncatedAlgebra};
use multikoszul::tensoralg::{subspace_product, GeneratorSet, GradedSubspace, TensorPoly, WordSpace};
use multikoszul::yoneda::{ainf_coproducts, twisted_complex_check, yoneda_products};

type Outcome = Result<(), String>;
type Criterion = (&'static str, bool, fn() -> Outcome);

fn pres(name: &str) -> Presentation {
    parse_presentation(corpus_text(name).unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn multikoszul_names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(n, _)| *n).filter(|n| expected_multikoszul(n))
}

/// Subspace product over one degree-1 generator.
fn c1() -> Outcome {
    let g = GeneratorSet::new(vec![("x".into(), 1)]).unwrap();
    let s = WordSpace::new(g, Field::Rational);
    let span = |ps: &[&str]| {
        let ps: Vec<TensorPoly> = ps.iter().map(|p| TensorPoly::parse(p, s.gens(), s.field()).unwrap()).collect();
        GradedSubspace::from_polys(&s, 6, &ps).unwrap()
    };
    let (w1, w2) = (span(&["x", "x^2"]), span(&["x^2", "x^3"]));
    let p = subspace_product(&s, &w1, &w2).map_err(|e| e.to_string())?;
    ensure(p.dims() == [0, 0, 0, 1, 1, 1, 0] && p.total_dim() == 3, || format!("internal product dims {:?}", p.dims()))?;
    ensure(w1.total_dim() * w2.total_dim() == 4, || "abstract tensor product".into())
}

/// k[x]/(x^N): J_i and Tor_i are one-dimensional exactly at the jump degree.
fn c2() -> Outcome {
    for big_n in 2..=4usize {
        let name = format!("trunc{big_n}");
        let d = 3 * big_n;
        let jump = |i: usize| if i.is_multiple_of(2) { big_n * i / 2 } else { big_n * (i / 2) + 1 };
        let a = TruncatedAlgebra::new(&pres(&name), d).map_err(|e| e.to_string())?;
        let j = compute_j(&a, 6).map_err(|e| e.to_string())?;
        let tor = minimal_resolution(&a, 6).tor_table();
        for i in 0..=6 {
            for n in 0..=d {
                let want = usize::from(n == jump(i));
                ensure(j.dim(i, n) == want && tor.get(i, n) == want, || {
                    format!("{name}: (i, n) = ({i}, {n}) J {} Tor {} expected {want}", j.dim(i, n), tor.get(i, n))
                })?;
            }
        }
        let v = decide_multikoszul(&pres(&name), 6, d).map_err(|e| e.to_string())?;
        ensure(v.is_multikoszul(), || format!("{name}: {}", v.status.label()))?;
    }
    Ok(())
}

/// Resolution Tor equals bar-complex Tor for i ≤ 4, n ≤ 8.
fn c3() -> Outcome {
    for (name, _) in CORPUS {
        let a = TruncatedAlgebra::new(&pres(name), 8).map_err(|e| e.to_string())?;
        let bar = bar_tor_oracle(&a, 4).map_err(|e| e.to_string())?;
        let res = minimal_resolution(&a, 4).tor_table();
        ensure(bar == res, || format!("{name}: bar {:?} vs resolution {:?}", bar.entries, res.entries))?;
    }
    Ok(())
}

/// The Tor = J verdict matches exactness of the left and of the right complex.
fn c4() -> Outcome {
    let (h, d) = (5, 10);
    for (name, _) in CORPUS {
        let p = pres(name);
        let v = decide_multikoszul(&p, h, d).map_err(|e| e.to_string())?;
        let a = TruncatedAlgebra::new(&p, d).map_err(|e| e.to_string())?;
        let j = compute_j(&a, h + 1).map_err(|e| e.to_string())?;
        let b = build_bimodule_complex(&a, &j).map_err(|e| e.to_string())?;
        let (l, r) = left_right_complexes(&a, &j, &b);
        for (side, c) in [("left", &l), ("right", &r)] {
            let hom = c.homology_table();
            let exact = (0..=hom.bounds.0).all(|i| (0..=d).all(|n| hom.get(i, n) == usize::from(i == 0 && n == 0)));
            ensure(exact == v.is_multikoszul(), || format!("{name}: {side} exact {exact}, verdict {}", v.status.label()))?;
        }
    }
    Ok(())
}

/// δ∘δ = 0 and minimality for all three complexes, i ≤ 6, n ≤ 12.
fn c5() -> Outcome {
    for (name, _) in CORPUS {
        let a = TruncatedAlgebra::new(&pres(name), 12).map_err(|e| e.to_string())?;
        let j = compute_j(&a, 6).map_err(|e| e.to_string())?;
        let b = build_bimodule_complex(&a, &j).map_err(|e| e.to_string())?;
        let (l, r) = left_right_complexes(&a, &j, &b);
        for (side, c) in [("bimodule", &b), ("left", &l), ("right", &r)] {
            let v = c.verify();
            ensure(v.ok, || format!("{name} {side}: δ∘δ ≠ 0 at {:?}", v.failure))?;
            ensure(c.is_minimal(), || format!("{name} {side}: not minimal"))?;
        }
    }
    Ok(())
}

/// Σ (−1)^i h_{J_i}(t) h_A(t) ≡ 1 mod t^13 on the multi-Koszul corpus.
fn c6() -> Outcome {
    const D: usize = 12;
    for name in multikoszul_names() {
        let p = pres(name);
        if !decide_multikoszul(&p, 6, D).map_err(|e| e.to_string())?.is_multikoszul() {
            return Err(format!("{name}: not reported multi-Koszul"));
        }
        let a = TruncatedAlgebra::new(&p, D).map_err(|e| e.to_string())?;
        // enough levels that J_{top} vanishes through degree D
        let top = D + 1;
        let j = compute_j(&a, top).map_err(|e| e.to_string())?;
        ensure((0..=D).all(|n| j.dim(top, n) == 0), || format!("{name}: J_{top} nonzero below t^13"))?;
        let ha = a.hilbert_series();
        let mut sum = vec![0i64; D + 1];
        for i in 0..=top {
            for x in 0..=D {
                let jx = j.dim(i, x) as i64;
                if jx == 0 {
                    continue;
                }
                for y in 0..=D - x {
                    let term = jx * ha[y] as i64;
                    sum[x + y] += if i % 2 == 0 { term } else { -term };
                }
            }
        }
        ensure(sum.iter().enumerate().all(|(n, &c)| c == i64::from(n == 0)), || format!("{name}: {sum:?}"))?;
    }
    Ok(())
}

/// J_i = J̃_i as subspaces for algebras generated in degree 1, i ≤ 6, n ≤ 10.
fn c7() -> Outcome {
    let mut seen = 0;
    for (name, _) in CORPUS {
        let p = pres(name);
        if p.gens.degrees().iter().any(|&g| g != 1) {
            continue;
        }
        seen += 1;
        let a = TruncatedAlgebra::new(&p, 10).map_err(|e| e.to_string())?;
        let j = compute_j(&a, 6).map_err(|e| e.to_string())?;
        let jt = compute_jtilde(&a, 6).map_err(|e| e.to_string())?;
        for i in 0..=6 {
            ensure(j.get(i) == jt.get(i), || format!("{name}: J_{i} ≠ J̃_{i}"))?;
        }
    }
    ensure(seen >= 6, || format!("only {seen} algebras generated in degree 1"))
}

/// Opposite algebras share the verdict; free products of multi-Koszul algebras
/// are multi-Koszul with additive J dimensions.
fn c8() -> Outcome {
    let (h, d) = (4, 10);
    for (name, _) in CORPUS {
        let p = pres(name);
        let v = decide_multikoszul(&p, h, d).map_err(|e| e.to_string())?;
        let w = decide_multikoszul(&p.opposite(), h, d).map_err(|e| e.to_string())?;
        ensure(v.status.label() == w.status.label(), || format!("{name}: {} vs opposite {}", v.status.label(), w.status.label()))?;
    }
    let (h, d) = (4, 8);
    for (x, y) in [("trunc2", "trunc3"), ("poly2", "trunc3"), ("trunc4", "weighted"), ("free2", "trunc2")] {
        let (p, q) = (pres(x), pres(y));
        let pq = p.free_product(&q).map_err(|e| e.to_string())?;
        let v = decide_multikoszul(&pq, h, d).map_err(|e| e.to_string())?;
        ensure(v.is_multikoszul(), || format!("{x} * {y}: {}", v.status.label()))?;
        let jd = |p: &Presentation| -> Result<_, String> {
            let a = TruncatedAlgebra::new(p, d).map_err(|e| e.to_string())?;
            compute_j(&a, h).map_err(|e| e.to_string())
        };
        let (jp, jq, jpq) = (jd(&p)?, jd(&q)?, jd(&pq)?);
        for i in 1..=h {
            for n in 0..=d {
                let sum = jp.dim(i, n) + jq.dim(i, n);
                ensure(jpq.dim(i, n) == sum, || format!("{x} * {y}: J_{i} in degree {n} is {} not {sum}", jpq.dim(i, n)))?;
            }
        }
    }
    Ok(())
}

/// A∞ structure of k[x]/(x^3) at D = 12.
fn c9() -> Outcome {
    let a = TruncatedAlgebra::new(&pres("trunc3"), 12).map_err(|e| e.to_string())?;
    let j = compute_j(&a, 6).map_err(|e| e.to_string())?;
    let s = ainf_coproducts(&j, 4).map_err(|e| e.to_string())?;
    let bad: Vec<&JBasis> = s.basis.iter().filter(|b| !s.coalgebra_identity(3, b).is_empty()).collect();
    ensure(bad.is_empty(), || format!("Δ_2 not coassociative on {bad:?}"))?;
    let r = s.check_stasheff();
    ensure(r.ok() && r.max_arity >= 4, || format!("Stasheff: {:?}", r.violations.first()))?;
    let xi = JBasis { i: 1, degree: 1, index: 0 };
    ensure(!s.product(&[xi, xi, xi]).is_empty(), || "m_3(ξ, ξ, ξ) = 0".into())?;
    ensure(s.product(&[xi, xi]).is_empty(), || "m_2 nonzero on J_1^# ⊗ J_1^#".into())?;
    let t = yoneda_products(&j, 2).map_err(|e| e.to_string())?;
    ensure(t.product(&xi, &xi).is_some_and(|v| v.is_zero()), || "Yoneda square of ξ nonzero".into())?;
    let tw = twisted_complex_check(&s, &a, &j).map_err(|e| e.to_string())?;
    ensure(tw.equal && tw.compared > 0, || format!("twisted differential differs at {:?}", tw.mismatches))
}

/// Ext generated by degrees 1 and 2 up to cohomological degree 6.
fn c10() -> Outcome {
    for name in multikoszul_names() {
        let a = TruncatedAlgebra::new(&pres(name), 12).map_err(|e| e.to_string())?;
        let j = compute_j(&a, 6).map_err(|e| e.to_string())?;
        let t = yoneda_products(&j, 6).map_err(|e| e.to_string())?;
        let r = t.k2_check(6);
        ensure(r.ok(), || format!("{name}: {:?}", r.failures))?;
    }
    Ok(())
}

/// Super Yang-Mills YM(2, 1) with a nondegenerate Γ at H = 4, D = 12.
fn c11() -> Outcome {
    let v = decide_multikoszul(&pres("sym_2_1"), 4, 12).map_err(|e| e.to_string())?;
    match &v.status {
        Status::InconclusiveCap { reason } => Err(format!("cap: {reason}")),
        Status::NotMultiKoszul { witness, j_dim, tor_dim } => Err(format!("Tor/J mismatch at {witness:?}: {j_dim} vs {tor_dim}")),
        Status::MultiKoszulUpToBounds => Ok(()),
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("1 subspace product dimensions", true, c1),
        ("2 truncated polynomial algebras", true, c2),
        ("3 bar oracle equals resolution", true, c3),
        ("4 verdict equals complex exactness", true, c4),
        ("5 complexes square to zero and are minimal", true, c5),
        ("6 Euler characteristic identity", true, c6),
        ("7 J equals J-tilde", true, c7),
        ("8 opposite and free product closure", true, c8),
        ("9 A-infinity suite on k[x]/(x^3)", true, c9),
        ("10 K2 generation", true, c10),
        ("11 super Yang-Mills (non-gating)", false, c11),
    ];
    let mut failed = Vec::new();
    for (label, gating, f) in criteria {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        let line = match &r {
            Ok(()) => format!("PASS {label} ({secs:.2}s)\n"),
            Err(e) => format!("FAIL {label} ({secs:.2}s): {e}\n"),
        };
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
        if r.is_err() && gating {
            failed.push(label);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
