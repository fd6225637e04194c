//! The A∞-coalgebra on J, its Stasheff identities and the twisted tensor product.

use multikoszul::cli::load;
use multikoszul::jspaces::{compute_j, JBasis};
use multikoszul::presentation::TruncatedAlgebra;
use multikoszul::yoneda::{ainf_coproducts, twisted_complex_check};

fn main() -> Result<(), multikoszul::Error> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "trunc3".into());
    let p = load(&input, None)?;
    let a = TruncatedAlgebra::new(&p, 12)?;
    let j = compute_j(&a, 6)?;
    let s = ainf_coproducts(&j, 4)?;
    for (n, d) in &s.coproducts {
        let nonzero = d.values().filter(|t| !t.is_empty()).count();
        println!("Δ_{n}: nonzero on {nonzero} of {} basis elements", d.len());
    }
    let xi = JBasis { i: 1, degree: 1, index: 0 };
    for (b, c) in s.product(&[xi, xi, xi]) {
        println!("m_3(ξ, ξ, ξ) has coefficient {c} on the dual of J_{}, degree {}", b.i, b.degree);
    }
    let r = s.check_stasheff();
    println!("Stasheff identities through arity {}: {} ({} checked)", r.max_arity, r.ok(), r.checked);
    let tw = twisted_complex_check(&s, &a, &j)?;
    println!("twisted tensor product equals the right complex: {} ({} images)", tw.equal, tw.compared);
    Ok(())
}
