//! Yoneda products on Ext and the check that degrees 1 and 2 generate.

use multikoszul::cli::load;
use multikoszul::jspaces::{compute_j, JBasis};
use multikoszul::presentation::TruncatedAlgebra;
use multikoszul::yoneda::yoneda_products;

fn main() -> Result<(), multikoszul::Error> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "trunc3".into());
    let p = load(&input, None)?;
    let a = TruncatedAlgebra::new(&p, 12)?;
    let j = compute_j(&a, 6)?;
    let t = yoneda_products(&j, 6)?;
    let e = |i, degree| JBasis { i, degree, index: 0 };
    if input == "trunc3" {
        for (x, y) in [(e(1, 1), e(1, 1)), (e(1, 1), e(2, 3)), (e(2, 3), e(2, 3))] {
            let z = t.product(&x, &y).unwrap();
            println!("ξ{}·ξ{} = {}", x.i, y.i, if z.is_zero() { "0" } else { "nonzero" });
        }
    }
    let k2 = t.k2_check(6);
    println!("generated by degrees 1 and 2 up to 6: {}", k2.ok());
    println!("unital: {}, associative: {}", t.unit_ok(), t.associativity_failures().is_empty());
    Ok(())
}
