//! Build the bimodule, left and right multi-Koszul complexes and verify them.

use multikoszul::cli::load;
use multikoszul::jspaces::compute_j;
use multikoszul::komplex::{build_bimodule_complex, left_right_complexes};
use multikoszul::presentation::TruncatedAlgebra;

fn main() -> Result<(), multikoszul::Error> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "trunc3".into());
    let p = load(&input, None)?;
    let a = TruncatedAlgebra::new(&p, 10)?;
    let j = compute_j(&a, 5)?;
    let bi = build_bimodule_complex(&a, &j)?;
    let (left, right) = left_right_complexes(&a, &j, &bi);
    for (name, c) in [("bimodule", &bi), ("left", &left), ("right", &right)] {
        let v = c.verify();
        println!("{name:<9} δ∘δ = 0: {:<5} minimal: {}", v.ok, c.is_minimal());
    }
    let hl = left.homology_table();
    println!("left complex homology (should be k in degree (0, 0) only):");
    for i in 0..=hl.bounds.0 {
        println!("  H_{i}: {:?}", hl.row(i));
    }
    Ok(())
}
