//! Tor(k, k) from a minimal resolution, checked against the bar complex.

use multikoszul::cli::load;
use multikoszul::komplex::{bar_tor_oracle, minimal_resolution};
use multikoszul::presentation::TruncatedAlgebra;

fn main() -> Result<(), multikoszul::Error> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "nonkoszul".into());
    let p = load(&input, None)?;
    let a = TruncatedAlgebra::new(&p, 8)?;
    let res = minimal_resolution(&a, 4);
    let tor = res.tor_table();
    let bar = bar_tor_oracle(&a, 4)?;
    for i in 0..=4 {
        println!("Tor_{i}: {:?}", tor.row(i));
    }
    println!("bar complex agrees: {}", tor == bar);
    println!("resolution minimal: {}, is a complex: {}", res.is_minimal(&a), res.is_complex());
    Ok(())
}
