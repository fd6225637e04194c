//! Parse a presentation and print the Hilbert series of the algebra.
//!
//! cargo run --example hilbert -- [corpus-name-or-file] [D]

use multikoszul::cli::load;
use multikoszul::presentation::TruncatedAlgebra;

fn main() -> Result<(), multikoszul::Error> {
    let mut args = std::env::args().skip(1);
    let input = args.next().unwrap_or_else(|| "mixed".into());
    let d: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let p = load(&input, None)?;
    print!("{}", p.to_text());
    let a = TruncatedAlgebra::new(&p, d)?;
    for (n, h) in a.hilbert_series().iter().enumerate() {
        println!("dim A_{n:<2} = {h}");
    }
    for w in a.warnings() {
        println!("warning: {w}");
    }
    Ok(())
}
