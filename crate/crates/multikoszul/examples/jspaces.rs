//! The J spaces of an algebra: dimensions, structural zeros and bases.
//!
//! cargo run --example jspaces -- [corpus-name-or-file] [H] [D]

use multikoszul::cli::load;
use multikoszul::jspaces::compute_j;
use multikoszul::presentation::TruncatedAlgebra;

fn main() -> Result<(), multikoszul::Error> {
    let mut args = std::env::args().skip(1);
    let input = args.next().unwrap_or_else(|| "trunc3".into());
    let h: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let d: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let p = load(&input, None)?;
    let a = TruncatedAlgebra::new(&p, d)?;
    let j = compute_j(&a, h)?;
    for i in 0..=h {
        let row: Vec<String> = (0..=d)
            .map(|n| match j.dim(i, n) {
                _ if j.structurally_zero(i, n) => "-".into(),
                0 => ".".into(),
                k => k.to_string(),
            })
            .collect();
        println!("J_{i}: {}", row.join(" "));
    }
    for i in 1..=h.min(3) {
        for n in j.get(i).degrees() {
            for q in j.get(i).basis_polys(j.space(), n) {
                println!("  (J_{i})_{n} ∋ {}", q.display(&p.gens));
            }
        }
    }
    for note in j.notes() {
        println!("note: {note}");
    }
    Ok(())
}
