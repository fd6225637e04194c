//! Decide multi-Koszulity up to degree bounds for every shipped algebra.

use multikoszul::cli::{corpus_text, CORPUS};
use multikoszul::komplex::decide_multikoszul;
use multikoszul::presentation::parse_presentation;

fn main() -> Result<(), multikoszul::Error> {
    for (name, _) in CORPUS {
        let p = parse_presentation(corpus_text(name).unwrap())?;
        let v = decide_multikoszul(&p, 5, 10)?;
        match v.witness() {
            Some((i, n)) => println!("{name:<10} {} at (i, n) = ({i}, {n})", v.status.label()),
            None => println!("{name:<10} {}", v.status.label()),
        }
    }
    Ok(())
}
