//! Run the property suite over the shipped corpus.

use multikoszul::cli::run_suite;

fn main() -> Result<(), multikoszul::Error> {
    let r = run_suite(4, 8, None, (3, 6))?;
    for (name, e) in &r.entries {
        let failed: Vec<&String> = e.checks.iter().filter(|(_, ok)| !**ok).map(|(c, _)| c).collect();
        println!("{name:<10} {:<26} {}", e.verdict, if failed.is_empty() { "ok".to_string() } else { format!("{failed:?}") });
    }
    println!("suite ok: {}", r.ok());
    Ok(())
}
