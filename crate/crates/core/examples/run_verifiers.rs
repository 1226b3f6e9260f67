//! Runs every verifier and prints counterexamples, if any.
//!
//! cargo run --release --example run_verifiers [max_n]

use dmpsat::verify::{verify, Verifier};

fn main() -> dmpsat::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for v in Verifier::ALL {
        let r = verify(v, max_n)?;
        println!("{:<20} {:>7} checked  {}", v.name(), r.checked, if r.passed() { "ok" } else { "FAILED" });
        for c in &r.counterexamples {
            println!("    {}  {}", c.graph6, c.detail);
        }
    }
    Ok(())
}
