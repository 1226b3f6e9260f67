//! Exhaustive h(n, k) with all minimum certificates.
//!
//! cargo run --release --example h_search [n] [k] [jobs]

use dmpsat::graph6;
use dmpsat::saturation::is_k_saturated;
use dmpsat::search::h_search_with_jobs;

fn main() -> dmpsat::Result<()> {
    let arg = |i: usize, d: usize| std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (n, k, jobs) = (arg(1, 7), arg(2, 4), arg(3, 4));
    let r = h_search_with_jobs(n, k, jobs)?;
    println!(
        "h({n},{k}) = {:?}  ({} classes, {:.2?})",
        r.h_value, r.classes_examined, r.elapsed
    );
    for g in r.certificate_graphs() {
        let report = is_k_saturated(&g, k);
        println!("  {}  mp {}  re-verified {}", graph6::encode(&g), report.mp_value, report.holds());
    }
    Ok(())
}
