//! Counts isomorphism classes of graphs on n vertices by edge count.
//!
//! cargo run --release --example enumerate_classes [max_n]

use std::time::Instant;

use dmpsat::enumerate::class_counts_by_edges;

fn main() -> dmpsat::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for n in 1..=max_n {
        let start = Instant::now();
        let counts = class_counts_by_edges(n)?;
        let total: usize = counts.iter().sum();
        println!("n={n}: {total} classes in {:.2?}  by edges {counts:?}", start.elapsed());
    }
    Ok(())
}
