//! graph6 round trip and canonical relabelling.
//!
//! Reads graph6 lines from stdin if any are piped in.

use std::io::{self, IsTerminal};

use dmpsat::canon::canonical_graph;
use dmpsat::constructions::{cycle, p3_box_kt};
use dmpsat::graph6;

fn main() -> dmpsat::Result<()> {
    let mut graphs = Vec::new();
    if !io::stdin().is_terminal() {
        graphs = graph6::read_all(io::stdin().lock())?;
    }
    if graphs.is_empty() {
        graphs = vec![cycle(5)?, p3_box_kt(2)?];
    }
    for g in graphs {
        let s = graph6::encode(&g);
        assert_eq!(graph6::decode(&s)?, g);
        let c = canonical_graph(&g)?;
        println!("{s}  n={} m={}  canonical {}", g.n(), g.edge_count(), graph6::encode(&c));
    }
    Ok(())
}
