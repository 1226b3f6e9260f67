//! Longest degree-monotone path of a few small graphs, with a witness.
//!
//! cargo run --example mp_witness [graph6...]

use dmpsat::constructions::{bowtie, p3_box_kt, path, star};
use dmpsat::graph6;
use dmpsat::mp::{mp_oracle, mp_witness};
use dmpsat::Graph;

fn main() -> dmpsat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let graphs: Vec<(String, Graph)> = if args.is_empty() {
        vec![
            ("P5".into(), path(5)?),
            ("K1,4".into(), star(5)?),
            ("bowtie".into(), bowtie()),
            ("P3 x K2".into(), p3_box_kt(2)?),
        ]
    } else {
        args.iter()
            .map(|s| graph6::decode(s).map(|g| (s.clone(), g)))
            .collect::<dmpsat::Result<_>>()?
    };
    for (name, g) in graphs {
        let w = mp_witness(&g);
        print!("{name:<10} mp = {}  path {:?}  degrees {:?}", w.len(), w.vertices(), w.degrees());
        if let Ok(check) = mp_oracle(&g) {
            print!("  (brute force {check})");
        }
        println!();
    }
    Ok(())
}
