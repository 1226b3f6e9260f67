//! Saturation reports: which added edges lengthen the longest monotone path.

use dmpsat::constructions::{g_counterexample, path, star};
use dmpsat::saturation::{is_k_saturated, is_saturated, SaturationReport};

fn show(name: &str, r: &SaturationReport) {
    print!("{name}: mp {}, saturated {}", r.mp_value, r.saturated);
    if let (Some(k), Some(ks)) = (r.k, r.k_saturated) {
        print!(", {k}-saturated {ks}");
    }
    println!();
    for v in &r.violations {
        println!("  adding {:?} only reaches mp {}", v.non_edge, v.mp_after);
    }
    for (e, p) in r.witnesses.iter().take(3) {
        println!("  adding {e:?}: path {:?}", p.vertices());
    }
}

fn main() -> dmpsat::Result<()> {
    show("star K1,5", &is_saturated(&star(6)?));
    show("star K1,5 (k=4)", &is_k_saturated(&star(6)?, 4));
    show("P4", &is_saturated(&path(4)?));
    for n in 3..=5 {
        show(&format!("cycle+hub n={n} (k=5)"), &is_k_saturated(&g_counterexample(n)?, 5));
    }
    Ok(())
}
