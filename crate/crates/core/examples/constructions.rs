//! Every named family with its size, edge count and mp, next to the
//! closed-form prediction.

use dmpsat::constructions::{Family, FamilySpec};
use dmpsat::graph6;
use dmpsat::mp::mp;

fn main() -> dmpsat::Result<()> {
    let cases: Vec<(Family, Option<usize>, bool, usize)> = vec![
        (Family::Star, Some(6), false, 1),
        (Family::Matching, Some(6), false, 1),
        (Family::MatchingPlusP3, Some(7), false, 1),
        (Family::TrianglePacking, Some(9), false, 1),
        (Family::K4MinusE, None, false, 2),
        (Family::Bowtie, None, false, 1),
        (Family::K5MinusE, None, false, 1),
        (Family::P3BoxKt, Some(3), false, 2),
        (Family::P3BoxKt, Some(2), true, 1),
        (Family::GCounterexample, Some(4), false, 1),
        (Family::H4Extremal, Some(8), false, 1),
        (Family::FiveSatMix, Some(17), false, 1),
    ];
    for (family, param, cone, copies) in cases {
        let spec = FamilySpec { family, param, cone, copies };
        let g = spec.build()?;
        let (v, e, m) = spec.expected()?;
        println!(
            "{:<16} param {:<5} cone {:<5} x{copies}  |V| {:>2} |E| {:>3} mp {:>2}  expected ({v}, {e}, {m})  {}",
            family.to_string(),
            param.map_or("-".to_string(), |p| p.to_string()),
            cone,
            g.n(),
            g.edge_count(),
            mp(&g),
            graph6::encode(&g)
        );
    }
    Ok(())
}
