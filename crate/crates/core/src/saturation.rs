//! Saturation and k-saturation with certificates.
//!
//! `G` is saturated when every added edge strictly increases `mp`. It is
//! k-saturated when `mp(G) < k` and every added edge raises `mp` to at least
//! `k`; complete graphs `K_m` with `m <= k - 1` qualify vacuously.

use rayon::prelude::*;

use crate::graph::{Graph, Pair};
use crate::mp::{mp, mp_reaches, mp_witness, DmPath};

/// A non-edge whose addition breaks the tested predicate, with the exact
/// `mp(G + e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub non_edge: Pair,
    pub mp_after: usize,
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub mp_value: usize,
    pub saturated: bool,
    pub k: Option<usize>,
    pub k_saturated: Option<bool>,
    /// Non-edges breaking the tested predicate: "mp increases" when `k` is
    /// `None`, otherwise "mp(G + e) >= k". Listed in lexicographic order.
    pub violations: Vec<Violation>,
    /// For every non-edge satisfying the tested predicate, a longest
    /// monotone path in `G + e`.
    pub witnesses: Vec<(Pair, DmPath)>,
}

impl SaturationReport {
    /// Whether the tested predicate holds.
    pub fn holds(&self) -> bool {
        self.k_saturated.unwrap_or(self.saturated)
    }
}

struct Addition {
    pair: Pair,
    path: DmPath,
    graph: Graph,
}

fn additions(g: &Graph) -> Vec<Addition> {
    g.non_edges()
        .into_par_iter()
        .map(|(u, v)| {
            let h = g.add_edge(u, v).expect("non-edge");
            Addition {
                pair: (u, v),
                path: mp_witness(&h),
                graph: h,
            }
        })
        .collect()
}

fn report(g: &Graph, k: Option<usize>) -> SaturationReport {
    let mp_value = mp(g);
    let adds = additions(g);
    let saturated = adds.iter().all(|a| a.path.len() > mp_value);
    let threshold = k.unwrap_or(mp_value + 1);
    let mut violations = Vec::new();
    let mut witnesses = Vec::new();
    for a in adds {
        debug_assert!(a.path.is_valid_in(&a.graph));
        if a.path.len() >= threshold {
            witnesses.push((a.pair, a.path));
        } else {
            violations.push(Violation {
                non_edge: a.pair,
                mp_after: a.path.len(),
            });
        }
    }
    let k_saturated = k.map(|k| mp_value < k && violations.is_empty());
    SaturationReport {
        mp_value,
        saturated,
        k,
        k_saturated,
        violations,
        witnesses,
    }
}

/// Full saturation report (every non-edge examined).
pub fn is_saturated(g: &Graph) -> SaturationReport {
    report(g, None)
}

/// Full k-saturation report. Also fills in plain saturation.
pub fn is_k_saturated(g: &Graph, k: usize) -> SaturationReport {
    assert!(k >= 2, "k-saturation needs k >= 2");
    report(g, Some(k))
}

/// Early-exit saturation test without certificates.
pub fn saturated_fast(g: &Graph) -> bool {
    let base = mp(g);
    g.non_edges()
        .into_iter()
        .all(|(u, v)| mp_reaches(&g.add_edge(u, v).expect("non-edge"), base + 1))
}

/// Early-exit k-saturation test without certificates.
pub fn k_saturated_fast(g: &Graph, k: usize) -> bool {
    if mp_reaches(g, k) {
        return false;
    }
    g.non_edges()
        .into_iter()
        .all(|(u, v)| mp_reaches(&g.add_edge(u, v).expect("non-edge"), k))
}
