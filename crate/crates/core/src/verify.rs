//! Executable checks of the structural results on `mp`-saturation.
//!
//! Each verifier runs an exhaustive or parameter-swept check and collects
//! every counterexample (graph6 plus a short reason). An empty list is a pass.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{exact_h, upper_bound_5, upper_bound_even, upper_bound_odd};
use crate::canon::canonical_form;
use crate::constructions::{
    complete, cone, five_sat_mix, h4_extremal,
    k5_minus_e, matching, matching_plus_p3, p3_box_kt,
};
use crate::enumerate::{enumerate_graphs, levels, ENUM_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{copies, disjoint_union, Graph};
use crate::graph6;
use crate::mp::mp;
use crate::saturation::{k_saturated_fast, saturated_fast};
use crate::search::h_search;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verifier {
    /// Connected `G`, leaf `u`, max-degree `v` (`Δ >= 2`) non-adjacent: `mp(G+uv) <= mp(G)`.
    LeafMaxDegree,
    /// A tree on `n >= 3` vertices is saturated iff it is a star.
    SaturatedTrees,
    /// No graph on `n >= 3` vertices with fewer than `n` edges is k-saturated for any `k >= 4`.
    LinearLowerBound,
    /// `p` copies of `P_3 □ K_t` are `(2t+1)`-saturated with the odd-k edge count.
    OddKProducts,
    /// Coning a saturated graph adds one to `mp` and keeps it saturated.
    ConeLift,
    /// The cone over `P_3 □ K_t` is `(2t+2)`-saturated with the even-k edge count,
    /// and so is the cone over `p` copies. Disjoint copies of the cone are not.
    EvenKCones,
    /// Disjoint mixes of `P_3 □ K_2`, `K_5 - e`, `K_4` are 5-saturated.
    K5Mix,
    /// `h(n,2) = 0` and `h(n,3) = ceil(n/2)`.
    SmallKExact,
    /// Connected, `|E| <= |V|`, `mp` in `{2,3}`: saturated iff star or `K_3`.
    SparseConnected,
    /// `h(n,4) = n` for `n = 0 mod 3`, else `n + 1`.
    K4Exact,
}

impl Verifier {
    pub const ALL: [Verifier; 10] = [
        Verifier::LeafMaxDegree,
        Verifier::SaturatedTrees,
        Verifier::LinearLowerBound,
        Verifier::OddKProducts,
        Verifier::ConeLift,
        Verifier::EvenKCones,
        Verifier::K5Mix,
        Verifier::SmallKExact,
        Verifier::SparseConnected,
        Verifier::K4Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verifier::LeafMaxDegree => "leaf-max-degree",
            Verifier::SaturatedTrees => "saturated-trees",
            Verifier::LinearLowerBound => "linear-lower-bound",
            Verifier::OddKProducts => "odd-k-products",
            Verifier::ConeLift => "cone-lift",
            Verifier::EvenKCones => "even-k-cones",
            Verifier::K5Mix => "k5-mix",
            Verifier::SmallKExact => "small-k-exact",
            Verifier::SparseConnected => "sparse-connected",
            Verifier::K4Exact => "k4-exact",
        }
    }
}

impl fmt::Display for Verifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verifier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Verifier::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownVerifier(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub verifier: Verifier,
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Acc {
    checked: usize,
    bad: Vec<Counterexample>,
}

impl Acc {
    fn new() -> Self {
        Acc {
            checked: 0,
            bad: Vec::new(),
        }
    }

    fn check(&mut self, g: &Graph, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.bad.push(Counterexample {
                graph6: graph6::encode(g),
                detail: detail(),
            });
        }
    }
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    levels(n)
        .expect("n within enumeration limit")
        .flat_map(|(_, l)| l.into_iter().map(|f| f.to_graph()))
}

fn is_star(g: &Graph) -> bool {
    g.is_tree() && g.max_degree() == g.n() - 1
}

/// Runs one verifier. `max_n` bounds the exhaustive sweeps (clamped to the
/// enumeration limit); the construction sweeps use fixed parameter ranges.
pub fn verify(v: Verifier, max_n: usize) -> Result<VerifyReport> {
    let max_n = max_n.min(ENUM_MAX_VERTICES);
    let mut acc = Acc::new();
    match v {
        Verifier::LeafMaxDegree => {
            for n in 2..=max_n {
                for g in all_graphs(n).filter(Graph::is_connected) {
                    let delta = g.max_degree();
                    if delta < 2 {
                        continue;
                    }
                    let base = mp(&g);
                    for u in (0..n).filter(|&u| g.degree(u) == 1) {
                        for w in (0..n).filter(|&w| g.degree(w) == delta && !g.has_edge(u, w)) {
                            let after = mp(&g.add_edge(u, w)?);
                            acc.check(&g, after <= base, || {
                                format!("adding ({u},{w}) raises mp {base} -> {after}")
                            });
                        }
                    }
                }
            }
        }
        Verifier::SaturatedTrees => {
            for n in 3..=max_n {
                for g in enumerate_graphs(n, Some(n - 1))?.filter(Graph::is_tree) {
                    let sat = saturated_fast(&g);
                    let star = is_star(&g);
                    acc.check(&g, sat == star, || format!("saturated={sat} star={star}"));
                }
            }
        }
        Verifier::LinearLowerBound => {
            for n in 3..=max_n {
                for (_, level) in levels(n)?.take(n) {
                    for g in level.iter().map(|f| f.to_graph()) {
                        let base = mp(&g);
                        let min_after = g
                            .non_edges()
                            .into_iter()
                            .map(|(a, b)| mp(&g.add_edge(a, b).expect("non-edge")))
                            .min()
                            .unwrap_or(usize::MAX);
                        // k-saturated for some k >= 4 iff max(4, mp+1) <= min mp(G+e)
                        let some_k = min_after >= (base + 1).max(4);
                        acc.check(&g, !some_k, || {
                            format!("{} edges, mp {base}, min mp(G+e) {min_after}", g.edge_count())
                        });
                    }
                }
            }
        }
        Verifier::OddKProducts => {
            for t in 1..=5 {
                let k = 2 * t + 1;
                for p in 1..=3 {
                    let g = copies(&p3_box_kt(t)?, p)?;
                    let m = mp(&g);
                    let sat = k_saturated_fast(&g, k);
                    let bound = upper_bound_odd(g.n(), k)?;
                    acc.check(&g, m == 2 * t && sat && g.edge_count() == bound, || {
                        format!("t={t} p={p}: mp {m}, {k}-saturated {sat}, edges {} vs {bound}", g.edge_count())
                    });
                }
            }
        }
        Verifier::ConeLift => {
            for n in 1..max_n {
                for g in all_graphs(n).filter(saturated_fast) {
                    let h = cone(&g)?;
                    let (a, b) = (mp(&g), mp(&h));
                    let sat = saturated_fast(&h);
                    acc.check(&g, b == a + 1 && sat, || {
                        format!("mp {a} -> cone mp {b}, cone saturated {sat}")
                    });
                }
            }
        }
        Verifier::EvenKCones => {
            for t in 2..=4 {
                let k = 2 * t + 2;
                let base = p3_box_kt(t)?;
                let h = cone(&base)?;
                let m = mp(&h);
                let sat = k_saturated_fast(&h, k);
                let bound = upper_bound_even(h.n(), k)?;
                acc.check(&h, m == k - 1 && sat && h.edge_count() == bound, || {
                    format!("t={t} cone: mp {m}, {k}-saturated {sat}, edges {} vs {bound}", h.edge_count())
                });
                // two copies of the cone are not k-saturated: joining one apex
                // to a middle-row vertex of the other copy stays at mp k - 1
                let two = copies(&h, 2)?;
                let apex = h.n() - 1;
                let mid = h.n() + t;
                let after = mp(&two.add_edge(apex, mid)?);
                acc.check(&two, after == k - 1, || {
                    format!("t={t} two cones joined apex-to-middle: mp {after}")
                });
                for p in 1..=3 {
                    let g = cone(&copies(&base, p)?)?;
                    let m = mp(&g);
                    let sat = k_saturated_fast(&g, k);
                    acc.check(&g, m == k - 1 && sat, || {
                        format!("t={t} cone of {p} copies: mp {m}, {k}-saturated {sat}")
                    });
                }
            }
        }
        Verifier::K5Mix => {
            for n in 8..=40 {
                let g = five_sat_mix(n)?;
                let sat = k_saturated_fast(&g, 5);
                let bound = upper_bound_5(n)?;
                acc.check(&g, sat && g.edge_count() == bound, || {
                    format!("n={n}: 5-saturated {sat}, edges {} vs {bound}", g.edge_count())
                });
            }
            let parts = [p3_box_kt(2)?, k5_minus_e(), complete(4)?];
            for g in mixes(&parts, 20) {
                let sat = k_saturated_fast(&g, 5);
                acc.check(&g, sat, || "mix not 5-saturated".to_string());
            }
        }
        Verifier::SmallKExact => {
            for n in 2..=max_n {
                let r = h_search(n, 2)?;
                let edgeless = canonical_form(&Graph::empty(n)?)?;
                acc.check(&Graph::empty(n)?, r.h_value == Some(0) && r.certificates == [edgeless], || {
                    format!("h({n},2) search gave {:?}", r.h_value)
                });
                let r = h_search(n, 3)?;
                let want = exact_h(n, 3)?;
                let witness = if n % 2 == 0 { matching(n)? } else { matching_plus_p3(n)? };
                let has = r.certificates.contains(&canonical_form(&witness)?);
                acc.check(&witness, r.h_value == Some(want) && has, || {
                    format!("h({n},3) search gave {:?}, closed form {want}, construction certified {has}", r.h_value)
                });
            }
        }
        Verifier::SparseConnected => {
            for n in 2..=max_n {
                for (m, level) in levels(n)?.take(n + 1) {
                    if m + 1 < n {
                        continue;
                    }
                    for g in level.iter().map(|f| f.to_graph()).filter(Graph::is_connected) {
                        let value = mp(&g);
                        if !(2..=3).contains(&value) {
                            continue;
                        }
                        let sat = saturated_fast(&g);
                        let expected = if value == 2 { is_star(&g) } else { n == 3 && g.is_complete() };
                        acc.check(&g, sat == expected, || {
                            format!("mp {value}: saturated={sat}, star-or-triangle={expected}")
                        });
                    }
                }
            }
        }
        Verifier::K4Exact => {
            for n in 3..=max_n {
                let r = h_search(n, 4)?;
                let want = exact_h(n, 4)?;
                let g = h4_extremal(n)?;
                let has = r.certificates.contains(&canonical_form(&g)?);
                acc.check(&g, r.h_value == Some(want) && has, || {
                    format!("h({n},4) search gave {:?}, closed form {want}, construction certified {has}", r.h_value)
                });
            }
        }
    }
    Ok(VerifyReport {
        verifier: v,
        checked: acc.checked,
        counterexamples: acc.bad,
    })
}

/// Every non-empty disjoint union of the given parts with at most `max_n` vertices.
pub fn mixes(parts: &[Graph], max_n: usize) -> Vec<Graph> {
    fn go(parts: &[Graph], from: usize, room: usize, chosen: &mut Vec<Graph>, out: &mut Vec<Graph>) {
        if !chosen.is_empty() {
            out.push(disjoint_union(chosen).expect("within vertex cap"));
        }
        for i in from..parts.len() {
            if parts[i].n() <= room {
                chosen.push(parts[i].clone());
                go(parts, i, room - parts[i].n(), chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(parts, 0, max_n, &mut Vec::new(), &mut out);
    out
}
