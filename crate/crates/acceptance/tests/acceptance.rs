//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL ...` line (written straight to stderr so it shows
//! up under the default output capture) and then asserts the criterion at
//! its stated tolerance.

// formulas are written as stated, not simplified
#![allow(clippy::manual_div_ceil, clippy::manual_is_multiple_of)]

#[path = "../../core/tests/common/counting.rs"]
mod counting;

use std::io::Write;

use dmpsat::bounds::upper_bound_odd;
use dmpsat::constructions::{cone, counterexample_hub_edge, five_sat_mix, g_counterexample, p3_box_kt};
use dmpsat::enumerate::{class_counts_by_edges, enumerate_graphs, levels};
use dmpsat::graph::copies;
use dmpsat::graph6;
use dmpsat::mp::{mp, mp_oracle};
use dmpsat::saturation::{k_saturated_fast, saturated_fast};
use dmpsat::search::h_search;
use dmpsat::Graph;

fn report(n: usize, failures: &[String], summary: &str) {
    let line = if failures.is_empty() {
        format!("criterion {n}: PASS {summary}\n")
    } else {
        format!("criterion {n}: FAIL {summary}; {}\n", failures.join("; "))
    };
    let mut err = std::io::stderr().lock();
    let _ = err.write_all(line.as_bytes());
    let _ = err.flush();
    assert!(failures.is_empty(), "{}", line.trim_end());
}

#[test]
fn criterion_01_h_k3() {
    let mut bad = Vec::new();
    for n in 4..=9 {
        let want = if n % 2 == 0 { n / 2 } else { (n + 1) / 2 };
        let got = h_search(n, 3).unwrap().h_value;
        if got != Some(want) {
            bad.push(format!("h({n},3) = {got:?}, expected {want}"));
        }
    }
    report(1, &bad, "h(n,3) for n = 4..9");
}

#[test]
fn criterion_02_h_k4() {
    let mut bad = Vec::new();
    for (n, want) in [(4, 5), (5, 6), (6, 6), (7, 8), (8, 9), (9, 9)] {
        let got = h_search(n, 4).unwrap().h_value;
        if got != Some(want) {
            bad.push(format!("h({n},4) = {got:?}, expected {want}"));
        }
    }
    report(2, &bad, "h(n,4) for n = 4..9");
}

#[test]
fn criterion_03_h_k2() {
    let mut bad = Vec::new();
    for n in 2..=8 {
        let r = h_search(n, 2).unwrap();
        let edgeless = Graph::empty(n).unwrap();
        if r.h_value != Some(0) || !r.certificate_graphs().contains(&edgeless) {
            bad.push(format!("n={n}: h = {:?}, certificates {:?}", r.h_value, r.certificate_graph6()));
        }
    }
    report(3, &bad, "h(n,2) = 0 with edgeless certificate, n = 2..8");
}

#[test]
fn criterion_04_oracle_equivalence() {
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 1..=7 {
        for (_, level) in levels(n).unwrap() {
            for f in level {
                total += 1;
                let g = f.to_graph();
                let (a, b) = (mp(&g), mp_oracle(&g).unwrap());
                if a != b {
                    bad.push(format!("{}: mp {a}, oracle {b}", graph6::encode(&g)));
                }
            }
        }
    }
    if total != 1252 {
        bad.push(format!("{total} classes checked, expected 1252"));
    }
    report(4, &bad, &format!("mp = oracle on {total} classes, n <= 7"));
}

#[test]
fn criterion_05_enumeration_counts() {
    let mut bad = Vec::new();
    let want = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &w) in want.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_graphs(n, None).unwrap().count();
        if got != w {
            bad.push(format!("n={n}: {got} classes, expected {w}"));
        }
        if n <= 6 && class_counts_by_edges(n).unwrap() != counting::brute_force_counts(n) {
            bad.push(format!("n={n}: per-edge counts differ from labelled brute force"));
        }
    }
    report(5, &bad, "class counts n = 1..8, brute force n <= 6");
}

#[test]
fn criterion_06_odd_k_products() {
    let mut bad = Vec::new();
    for t in 1..=5 {
        let k = 2 * t + 1;
        for p in 1..=3 {
            let g = copies(&p3_box_kt(t).unwrap(), p).unwrap();
            let n = p * 3 * (k - 1) / 2;
            let edges = p * (k - 1) * (3 * k - 1) / 8;
            let (m, sat) = (mp(&g), k_saturated_fast(&g, k));
            let bound = upper_bound_odd(n, k).unwrap();
            if g.n() != n || m != 2 * t || !sat || g.edge_count() != edges || edges != bound {
                bad.push(format!(
                    "t={t} p={p}: n {}, mp {m}, {k}-saturated {sat}, edges {} (formula {edges}, bound {bound})",
                    g.n(),
                    g.edge_count()
                ));
            }
        }
    }
    report(6, &bad, "p copies of P3 x K_t, t = 1..5, p = 1..3");
}

#[test]
fn criterion_07_even_k_cones() {
    let mut bad = Vec::new();
    for t in 2..=3 {
        let k = 2 * t + 2;
        let base = p3_box_kt(t).unwrap();
        for p in 1..=2 {
            let g = cone(&copies(&base, p).unwrap()).unwrap();
            let (m, sat) = (mp(&g), k_saturated_fast(&g, k));
            if m != 2 * t + 1 || !sat {
                bad.push(format!("t={t} cone over {p} copies: mp {m}, {k}-saturated {sat}"));
            }
            let h = copies(&cone(&base).unwrap(), p).unwrap();
            let sat = k_saturated_fast(&h, k);
            let n = h.n();
            // n(3k+8)(k-2) / (4(3k-4)) as an exact rational
            let num = n * (3 * k + 8) * (k - 2);
            let den = 4 * (3 * k - 4);
            let edges_ok = num % den == 0 && h.edge_count() == num / den;
            if !sat || !edges_ok {
                bad.push(format!(
                    "t={t} {p} copies of the cone: {k}-saturated {sat}, edges {} vs {num}/{den}",
                    h.edge_count()
                ));
            }
        }
    }
    report(7, &bad, "cones over P3 x K_t, t in {2,3}, p in {1,2}");
}

#[test]
fn criterion_08_five_mix() {
    const C: [usize; 6] = [0, 35, 16, 27, 8, 28];
    let mut bad = Vec::new();
    for n in 8..=40 {
        let g = five_sat_mix(n).unwrap();
        let sat = k_saturated_fast(&g, 5);
        let num = 7 * n + C[n % 6];
        let exact = num % 6 == 0 && g.edge_count() == num / 6;
        if g.n() != n || !sat || !exact {
            bad.push(format!("n={n}: 5-saturated {sat}, edges {} vs (7n+{})/6 = {num}/6", g.edge_count(), C[n % 6]));
        }
    }
    report(8, &bad, "five_sat_mix(n), n = 8..40");
}

#[test]
fn criterion_09_counterexample_family() {
    let mut bad = Vec::new();
    for n in 3..=5 {
        let g = g_counterexample(n).unwrap();
        let (w, v2) = (2 * n, 1);
        assert_eq!(counterexample_hub_edge(n), (v2, w));
        let m = mp(&g);
        let sat = k_saturated_fast(&g, 5);
        let after = mp(&g.add_edge(w, v2).unwrap());
        if m != 3 || !sat || after != 5 {
            bad.push(format!("n={n}: mp {m}, 5-saturated {sat}, mp after (w,v2) {after}"));
        }
    }
    report(9, &bad, "cycle-plus-hub graphs, n in {3,4,5}");
}

#[test]
fn criterion_10_leaf_to_max_degree() {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=8 {
        for g in enumerate_graphs(n, None).unwrap().filter(Graph::is_connected) {
            let delta = g.max_degree();
            if delta < 2 {
                continue;
            }
            let base = mp(&g);
            for u in (0..n).filter(|&u| g.degree(u) == 1) {
                for v in (0..n).filter(|&v| g.degree(v) == delta && !g.has_edge(u, v)) {
                    checked += 1;
                    let after = mp(&g.add_edge(u, v).unwrap());
                    if after > base {
                        bad.push(format!("{} + ({u},{v}): mp {base} -> {after}", graph6::encode(&g)));
                    }
                }
            }
        }
    }
    report(10, &bad, &format!("{checked} leaf/max-degree additions, n <= 8"));
}

#[test]
fn criterion_11_trees_and_sparse_graphs() {
    let mut bad = Vec::new();
    let is_star = |g: &Graph| g.is_tree() && g.max_degree() == g.n() - 1;
    let (mut trees, mut sparse) = (0, 0);
    for n in 3..=9 {
        for g in enumerate_graphs(n, Some(n - 1)).unwrap().filter(Graph::is_tree) {
            trees += 1;
            if saturated_fast(&g) != is_star(&g) {
                bad.push(format!("tree {}", graph6::encode(&g)));
            }
        }
    }
    for n in 2..=9 {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        for (_, level) in levels(n).unwrap().take(n + 1) {
            for g in level.iter().map(|f| f.to_graph()).filter(Graph::is_connected) {
                let m = mp(&g);
                if m != 2 && m != 3 {
                    continue;
                }
                sparse += 1;
                let expected = (m == 2 && is_star(&g)) || (m == 3 && g == k3);
                if saturated_fast(&g) != expected {
                    bad.push(format!("sparse {}", graph6::encode(&g)));
                }
            }
        }
    }
    report(11, &bad, &format!("{trees} trees n <= 9, {sparse} sparse connected graphs n <= 9"));
}

#[test]
fn criterion_12_h_8_5_sandwich() {
    let r = h_search(8, 5).unwrap();
    let mut bad = Vec::new();
    match r.h_value {
        Some(h) if (8..=12).contains(&h) => {}
        other => bad.push(format!("h(8,5) = {other:?}")),
    }
    report(12, &bad, &format!("computed h(8,5) = {:?} (exploratory), bounds 8..=12", r.h_value));
}
