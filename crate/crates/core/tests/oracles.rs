mod common;

use std::collections::HashSet;

use common::*;
use dmpsat::canon::canonical_form;
use dmpsat::constructions::{complete, g_counterexample, counterexample_hub_edge};
use dmpsat::enumerate::{class_counts_by_edges, enumerate_graphs, levels};
use dmpsat::graph::{cartesian_product, disjoint_union};
use dmpsat::graph6;
use dmpsat::mp::{mp, mp_downhill, mp_oracle, mp_witness, DmPath};
use proptest::prelude::*;

#[test]
fn class_counts_match_burnside() {
    for n in 1..=8 {
        let ours: Vec<u128> = class_counts_by_edges(n).unwrap().into_iter().map(|c| c as u128).collect();
        assert_eq!(ours, burnside_counts(n), "n={n}");
    }
}

#[test]
fn class_counts_match_labelled_brute_force() {
    for n in 1..=6 {
        assert_eq!(class_counts_by_edges(n).unwrap(), brute_force_counts(n), "n={n}");
    }
}

#[test]
fn burnside_oracle_sanity() {
    // the oracle alone, on hand-countable cases
    assert_eq!(burnside_counts(3), vec![1, 1, 1, 1]);
    assert_eq!(burnside_counts(4), vec![1, 1, 2, 3, 2, 1, 1]);
    assert_eq!(burnside_counts(4).iter().sum::<u128>(), 11);
}

#[test]
fn enumerated_classes_are_distinct() {
    for n in 1..=7 {
        let forms: Vec<_> = enumerate_graphs(n, None)
            .unwrap()
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        let set: HashSet<_> = forms.iter().collect();
        assert_eq!(set.len(), forms.len(), "n={n}");
    }
}

#[test]
fn four_vertex_graphs_have_eleven_keys() {
    let mut keys = HashSet::new();
    for mask in 0u32..64 {
        let bits: Vec<bool> = (0..6).map(|i| mask >> i & 1 == 1).collect();
        keys.insert(canonical_form(&from_bits(4, &bits)).unwrap());
    }
    assert_eq!(keys.len(), 11);
}

#[test]
fn mp_matches_oracle_on_all_small_graphs() {
    for n in 1..=7 {
        for (_, level) in levels(n).unwrap() {
            for f in level {
                let g = f.to_graph();
                assert_eq!(mp(&g), mp_oracle(&g).unwrap(), "{}", graph6::encode(&g));
            }
        }
    }
}

#[test]
fn mp_of_complete_graphs() {
    for m in 1..=8 {
        assert_eq!(mp(&complete(m).unwrap()), m);
    }
}

#[test]
fn adding_an_edge_can_raise_mp_by_two() {
    let g = g_counterexample(4).unwrap();
    let (a, b) = counterexample_hub_edge(4);
    assert_eq!(mp(&g), 3);
    assert_eq!(mp(&g.add_edge(a, b).unwrap()), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_is_label_invariant((g, perm) in arb_graph_with_perm(1, 12)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic(g in arb_graph(1, 10)) {
        let c = canonical_form(&g).unwrap().to_graph();
        prop_assert_eq!(c.edge_count(), g.edge_count());
        let mut a = g.degrees();
        let mut b = c.degrees();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert_eq!(canonical_form(&c).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(1, 64)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn mp_matches_oracle_random(g in arb_graph(1, 8)) {
        prop_assert_eq!(mp(&g), mp_oracle(&g).unwrap());
    }

    #[test]
    fn mp_is_label_invariant((g, perm) in arb_graph_with_perm(1, 14)) {
        prop_assert_eq!(mp(&g), mp(&g.permute(&perm).unwrap()));
    }

    #[test]
    fn witness_revalidates(g in arb_graph(1, 14)) {
        let w = mp_witness(&g);
        prop_assert_eq!(w.len(), mp(&g));
        let again = DmPath::new(&g, w.vertices().to_vec());
        prop_assert!(again.is_ok());
        prop_assert!(w.is_valid_in(&g));
    }

    #[test]
    fn disjoint_union_mp_is_max(gs in proptest::collection::vec(arb_graph(1, 6), 1..4)) {
        let u = disjoint_union(&gs).unwrap();
        prop_assert_eq!(mp(&u), gs.iter().map(mp).max().unwrap());
    }

    #[test]
    fn union_and_product_sizes(g in arb_graph(1, 6), h in arb_graph(1, 6)) {
        let u = disjoint_union(&[g.clone(), h.clone()]).unwrap();
        prop_assert_eq!(u.n(), g.n() + h.n());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        let p = cartesian_product(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), g.edge_count() * h.n() + h.edge_count() * g.n());
        for x in 0..g.n() {
            for y in 0..h.n() {
                prop_assert_eq!(p.degree(x * h.n() + y), g.degree(x) + h.degree(y));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn both_orientations_agree(g in arb_graph(1, 16)) {
        prop_assert_eq!(mp(&g), mp_downhill(&g));
    }
}
