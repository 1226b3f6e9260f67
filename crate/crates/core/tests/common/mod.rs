//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use dmpsat::Graph;
use proptest::prelude::*;

pub mod counting;
#[allow(unused_imports)]
pub use counting::*;

/// Labelled graph on `n` vertices from an edge-indicator vector over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn arb_graph_with_perm(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(min_n, max_n).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}
