//! Isomorph-free generation of all graphs on `n` vertices, one edge count at
//! a time.
//!
//! Level `m + 1` is produced from level `m` by canonical augmentation: a child
//! `P + e` is kept only when deleting its canonical leading edge gives back a
//! graph isomorphic to the parent `P`, so every class has exactly one parent
//! among the level-`m` representatives. Isomorphic children of the same
//! parent are merged by canonical form. No global hash set is needed and each
//! level can be expanded in parallel; levels are returned sorted by canonical
//! form so the output order never depends on scheduling.

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Desk-scale limit for enumeration (there are 12 005 168 graphs on 10 vertices).
pub const ENUM_MAX_VERTICES: usize = 10;

/// Ascending edge-count levels of isomorphism classes.
pub struct Levels {
    n: usize,
    next_m: usize,
    current: Option<Vec<CanonicalForm>>,
}

impl Levels {
    pub fn n(&self) -> usize {
        self.n
    }
}

impl Iterator for Levels {
    type Item = (usize, Vec<CanonicalForm>);

    fn next(&mut self) -> Option<Self::Item> {
        let max_m = self.n * (self.n - 1) / 2;
        if self.next_m > max_m {
            return None;
        }
        let level = match self.current.take() {
            None => {
                let e = Graph::empty(self.n).expect("n validated");
                vec![canonical_form(&e).expect("n within canonical limit")]
            }
            Some(prev) => expand(&prev),
        };
        let m = self.next_m;
        self.next_m += 1;
        self.current = Some(level.clone());
        Some((m, level))
    }
}

/// Levels `m = 0, 1, ..., n(n-1)/2`.
pub fn levels(n: usize) -> Result<Levels> {
    check_n(n)?;
    Ok(Levels {
        n,
        next_m: 0,
        current: None,
    })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > ENUM_MAX_VERTICES {
        return Err(Error::VertexCount {
            n,
            min: 1,
            max: ENUM_MAX_VERTICES,
        });
    }
    Ok(())
}

/// Expands one level to the next. Runs on the current rayon pool.
pub fn expand(level: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let mut out: Vec<CanonicalForm> = level.par_iter().flat_map_iter(children).collect();
    out.sort_unstable();
    out
}

/// Accepted one-edge extensions of a canonical parent.
pub fn children(parent: &CanonicalForm) -> Vec<CanonicalForm> {
    let g = parent.to_graph();
    let mut parent_degrees = g.degrees();
    parent_degrees.sort_unstable();
    let mut kept: Vec<CanonicalForm> = Vec::new();
    for (u, v) in g.non_edges() {
        let child = g.add_edge(u, v).expect("non-edge");
        let lab = canonical_labeling(&child).expect("within canonical limit");
        if kept.contains(&lab.form) {
            continue;
        }
        let (a, b) = lab.leading_edge().expect("child has an edge");
        let accept = if (a, b) == (u, v) {
            true
        } else {
            let reduced = child.remove_edge(a, b).expect("edge of child");
            let mut d = reduced.degrees();
            d.sort_unstable();
            d == parent_degrees && canonical_form(&reduced).expect("within limit") == *parent
        };
        if accept {
            kept.push(lab.form);
        }
    }
    kept
}

/// One representative (in canonical labelling) per isomorphism class on `n`
/// vertices, restricted to `m` edges when given. Levels are generated
/// lazily, so a stream restricted to `m` never builds levels above `m`.
pub fn enumerate_graphs(n: usize, m: Option<usize>) -> Result<impl Iterator<Item = Graph>> {
    let max_m = n * n.saturating_sub(1) / 2;
    if let Some(m) = m {
        if m > max_m {
            return Err(Error::Domain(format!(
                "{m} edges exceed {max_m} possible on {n} vertices"
            )));
        }
    }
    Ok(levels(n)?
        .take(m.map_or(max_m + 1, |m| m + 1))
        .filter(move |(level_m, _)| m.is_none_or(|m| *level_m == m))
        .flat_map(|(_, forms)| forms.into_iter().map(|f| f.to_graph())))
}

/// Number of classes at each edge count `0..=n(n-1)/2`.
pub fn class_counts_by_edges(n: usize) -> Result<Vec<usize>> {
    Ok(levels(n)?.map(|(_, l)| l.len()).collect())
}
