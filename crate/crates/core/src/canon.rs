//! Canonical labelling for small graphs.
//!
//! The search starts from the degree partition, refines it to an equitable
//! ordered partition, then individualises vertices of the first non-singleton
//! cell and refines again until every cell is a singleton. Each leaf gives a
//! vertex ordering; the canonical form is the largest upper-triangle bit string
//! over all leaves. Leaves that produce the same bit string yield
//! automorphisms, which prune sibling branches lying in the same orbit.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest vertex count accepted by [`canonical_form`] (the key is a `u128`).
pub const CANON_MAX_VERTICES: usize = 16;

/// Isomorphism-invariant key: equal iff the graphs are isomorphic.
///
/// Ordered by vertex count first, then by the adjacency bit string of the
/// canonical labelling (pairs in graph6 column order, first pair most
/// significant).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Key bytes: vertex count followed by the 16 big-endian bytes of the bit string.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        out.push(self.n);
        out.extend_from_slice(&self.bits.to_be_bytes());
        out
    }

    /// The graph in its canonical labelling.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let pairs = n * (n - 1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (pairs - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows).expect("canonical key decodes to a simple graph")
    }
}

/// Canonical form together with one canonical ordering.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl Labeling {
    /// The edge occupying the most significant set position of the key, in
    /// original labels. Any two canonical orderings pick edges in the same
    /// automorphism orbit.
    pub fn leading_edge(&self) -> Option<(usize, usize)> {
        let n = self.form.n();
        let pairs = n * (n - 1) / 2;
        if self.form.bits == 0 {
            return None;
        }
        let k = pairs - 1 - (127 - self.form.bits.leading_zeros() as usize);
        // invert the column-major pair index
        let mut j = 1;
        while j * (j + 1) / 2 <= k {
            j += 1;
        }
        let i = k - j * (j - 1) / 2;
        let (a, b) = (self.order[i], self.order[j]);
        Some((a.min(b), a.max(b)))
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.form)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn canonical_labeling(g: &Graph) -> Result<Labeling> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::VertexCount {
            n,
            min: 1,
            max: CANON_MAX_VERTICES,
        });
    }
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (bits, order) = search.best.expect("search visits at least one leaf");
    Ok(Labeling {
        form: CanonicalForm { n: n as u8, bits },
        order,
    })
}

/// Refines an ordered partition (cells as vertex masks) until it is
/// equitable: every vertex of a cell has the same number of neighbours in
/// every cell. Fragments are ordered by that neighbour count.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::new();
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut split = false;
            let mut next = Vec::with_capacity(g.n());
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                groups.clear();
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((c, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    split = true;
                    groups.sort_unstable_by_key(|&(c, _)| c);
                }
                next.extend(groups.iter().map(|&(_, m)| m));
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        break;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let n = self.g.n();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let t = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = key_for(self.g, &order);
        match &self.best {
            None => self.best = Some((key, order)),
            Some((best, _)) if key > *best => self.best = Some((key, order)),
            Some((best, best_order)) if key == *best => {
                let mut map = vec![0; order.len()];
                for (i, &v) in order.iter().enumerate() {
                    map[v] = best_order[i];
                }
                if map.iter().enumerate().any(|(i, &m)| i != m) {
                    self.autos.push(map);
                }
            }
            _ => {}
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&x| a[x] != x) {
                continue;
            }
            any = true;
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

fn key_for(g: &Graph, order: &[usize]) -> u128 {
    let n = order.len();
    let mut key = 0u128;
    for j in 1..n {
        let row = g.neighbors(order[j]);
        for &oi in &order[..j] {
            key = (key << 1) | (row >> oi & 1) as u128;
        }
    }
    key
}
