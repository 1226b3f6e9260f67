//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` word holding its neighbourhood, so the hard cap
//! is [`MAX_VERTICES`]. Graphs are values: [`Graph::add_edge`] returns a new
//! graph and leaves the receiver untouched.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the vertex count (one machine word per adjacency row).
pub const MAX_VERTICES: usize = 64;

/// An unordered vertex pair `(u, v)` with `u < v`.
pub type Pair = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount {
                n,
                min: 1,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[Pair]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let g = Graph::empty(n)?;
        let mask = g.vertex_mask();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    v: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Domain(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Pair> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Unordered non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Pair> {
        let mask = self.vertex_mask();
        let mut out = Vec::new();
        for u in 0..self.n {
            let row = !self.adj[u] & mask;
            for v in bits(row.checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Returns `G + uv`. Rejects loops and existing edges.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Returns `G - uv`. The edge must exist.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Domain(format!("edge ({u}, {v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Reachability partition; components are listed by smallest vertex and
    /// each component is sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut unseen = self.vertex_mask();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let comp = self.component_mask(start);
            unseen &= !comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn component_mask(&self, start: usize) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Result<Graph> {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Block-diagonal union; the i-th graph's vertices follow those of graphs `0..i`.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    if graphs.is_empty() {
        return Err(Error::EmptySequence);
    }
    let total: usize = graphs.iter().map(Graph::n).sum();
    let mut g = Graph::empty(total)?;
    let mut offset = 0;
    for h in graphs {
        for v in 0..h.n {
            g.adj[offset + v] = h.adj[v] << offset;
        }
        offset += h.n;
    }
    Ok(g)
}

/// `G □ H`. Vertex `(x, y)` with `x ∈ V(G)`, `y ∈ V(H)` is labelled `x·|V(H)| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let hn = h.n;
    let mut out = Graph::empty(g.n * hn)?;
    for x in 0..g.n {
        for y in 0..hn {
            let a = x * hn + y;
            for y2 in bits(h.adj[y]) {
                out.adj[a] |= 1u64 << (x * hn + y2);
            }
            for x2 in bits(g.adj[x]) {
                out.adj[a] |= 1u64 << (x2 * hn + y);
            }
        }
    }
    Ok(out)
}

/// `p` disjoint copies of `g`.
pub fn copies(g: &Graph, p: usize) -> Result<Graph> {
    disjoint_union(&vec![g.clone(); p])
}

/// Iterator over the set bits of a word, lowest first.
#[inline]
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn add_edge_on_complete_graph_has_nothing_to_add() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(k2.non_edges().is_empty());
        assert_eq!(k2.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert_eq!(k2.add_edge(1, 1), Err(Error::Loop(1)));
    }

    #[test]
    fn add_edge_is_value_semantics() {
        let e = Graph::empty(2).unwrap();
        let k2 = e.add_edge(0, 1).unwrap();
        assert_eq!(k2.degrees(), vec![1, 1]);
        assert_eq!(e.edge_count(), 0);

        let p4 = path(4);
        let c4 = p4.add_edge(0, 3).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(p4.edge_count(), 3);
    }

    #[test]
    fn non_edges_lexicographic() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.non_edges().is_empty());
        assert_eq!(Graph::empty(3).unwrap().non_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.non_edges(), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn unions_and_products() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let two = copies(&k3, 2).unwrap();
        assert_eq!((two.n(), two.edge_count()), (6, 6));
        assert!(two.degrees().iter().all(|&d| d == 2));
        assert_eq!(disjoint_union(std::slice::from_ref(&k3)).unwrap(), k3);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let k1 = Graph::empty(1).unwrap();
        let u = disjoint_union(&[k2.clone(), k1.clone()]).unwrap();
        assert_eq!((u.n(), u.edge_count()), (3, 1));
        assert_eq!(disjoint_union(&[]), Err(Error::EmptySequence));

        let p3k2 = cartesian_product(&path(3), &k2).unwrap();
        assert_eq!((p3k2.n(), p3k2.edge_count()), (6, 7));
        let p3k3 = cartesian_product(&path(3), &k3).unwrap();
        assert_eq!((p3k3.n(), p3k3.edge_count()), (9, 15));
        assert_eq!(cartesian_product(&k1, &k3).unwrap(), k3);
    }

    #[test]
    fn components() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let two = copies(&k3, 2).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!two.is_connected());
        let c6 = path(6).add_edge(0, 5).unwrap();
        assert!(c6.is_connected());
        assert_eq!(Graph::empty(4).unwrap().connected_components().len(), 4);
    }

    #[test]
    fn size_limits() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        let g = Graph::empty(64).unwrap();
        assert_eq!(g.non_edges().len(), 64 * 63 / 2);
    }

    #[test]
    fn permute_and_rows() {
        let p3 = path(3);
        let q = p3.permute(&[1, 0, 2]).unwrap();
        assert_eq!(q.edges(), vec![(0, 1), (0, 2)]);
        assert!(p3.permute(&[0, 0, 1]).is_err());
        assert_eq!(Graph::from_rows(p3.rows().to_vec()).unwrap(), p3);
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
    }
}
