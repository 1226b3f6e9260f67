//! Longest degree-monotone paths.
//!
//! `mp(G)` counts the *vertices* of a longest path whose degree sequence is
//! non-decreasing or non-increasing. The literature calls this the "length"
//! of the path even though it is a vertex count; a single edge has mp 2.
//!
//! Reversing a non-increasing path gives a non-decreasing one, so the solver
//! only extends paths uphill (to neighbours of degree at least the tail's).

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Vertex-count limit for [`mp_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 8;

/// A path together with its degree sequence in the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DmPath {
    vertices: Vec<usize>,
    degrees: Vec<usize>,
}

impl DmPath {
    /// Checks that `vertices` is a non-empty simple path in `g` with a
    /// monotone degree sequence.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Domain("empty path".into()));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { v, n: g.n() });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::Domain(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::Domain(format!("({}, {}) is not an edge", w[0], w[1])));
        }
        let degrees: Vec<usize> = vertices.iter().map(|&v| g.degree(v)).collect();
        if !is_monotone(&degrees) {
            return Err(Error::Domain(format!("degrees {degrees:?} not monotone")));
        }
        Ok(DmPath { vertices, degrees })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks the path against `g` (degrees recomputed in `g`).
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        DmPath::new(g, self.vertices.clone()).is_ok_and(|p| p.degrees == self.degrees)
    }
}

fn is_monotone(d: &[usize]) -> bool {
    d.windows(2).all(|w| w[0] <= w[1]) || d.windows(2).all(|w| w[0] >= w[1])
}

/// Number of vertices on a longest degree-monotone path.
pub fn mp(g: &Graph) -> usize {
    Solver::new(g, Direction::Up).run(usize::MAX).0
}

/// A longest degree-monotone path, oriented with non-decreasing degrees.
pub fn mp_witness(g: &Graph) -> DmPath {
    let (_, path) = Solver::new(g, Direction::Up).run(usize::MAX);
    DmPath::new(g, path).expect("solver returns a monotone path")
}

/// Same value as [`mp`], found by extending paths downhill only.
pub fn mp_downhill(g: &Graph) -> usize {
    Solver::new(g, Direction::Down).run(usize::MAX).0
}

/// Whether `mp(g) >= target`, stopping at the first long-enough path.
pub fn mp_reaches(g: &Graph, target: usize) -> bool {
    if target <= 1 {
        return true;
    }
    Solver::new(g, Direction::Up).run(target).0 >= target
}

/// A monotone path with at least `target` vertices, if one exists.
pub fn path_at_least(g: &Graph, target: usize) -> Option<DmPath> {
    let (len, path) = Solver::new(g, Direction::Up).run(target.max(1));
    (len >= target).then(|| DmPath::new(g, path).expect("solver returns a monotone path"))
}

/// Brute-force `mp`: every simple path from every start, filtered by the
/// monotonicity predicate. Shares no code with the solver.
pub fn mp_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::VertexCount {
            n,
            min: 1,
            max: ORACLE_MAX_VERTICES,
        });
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    fn walk(adj: &[Vec<bool>], deg: &[usize], path: &mut Vec<usize>, best: &mut usize) {
        let d: Vec<usize> = path.iter().map(|&v| deg[v]).collect();
        if is_monotone(&d) {
            *best = (*best).max(path.len());
        }
        let last = *path.last().unwrap();
        for v in 0..adj.len() {
            if adj[last][v] && !path.contains(&v) {
                path.push(v);
                walk(adj, deg, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..n {
        walk(&adj, &deg, &mut vec![s], &mut best);
    }
    Ok(best)
}

#[derive(Clone, Copy)]
enum Direction {
    Up,
    Down,
}

/// Branch-and-bound DFS over monotone paths. A branch is dropped when its
/// length plus the number of unvisited vertices still reachable along
/// monotone steps cannot beat the best path found.
struct Solver {
    n: usize,
    adj: Vec<u64>,
    /// `allowed[v]`: vertices whose degree may follow `v` on the path.
    allowed: Vec<u64>,
    best: usize,
    best_path: Vec<usize>,
    stop_at: usize,
}

impl Solver {
    fn new(g: &Graph, dir: Direction) -> Self {
        let n = g.n();
        let deg = g.degrees();
        let allowed = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| match dir {
                        Direction::Up => deg[u] >= deg[v],
                        Direction::Down => deg[u] <= deg[v],
                    })
                    .fold(0u64, |m, u| m | 1 << u)
            })
            .collect();
        Solver {
            n,
            adj: g.rows().to_vec(),
            allowed,
            best: 0,
            best_path: Vec::new(),
            stop_at: usize::MAX,
        }
    }

    fn run(mut self, stop_at: usize) -> (usize, Vec<usize>) {
        self.stop_at = stop_at;
        let mut path = Vec::with_capacity(self.n);
        for s in 0..self.n {
            if self.best >= self.stop_at || self.best == self.n {
                break;
            }
            path.push(s);
            self.extend(&mut path, 1u64 << s);
            path.pop();
        }
        (self.best, self.best_path)
    }

    fn reach(&self, from: usize, visited: u64) -> u32 {
        let mut seen = 0u64;
        let mut frontier = 1u64 << from;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v] & self.allowed[v];
            }
            next &= !visited & !seen;
            seen |= next;
            frontier = next;
        }
        seen.count_ones()
    }

    fn extend(&mut self, path: &mut Vec<usize>, visited: u64) {
        if path.len() > self.best {
            self.best = path.len();
            self.best_path.clone_from(path);
            if self.best >= self.stop_at {
                return;
            }
        }
        let tail = *path.last().unwrap();
        let cand = self.adj[tail] & self.allowed[tail] & !visited;
        if cand == 0 {
            return;
        }
        if path.len() + self.reach(tail, visited) as usize <= self.best {
            return;
        }
        for v in bits(cand) {
            path.push(v);
            self.extend(path, visited | 1 << v);
            path.pop();
            if self.best >= self.stop_at || self.best == self.n {
                return;
            }
        }
    }
}
