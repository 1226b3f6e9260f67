//! Graph families used by the saturation bounds.
//!
//! Labelling conventions (fixed so graph6 output is reproducible):
//!
//! * `star(n)`: centre 0, leaves `1..n`.
//! * `path(n)`: `0 - 1 - ... - (n-1)`; `cycle(n)` adds `(0, n-1)`.
//! * `matching(n)`: edges `(2i, 2i+1)`. `matching_plus_p3(n)`: the matching on
//!   the first `n - 3` vertices, then the path `n-3 - n-2 - n-1`.
//! * Disjoint unions list components in the order they are named and
//!   offset labels accordingly.
//! * `k4_minus_e()` misses `(2, 3)`; `k5_minus_e()` misses `(3, 4)`.
//! * `bowtie()`: shared vertex 0, triangles `{0,1,2}` and `{0,3,4}`.
//! * `p3_box_kt(t)`: row-major `P_3 □ K_t`; the top row `u_1..u_t` is
//!   `0..t`, the middle row `v_1..v_t` is `t..2t`, the bottom row
//!   `w_1..w_t` is `2t..3t`, and `u_i`, `v_i`, `w_i` share a column.
//! * `cone(g)`: the apex is the new last vertex `n`.
//! * `g_counterexample(n)`: cycle `v_1..v_2n` as `0..2n`, hub `w = 2n`
//!   joined to `v_1, v_3, ...` (even labels).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, copies, disjoint_union, Graph, Pair};

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

pub fn star(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.insert_edge(0, v);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = path(n)?;
    g.insert_edge(0, n - 1);
    Ok(g)
}

/// `n/2` disjoint copies of `K_2`.
pub fn matching(n: usize) -> Result<Graph> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(domain(format!("matching needs even n >= 2, got {n}")));
    }
    copies(&complete(2)?, n / 2)
}

/// `(n-3)/2` copies of `K_2` and one `P_3`.
pub fn matching_plus_p3(n: usize) -> Result<Graph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(domain(format!("matching_plus_p3 needs odd n >= 3, got {n}")));
    }
    let mut parts = vec![complete(2)?; (n - 3) / 2];
    parts.push(path(3)?);
    disjoint_union(&parts)
}

/// `n/3` disjoint triangles.
pub fn triangle_packing(n: usize) -> Result<Graph> {
    if n < 3 || !n.is_multiple_of(3) {
        return Err(domain(format!("triangle_packing needs n = 0 mod 3, n >= 3, got {n}")));
    }
    copies(&complete(3)?, n / 3)
}

pub fn k4_minus_e() -> Graph {
    complete(4).unwrap().remove_edge(2, 3).unwrap()
}

pub fn k5_minus_e() -> Graph {
    complete(5).unwrap().remove_edge(3, 4).unwrap()
}

pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

/// `P_3 □ K_t`: saturated with mp `2t`, so `(2t+1)`-saturated.
pub fn p3_box_kt(t: usize) -> Result<Graph> {
    if t == 0 || 3 * t > crate::graph::MAX_VERTICES {
        return Err(domain(format!("p3_box_kt needs 1 <= t <= 21, got {t}")));
    }
    cartesian_product(&path(3)?, &complete(t)?)
}

/// `G + v`: a new vertex joined to every vertex of `G`.
pub fn cone(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut rows = g.rows().to_vec();
    for row in rows.iter_mut() {
        *row |= 1u64.checked_shl(n as u32).ok_or_else(|| domain("cone exceeds 64 vertices"))?;
    }
    rows.push(g.vertex_mask());
    Graph::from_rows(rows)
}

/// `C_2n` plus a hub joined to alternate cycle vertices.
pub fn g_counterexample(n: usize) -> Result<Graph> {
    if n < 3 || 2 * n + 1 > crate::graph::MAX_VERTICES {
        return Err(domain(format!("g_counterexample needs 3 <= n <= 31, got {n}")));
    }
    let mut g = cycle(2 * n)?.rows().to_vec();
    g.push(0);
    let mut g = Graph::from_rows(g)?;
    for i in (0..2 * n).step_by(2) {
        g.insert_edge(i, 2 * n);
    }
    Ok(g)
}

/// The non-edge `(v_2, w)` of [`g_counterexample`].
pub fn counterexample_hub_edge(n: usize) -> Pair {
    (1, 2 * n)
}

/// 4-saturated graphs with `n` edges (`n = 0 mod 3`) or `n + 1` edges:
/// triangles, plus one `K_4 - e` (`n = 1 mod 3`) or one bowtie (`n = 2 mod 3`).
pub fn h4_extremal(n: usize) -> Result<Graph> {
    let (triangles, extra) = match n % 3 {
        0 if n >= 3 => (n / 3, None),
        1 if n >= 4 => ((n - 4) / 3, Some(k4_minus_e())),
        2 if n >= 5 => ((n - 5) / 3, Some(bowtie())),
        _ => return Err(domain(format!("h4_extremal undefined for n = {n}"))),
    };
    let mut parts = vec![complete(3)?; triangles];
    parts.extend(extra);
    disjoint_union(&parts)
}

/// Copies of `P_3 □ K_2`, `K_5 - e` and `K_4` used for each residue of `n` mod 6.
pub fn five_sat_mix_parts(n: usize) -> Result<(usize, usize, usize)> {
    if n < 8 {
        return Err(domain(format!("five_sat_mix needs n >= 8, got {n}")));
    }
    // (copies of P_3 □ K_2, copies of K_5 - e, copies of K_4)
    Ok(match n % 6 {
        0 => (n / 6, 0, 0),
        1 => ((n - 13) / 6, 1, 2),
        2 => ((n - 8) / 6, 0, 2),
        3 => ((n - 9) / 6, 1, 1),
        4 => ((n - 4) / 6, 0, 1),
        _ => ((n - 5) / 6, 1, 0),
    })
}

/// A 5-saturated graph on `n >= 8` vertices, components ordered
/// `P_3 □ K_2` copies, then `K_5 - e`, then `K_4`.
pub fn five_sat_mix(n: usize) -> Result<Graph> {
    let (x, y, z) = five_sat_mix_parts(n)?;
    let mut parts = vec![p3_box_kt(2)?; x];
    parts.extend(std::iter::repeat_n(k5_minus_e(), y));
    parts.extend(std::iter::repeat_n(complete(4)?, z));
    disjoint_union(&parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Star,
    Matching,
    MatchingPlusP3,
    TrianglePacking,
    K4MinusE,
    Bowtie,
    K5MinusE,
    Complete,
    Path,
    Cycle,
    P3BoxKt,
    GCounterexample,
    H4Extremal,
    FiveSatMix,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Star,
        Family::Matching,
        Family::MatchingPlusP3,
        Family::TrianglePacking,
        Family::K4MinusE,
        Family::Bowtie,
        Family::K5MinusE,
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::P3BoxKt,
        Family::GCounterexample,
        Family::H4Extremal,
        Family::FiveSatMix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Matching => "matching",
            Family::MatchingPlusP3 => "matching-p3",
            Family::TrianglePacking => "triangles",
            Family::K4MinusE => "k4-e",
            Family::Bowtie => "bowtie",
            Family::K5MinusE => "k5-e",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::P3BoxKt => "p3xkt",
            Family::GCounterexample => "g-counterexample",
            Family::H4Extremal => "h4-extremal",
            Family::FiveSatMix => "five-sat-mix",
        }
    }

    /// Whether the family takes a size parameter (`t` for `p3xkt`, `n` otherwise).
    pub fn takes_param(self) -> bool {
        !matches!(self, Family::K4MinusE | Family::Bowtie | Family::K5MinusE)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| domain(format!("unknown family `{s}`")))
    }
}

/// A family instance: `copies` disjoint copies of the base graph, each
/// coned first when `cone` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub param: Option<usize>,
    pub cone: bool,
    pub copies: usize,
}

impl FamilySpec {
    pub fn new(family: Family, param: Option<usize>) -> Self {
        FamilySpec {
            family,
            param,
            cone: false,
            copies: 1,
        }
    }

    fn param(&self) -> Result<usize> {
        match (self.family.takes_param(), self.param) {
            (true, Some(p)) => Ok(p),
            (true, None) => Err(domain(format!("family {} needs a parameter", self.family))),
            (false, _) => Ok(0),
        }
    }

    fn base(&self) -> Result<Graph> {
        let p = self.param()?;
        match self.family {
            Family::Star => star(p),
            Family::Matching => matching(p),
            Family::MatchingPlusP3 => matching_plus_p3(p),
            Family::TrianglePacking => triangle_packing(p),
            Family::K4MinusE => Ok(k4_minus_e()),
            Family::Bowtie => Ok(bowtie()),
            Family::K5MinusE => Ok(k5_minus_e()),
            Family::Complete => complete(p),
            Family::Path => path(p),
            Family::Cycle => cycle(p),
            Family::P3BoxKt => p3_box_kt(p),
            Family::GCounterexample => g_counterexample(p),
            Family::H4Extremal => h4_extremal(p),
            Family::FiveSatMix => five_sat_mix(p),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        if self.copies == 0 {
            return Err(domain("copies must be at least 1"));
        }
        let mut g = self.base()?;
        if self.cone {
            g = cone(&g)?;
        }
        copies(&g, self.copies)
    }

    /// Closed-form `(|V|, |E|, mp)` of the base graph, independent of the builders.
    fn base_arithmetic(&self) -> Result<(usize, usize, usize)> {
        let p = self.param()?;
        Ok(match self.family {
            Family::Star => (p, p.saturating_sub(1), p.min(2)),
            Family::Complete => (p, p * p.saturating_sub(1) / 2, p),
            Family::Path => (p, p.saturating_sub(1), if p >= 4 { p - 1 } else { p.min(2) }),
            Family::Cycle => (p, p, p),
            Family::Matching => (p, p / 2, 2),
            Family::MatchingPlusP3 => (p, p.div_ceil(2), 2),
            Family::TrianglePacking => (p, p, 3),
            Family::K4MinusE => (4, 5, 3),
            Family::Bowtie => (5, 6, 3),
            Family::K5MinusE => (5, 9, 4),
            Family::P3BoxKt => {
                let k = 2 * p + 1;
                (3 * (k - 1) / 2, (k - 1) * (3 * k - 1) / 8, k - 1)
            }
            // the hub's degree ties with the odd cycle vertices when n = 3
            Family::GCounterexample => (2 * p + 1, 3 * p, if p == 3 { 4 } else { 3 }),
            Family::H4Extremal => (p, if p % 3 == 0 { p } else { p + 1 }, 3),
            Family::FiveSatMix => (p, crate::bounds::upper_bound_5(p)?, 4),
        })
    }

    /// Expected `(|V|, |E|, mp)` of [`FamilySpec::build`].
    pub fn expected(&self) -> Result<(usize, usize, usize)> {
        self.build()?;
        let (mut v, mut e, mut m) = self.base_arithmetic()?;
        if self.cone {
            e += v;
            v += 1;
            m += 1;
        }
        Ok((v * self.copies, e * self.copies, m))
    }
}
