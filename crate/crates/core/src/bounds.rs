//! Closed-form values and bounds for `h(n, k)`.
//!
//! Every upper bound here is the edge count of an explicit construction in
//! [`crate::constructions`]; tests check the two agree.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

/// Edge offsets `c(n mod 6)` for the k = 5 mix: `h(n,5) <= (7n + c) / 6`.
///
/// The `n = 5 (mod 6)` entry is 19: one `K_5 - e` (9 edges) plus
/// `(n-5)/6` copies of `P_3 □ K_2` (7 edges each) is `(7n + 19) / 6`.
pub const FIVE_MIX_OFFSETS: [usize; 6] = [0, 35, 16, 27, 8, 19];

/// Exact `h(n, k)` for `k` in `{2, 3, 4}`.
pub fn exact_h(n: usize, k: usize) -> Result<usize> {
    match k {
        2 if n >= 1 => Ok(0),
        3 if n >= 2 => Ok(n.div_ceil(2)),
        4 if n >= 3 => Ok(if n.is_multiple_of(3) { n } else { n + 1 }),
        2..=4 => Err(domain(format!("h({n},{k}) outside the closed-form domain"))),
        _ => Err(domain(format!("no closed form for k = {k}"))),
    }
}

/// `h(n, k) >= n` for `n >= 3`, `k >= 4`.
pub fn lower_bound(n: usize, k: usize) -> Result<usize> {
    if n < 3 || k < 4 {
        return Err(domain(format!("linear lower bound needs n >= 3, k >= 4 (got {n}, {k})")));
    }
    Ok(n)
}

/// Copies of `P_3 □ K_t`, `t = (k-1)/2`: `n(3k-1)/12` edges when
/// `n = 0 (mod 3(k-1)/2)`.
pub fn upper_bound_odd(n: usize, k: usize) -> Result<usize> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(domain(format!("odd bound needs odd k >= 3, got {k}")));
    }
    let block = 3 * (k - 1) / 2;
    if n == 0 || !n.is_multiple_of(block) {
        return Err(domain(format!("odd bound needs n = 0 mod {block}, got {n}")));
    }
    Ok(n / block * (k - 1) * (3 * k - 1) / 8)
}

/// Copies of the cone over `P_3 □ K_t`, `t = (k-2)/2`:
/// `n(3k+8)(k-2) / (4(3k-4))` edges when `n = 0 (mod (3k-4)/2)`.
///
/// Only the single cone (`n = (3k-4)/2`) is k-saturated. Two or more
/// disjoint copies are not, so [`bound_row`] cites this value only there.
pub fn upper_bound_even(n: usize, k: usize) -> Result<usize> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(domain(format!("even bound needs even k >= 4, got {k}")));
    }
    let block = (3 * k - 4) / 2;
    if n == 0 || !n.is_multiple_of(block) {
        return Err(domain(format!("even bound needs n = 0 mod {block}, got {n}")));
    }
    Ok(n / block * (3 * k + 8) * (k - 2) / 8)
}

/// `h(n, 5) <= (7n + c(n mod 6)) / 6` for `n >= 8`.
pub fn upper_bound_5(n: usize) -> Result<usize> {
    if n < 8 {
        return Err(domain(format!("k = 5 mix needs n >= 8, got {n}")));
    }
    let num = 7 * n + FIVE_MIX_OFFSETS[n % 6];
    debug_assert_eq!(num % 6, 0);
    Ok(num / 6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    /// Exhaustive-search value, filled only in exploratory runs.
    pub computed: Option<usize>,
    pub sources: Vec<&'static str>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

/// Bound row from closed forms alone.
pub fn bound_row(n: usize, k: usize) -> Result<BoundRow> {
    if n == 0 || k < 2 {
        return Err(domain(format!("table needs n >= 1, k >= 2 (got {n}, {k})")));
    }
    let mut sources = Vec::new();
    let exact = if n < k {
        // only K_n can be k-saturated: any added edge leaves mp <= n < k
        sources.push("exact:complete");
        Some(n * (n - 1) / 2)
    } else if let Ok(v) = exact_h(n, k) {
        sources.push("exact:small-k");
        Some(v)
    } else {
        None
    };
    let mut upper = exact;
    let mut offer = |v: Result<usize>, tag: &'static str, sources: &mut Vec<&'static str>| {
        if let Ok(v) = v {
            sources.push(tag);
            upper = Some(upper.map_or(v, |u: usize| u.min(v)));
        }
    };
    if exact.is_none() {
        offer(upper_bound_odd(n, k), "upper:odd-k-products", &mut sources);
        if k >= 4 && 2 * n == 3 * k - 4 {
            offer(upper_bound_even(n, k), "upper:even-k-cone", &mut sources);
        }
        if k == 5 {
            offer(upper_bound_5(n), "upper:k5-mix", &mut sources);
        }
    }
    let lower = match exact {
        Some(v) => v,
        None => {
            sources.push("lower:linear");
            lower_bound(n, k)?
        }
    };
    Ok(BoundRow {
        n,
        k,
        lower,
        upper,
        exact,
        computed: None,
        sources,
    })
}

pub fn bound_table(ns: RangeInclusive<usize>, ks: RangeInclusive<usize>) -> Result<BoundTable> {
    let mut rows = Vec::new();
    for k in ks {
        for n in ns.clone() {
            rows.push(bound_row(n, k)?);
        }
    }
    Ok(BoundTable { rows })
}

impl BoundTable {
    pub fn to_tsv(&self) -> String {
        fn opt(v: Option<usize>) -> String {
            v.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        let mut out = String::from("n\tk\tlower\tupper\texact\tcomputed\tsource\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.k,
                r.lower,
                opt(r.upper),
                opt(r.exact),
                opt(r.computed),
                r.sources.join(",")
            );
        }
        out
    }
}
