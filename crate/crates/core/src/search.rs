//! Exhaustive computation of `h(n, k)`.
//!
//! Classes are scanned in ascending edge count; the first level holding a
//! k-saturated graph gives `h(n, k)` and all of that level's k-saturated
//! classes are returned as certificates. Disconnected graphs are included.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::CanonicalForm;
use crate::enumerate::levels;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::saturation::k_saturated_fast;

/// Largest `n` accepted by [`h_search`]. `n = 10` works but can take hours;
/// `n <= 9` is the supported range.
pub const SEARCH_MAX_VERTICES: usize = 10;

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    /// Minimum edge count over k-saturated graphs, `None` if there are none.
    pub h_value: Option<usize>,
    /// Every minimum-edge k-saturated class, sorted by canonical form.
    pub certificates: Vec<CanonicalForm>,
    pub classes_examined: usize,
    pub elapsed: Duration,
}

impl SearchResult {
    pub fn certificate_graphs(&self) -> Vec<Graph> {
        self.certificates.iter().map(CanonicalForm::to_graph).collect()
    }

    /// Certificates as graph6 in canonical labelling.
    pub fn certificate_graph6(&self) -> Vec<String> {
        self.certificates
            .iter()
            .map(|c| graph6::encode(&c.to_graph()))
            .collect()
    }
}

/// `h(n, k)` on the current rayon pool.
pub fn h_search(n: usize, k: usize) -> Result<SearchResult> {
    check(n, k)?;
    let start = Instant::now();
    let mut classes_examined = 0;
    for (m, level) in levels(n)? {
        classes_examined += level.len();
        let certificates: Vec<CanonicalForm> = level
            .par_iter()
            .filter(|f| k_saturated_fast(&f.to_graph(), k))
            .copied()
            .collect();
        if !certificates.is_empty() {
            return Ok(SearchResult {
                n,
                k,
                h_value: Some(m),
                certificates,
                classes_examined,
                elapsed: start.elapsed(),
            });
        }
    }
    Ok(SearchResult {
        n,
        k,
        h_value: None,
        certificates: Vec::new(),
        classes_examined,
        elapsed: start.elapsed(),
    })
}

/// `h(n, k)` using exactly `jobs` worker threads.
pub fn h_search_with_jobs(n: usize, k: usize, jobs: usize) -> Result<SearchResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    pool.install(|| h_search(n, k))
}

/// Cross-check: scans every class on `n` vertices without stopping early
/// and returns the minimum edge count of a k-saturated class.
pub fn flat_scan(n: usize, k: usize) -> Result<Option<usize>> {
    check(n, k)?;
    let mut best: Option<usize> = None;
    for (_, level) in levels(n)? {
        for f in &level {
            if k_saturated_fast(&f.to_graph(), k) {
                best = Some(best.map_or(f.edge_count(), |b| b.min(f.edge_count())));
            }
        }
    }
    Ok(best)
}

fn check(n: usize, k: usize) -> Result<()> {
    if n == 0 || n > SEARCH_MAX_VERTICES {
        return Err(Error::VertexCount {
            n,
            min: 1,
            max: SEARCH_MAX_VERTICES,
        });
    }
    if k < 2 {
        return Err(Error::Domain(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}
