//! Counting oracles: Burnside and labelled brute force.
#![allow(dead_code)]

use std::collections::HashSet;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        partitions(n - p, p, cur, out);
        cur.pop();
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of unlabelled graphs on `n` vertices with `m` edges, for every `m`,
/// by Burnside's lemma over vertex permutations grouped by cycle type.
pub fn burnside_counts(n: usize) -> Vec<u128> {
    let pairs = n * n.saturating_sub(1) / 2;
    let fact: u128 = (1..=n as u128).product();
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let mut total = vec![0u128; pairs + 1];
    for lambda in parts {
        // permutations with this cycle type: n! / prod(i^m_i m_i!)
        let mut denom: u128 = 1;
        let mut i = 0;
        while i < lambda.len() {
            let mut j = i;
            while j < lambda.len() && lambda[j] == lambda[i] {
                j += 1;
            }
            let (len, mult) = (lambda[i] as u128, (j - i) as u128);
            denom *= len.pow(mult as u32) * (1..=mult).product::<u128>();
            i = j;
        }
        let class_size = fact / denom;
        // sizes of the induced orbits on vertex pairs
        let mut orbit_sizes = Vec::new();
        for (a, &la) in lambda.iter().enumerate() {
            for _ in 0..(la - 1) / 2 {
                orbit_sizes.push(la);
            }
            if la % 2 == 0 {
                orbit_sizes.push(la / 2);
            }
            for &lb in &lambda[a + 1..] {
                let g = gcd(la, lb);
                for _ in 0..g {
                    orbit_sizes.push(la * lb / g);
                }
            }
        }
        // fixed graphs by edge count: product of (1 + x^s)
        let mut poly = vec![0u128; pairs + 1];
        poly[0] = 1;
        for s in orbit_sizes {
            for m in (s..=pairs).rev() {
                poly[m] += poly[m - s];
            }
        }
        for m in 0..=pairs {
            total[m] += class_size * poly[m];
        }
    }
    total.iter().map(|&t| {
        assert_eq!(t % fact, 0);
        t / fact
    }).collect()
}

/// Class counts by edge count from every labelled graph, each reduced to
/// the minimum relabelled pair bitmask over all permutations.
pub fn brute_force_counts(n: usize) -> Vec<usize> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    // image of each pair index under each permutation
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let key = maps
            .iter()
            .map(|m| {
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << m[i])
            })
            .min()
            .unwrap();
        seen.insert(key);
    }
    let mut counts = vec![0; pairs.len() + 1];
    for key in seen {
        counts[key.count_ones() as usize] += 1;
    }
    counts
}
