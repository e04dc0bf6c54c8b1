//! Exhaustive catalogs of small instances: all graphs on up to a handful of
//! vertices up to isomorphism, and all colorings up to renaming colors.
//! These feed the sweep-style agreement tests; nothing here is fast, it
//! just has to be complete and deterministic.

use std::collections::BTreeSet;

use itertools::Itertools;

/// Largest n the graph catalog will enumerate. Candidate canonicalization
/// scans all n! vertex permutations, which stops being reasonable here.
pub const CATALOG_N_CAP: usize = 7;

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Least edge bit mask over all relabelings of the graph.
fn canonical_form(n: usize, mask: u64, perms: &[Vec<usize>]) -> u64 {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1u64 << pair_index(n, u, v)) != 0 {
                pairs.push((u, v));
            }
        }
    }
    let mut best = u64::MAX;
    for perm in perms {
        let mut permuted = 0u64;
        for &(u, v) in &pairs {
            let (pu, pv) = (perm[u], perm[v]);
            permuted |= 1u64 << pair_index(n, pu.min(pv), pu.max(pv));
        }
        if permuted < best {
            best = permuted;
        }
    }
    best
}

fn mask_to_edges(n: usize, mask: u64) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1u64 << pair_index(n, u, v)) != 0 {
                edges.push((u as u32, v as u32));
            }
        }
    }
    edges
}

/// All graphs on `n` unlabeled vertices, one canonical representative each,
/// as sorted edge lists. Built by extending the catalog one vertex at a
/// time: every graph arises from deleting its last vertex, so attaching the
/// new vertex with every possible neighborhood and canonicalizing covers
/// everything.
///
/// Sizes follow the familiar unlabeled-graph counts: 1, 1, 2, 4, 11, 34,
/// 156, 1044 for n = 0..=7.
pub fn non_isomorphic_graphs(n: usize) -> Vec<Vec<(u32, u32)>> {
    assert!(n <= CATALOG_N_CAP, "graph catalog capped at n = {CATALOG_N_CAP}");
    if n == 0 {
        return vec![Vec::new()];
    }
    let smaller = non_isomorphic_graphs(n - 1);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut reps = BTreeSet::new();
    for small_edges in &smaller {
        let mut base = 0u64;
        for &(u, v) in small_edges {
            base |= 1u64 << pair_index(n, u as usize, v as usize);
        }
        let new = n - 1;
        for nb in 0u64..(1u64 << new) {
            let mut mask = base;
            for u in 0..new {
                if nb & (1u64 << u) != 0 {
                    mask |= 1u64 << pair_index(n, u, new);
                }
            }
            reps.insert(canonical_form(n, mask, &perms));
        }
    }
    reps.into_iter().map(|mask| mask_to_edges(n, mask)).collect()
}

/// All colorings of `n` vertices from a palette of size `k`, up to
/// permuting color names: exactly the sequences where the first occurrence
/// of each color value happens in increasing order (color 1 first, then 2,
/// and so on), never exceeding `k`.
pub fn colorings_up_to_color_permutation(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(n: usize, k: u32, current: &mut Vec<u32>, max_used: u32, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let limit = (max_used + 1).min(k);
        for c in 1..=limit {
            current.push(c);
            go(n, k, current, max_used.max(c), out);
            current.pop();
        }
    }
    go(n, k, &mut current, 0, &mut out);
    out
}
