//! Brute-force reference implementations.
//!
//! These share nothing with the subset solvers except the graph types and
//! the definitional predicates `vs_of_layout` / `is_colored_layout`; they
//! exist to cross-check the solvers and both directions of the
//! layout-to-interval translation on small instances. Deliberately simple,
//! deliberately slow, and capped accordingly.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Layout};

/// Enumeration cap for the permutation-based oracles.
pub const BRUTE_LAYOUT_CAP: usize = 9;
/// Cap for the ordering-based interval-graph check.
pub const BRUTE_INTERVAL_CAP: usize = 8;
/// Cap for the edge-power-set sandwich oracle.
pub const BRUTE_ICG_CAP: usize = 6;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap { Err(Error::TooLarge { n, cap }) } else { Ok(()) }
}

/// Minimum of `vs_of_layout` over all n! layouts.
pub fn brute_vs(g: &ColoredGraph) -> Result<u32> {
    check_cap(g.n(), BRUTE_LAYOUT_CAP)?;
    let mut best = 0u32;
    let mut first = true;
    for perm in (0..g.n() as u32).permutations(g.n()) {
        let l = Layout::new(perm).expect("permutation by construction");
        let cost = g.vs_of_layout(&l)?;
        if first || cost < best {
            best = cost;
            first = false;
        }
    }
    Ok(if g.n() == 0 { 0 } else { best })
}

/// First colored layout in lexicographic order over vertex ids, if any.
pub fn brute_cvs(g: &ColoredGraph) -> Result<Option<Layout>> {
    check_cap(g.n(), BRUTE_LAYOUT_CAP)?;
    for perm in (0..g.n() as u32).permutations(g.n()) {
        let l = Layout::new(perm).expect("permutation by construction");
        if g.is_colored_layout(&l)? {
            return Ok(Some(l));
        }
    }
    Ok(if g.n() == 0 { Some(Layout::empty()) } else { None })
}

/// Interval-graph test via vertex orderings: the graph is an interval graph
/// iff some ordering v_1..v_n has the property that whenever v_i ~ v_k with
/// i < j < k, also v_j ~ v_k. The search extends a prefix one vertex at a
/// time; appending u is legal iff the prefix positions adjacent to u form a
/// suffix of the prefix, which checks exactly the triples whose largest
/// index is the new position.
pub fn brute_is_interval(n: usize, edges: &[(u32, u32)]) -> Result<bool> {
    check_cap(n, BRUTE_INTERVAL_CAP)?;
    for &(u, v) in edges {
        for w in [u, v] {
            if w as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }

    fn extend(adj: &[u32], prefix: &mut Vec<u32>, used: u32) -> bool {
        let n = adj.len();
        if prefix.len() == n {
            return true;
        }
        for u in 0..n as u32 {
            if used & (1 << u) != 0 {
                continue;
            }
            let mut seen_adjacent = false;
            let mut ok = true;
            for &p in prefix.iter() {
                let adjacent = adj[u as usize] & (1 << p) != 0;
                if seen_adjacent && !adjacent {
                    ok = false;
                    break;
                }
                seen_adjacent |= adjacent;
            }
            if ok {
                prefix.push(u);
                if extend(adj, prefix, used | (1 << u)) {
                    return true;
                }
                prefix.pop();
            }
        }
        false
    }

    Ok(extend(&adj, &mut Vec::with_capacity(n), 0))
}

/// True iff some subset of the non-edges joining differently colored
/// vertices can be added to make the graph an interval graph. A graph with
/// a monochromatic edge has no properly colored supergraph at all, so it is
/// answered `false` outright.
pub fn brute_icg(g: &ColoredGraph) -> Result<bool> {
    check_cap(g.n(), BRUTE_ICG_CAP)?;
    if !g.is_properly_colored() {
        return Ok(false);
    }
    let n = g.n() as u32;
    let mut candidates = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && g.color(u) != g.color(v) {
                candidates.push((u, v));
            }
        }
    }
    let base = g.edges();
    for subset in 0u64..(1u64 << candidates.len()) {
        let mut edges = base.clone();
        for (i, &e) in candidates.iter().enumerate() {
            if subset & (1 << i) != 0 {
                edges.push(e);
            }
        }
        if brute_is_interval(g.n(), &edges)? {
            return Ok(true);
        }
    }
    Ok(false)
}
