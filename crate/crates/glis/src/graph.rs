//! Colored graphs, layouts, and the active-set machinery.
//!
//! Every cost and constraint in this crate reduces to one question about a
//! prefix of a layout: which placed vertices still have a neighbor outside
//! the prefix? That set depends only on the prefix *as a set*, not on the
//! order it was placed in, which is what makes subset-keyed dynamic
//! programming over layouts possible at all.
//!
//! Conventions: vertices are `0..n-1`. Layout positions are 0-based in code;
//! the traditional 1-based position of the vertex at index `i` is `i + 1`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Hard cap on n for the exact subset solvers (they key state on 2^n masks).
/// Larger instances are rejected with [`Error::TooLarge`].
pub const EXACT_N_CAP: usize = 26;

/// An undirected simple graph with one color per vertex from a palette
/// `1..=k`. Immutable after construction; all accessors are borrow-only.
///
/// `k` is the declared palette size, not the number of colors actually used;
/// unused palette colors are legal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    k: u32,
    colors: Vec<u32>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl ColoredGraph {
    /// Builds a graph, validating simplicity (no self-loops, no duplicate
    /// edges), vertex ranges, and that every color lies in `1..=k`.
    pub fn new(n: usize, k: u32, colors: Vec<u32>, edges: &[(u32, u32)]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGraph("palette size k must be at least 1".into()));
        }
        if colors.len() != n {
            return Err(Error::InvalidGraph(format!(
                "expected {n} colors, got {}",
                colors.len()
            )));
        }
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} has color {c}, outside 1..={k}"
                )));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    key.0, key.1
                )));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Self { n, k, colors, adj, edge_count: seen.len() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Palette size from the instance header.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn color(&self, v: u32) -> u32 {
        self.colors[v as usize]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.n as u32
    }

    /// Edges in canonical order: `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff no edge joins two vertices of the same color.
    pub fn is_properly_colored(&self) -> bool {
        self.vertices().all(|u| {
            self.neighbors(u)
                .iter()
                .all(|&v| self.colors[u as usize] != self.colors[v as usize])
        })
    }

    /// The set of placed vertices that still have a neighbor outside
    /// `placed`. The result is a function of `placed` as a set; duplicates
    /// and ordering of the input are irrelevant.
    pub fn active_set<I>(&self, placed: I) -> Result<ActiveSet>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut member = vec![false; self.n];
        for v in placed {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            member[v as usize] = true;
        }
        let members = self
            .vertices()
            .filter(|&v| {
                member[v as usize]
                    && self.neighbors(v).iter().any(|&u| !member[u as usize])
            })
            .collect();
        Ok(ActiveSet { members })
    }

    /// Maximum active-set size over all prefixes of `l`; 0 for edgeless
    /// graphs. Computed incrementally in O(n + m); must agree exactly with
    /// recomputing [`Self::active_set`] per prefix.
    pub fn vs_of_layout(&self, l: &Layout) -> Result<u32> {
        self.check_layout(l)?;
        let mut placed = vec![false; self.n];
        let mut unplaced_deg: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut active = 0u32;
        let mut max_active = 0u32;
        for &v in l.order() {
            placed[v as usize] = true;
            for &u in self.neighbors(v) {
                unplaced_deg[u as usize] -= 1;
                if placed[u as usize] && unplaced_deg[u as usize] == 0 {
                    active -= 1;
                }
            }
            if unplaced_deg[v as usize] > 0 {
                active += 1;
            }
            max_active = max_active.max(active);
        }
        Ok(max_active)
    }

    /// True iff each vertex of `l` after the first has a color absent from
    /// the active set of the preceding prefix. Vacuously true for n <= 1.
    pub fn is_colored_layout(&self, l: &Layout) -> Result<bool> {
        self.check_layout(l)?;
        let mut placed = vec![false; self.n];
        let mut unplaced_deg: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        // Count of active vertices per color value; colors are sparse in
        // general, but values are bounded by k which may be large, so index
        // by color via a map from observed colors only.
        let mut active_color_count: std::collections::HashMap<u32, u32> =
            std::collections::HashMap::new();
        for (i, &v) in l.order().iter().enumerate() {
            if i > 0 {
                let c = self.colors[v as usize];
                if active_color_count.get(&c).copied().unwrap_or(0) > 0 {
                    return Ok(false);
                }
            }
            placed[v as usize] = true;
            for &u in self.neighbors(v) {
                unplaced_deg[u as usize] -= 1;
                if placed[u as usize] && unplaced_deg[u as usize] == 0 {
                    let cu = self.colors[u as usize];
                    *active_color_count.get_mut(&cu).unwrap() -= 1;
                }
            }
            if unplaced_deg[v as usize] > 0 {
                *active_color_count.entry(self.colors[v as usize]).or_insert(0) += 1;
            }
        }
        Ok(true)
    }

    fn check_layout(&self, l: &Layout) -> Result<()> {
        if l.len() != self.n {
            return Err(Error::InvalidLayout(format!(
                "layout has {} vertices, graph has {}",
                l.len(),
                self.n
            )));
        }
        Ok(())
    }
}

/// A permutation of the vertices `0..n-1`. Validated on construction, so a
/// `Layout` value is always a bijection; operations only need to check that
/// its length matches the graph at hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    order: Vec<u32>,
}

impl Layout {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v as usize >= n {
                return Err(Error::InvalidLayout(format!(
                    "vertex {v} out of range for a layout of length {n}"
                )));
            }
            if seen[v as usize] {
                return Err(Error::InvalidLayout(format!("vertex {v} appears twice")));
            }
            seen[v as usize] = true;
        }
        Ok(Self { order })
    }

    pub fn empty() -> Self {
        Self { order: Vec::new() }
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 0-based position of each vertex: `positions()[v]` is the index of `v`
    /// in the order.
    pub fn positions(&self) -> Vec<u32> {
        let mut pos = vec![0u32; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        pos
    }
}

/// The vertices of a prefix that still have a neighbor outside it.
/// Members are kept sorted so equal sets compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveSet {
    members: Vec<u32>,
}

impl ActiveSet {
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// The colors present in the set.
    pub fn colors(&self, g: &ColoredGraph) -> BTreeSet<u32> {
        self.members.iter().map(|&v| g.color(v)).collect()
    }
}
