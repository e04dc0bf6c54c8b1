//! Exact solvers over layouts: minimum vertex separation, colored-layout
//! search, path-decomposition extraction, and the classic derived layout
//! cost metrics.
//!
//! Both solvers run over subsets of the vertex set. That is sound because
//! the active set of a prefix depends only on the prefix as a set: a state
//! is fully described by *which* vertices are placed, never in what order.
//! States are u32 bit masks, so instances are capped at [`EXACT_N_CAP`].

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, EXACT_N_CAP, Layout};

/// A sequence of vertex bags witnessing a pathwidth bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    bags: Vec<Vec<u32>>,
}

impl PathDecomposition {
    pub fn bags(&self) -> &[Vec<u32>] {
        &self.bags
    }

    /// Max bag size minus one; 0 for an empty decomposition.
    pub fn width(&self) -> u32 {
        self.bags
            .iter()
            .map(|b| b.len() as u32)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Checks the three defining invariants against `g`: every vertex in
    /// some bag, both endpoints of every edge together in some bag, and each
    /// vertex's bags forming a contiguous range.
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        let n = g.n();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![usize::MAX; n];
        let mut count = vec![0usize; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                let v = v as usize;
                if first[v] == usize::MAX {
                    first[v] = i;
                }
                last[v] = i;
                count[v] += 1;
            }
        }
        for v in 0..n {
            if first[v] == usize::MAX {
                return Err(Error::Internal(format!("vertex {v} missing from every bag")));
            }
            if count[v] != last[v] - first[v] + 1 {
                return Err(Error::Internal(format!(
                    "bags containing vertex {v} are not contiguous"
                )));
            }
        }
        for (u, v) in g.edges() {
            let covered = self
                .bags
                .iter()
                .any(|b| b.contains(&u) && b.contains(&v));
            if !covered {
                return Err(Error::Internal(format!("edge ({u}, {v}) not covered by any bag")));
            }
        }
        Ok(())
    }
}

/// Why a colored-layout instance was answered no.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// Some edge joins two vertices of the same color; no properly colored
    /// supergraph (and hence no colored layout) can exist.
    MonochromaticEdge,
    /// The graph is properly colored but no colored layout exists.
    NoColoredLayout,
}

impl NoReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NoReason::MonochromaticEdge => "monochromatic-edge",
            NoReason::NoColoredLayout => "no-colored-layout",
        }
    }
}

/// Outcome of the colored-layout decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CvsResult {
    Yes { witness: Layout },
    No { reason: NoReason },
}

impl CvsResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, CvsResult::Yes { .. })
    }

    pub fn witness(&self) -> Option<&Layout> {
        match self {
            CvsResult::Yes { witness } => Some(witness),
            CvsResult::No { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<NoReason> {
        match self {
            CvsResult::Yes { .. } => None,
            CvsResult::No { reason } => Some(*reason),
        }
    }
}

/// The classic layout metrics determined by a vertex separation value:
/// pathwidth equals it, node search number and gate matrix layout cost both
/// exceed it by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivedMetrics {
    pub pathwidth: u32,
    pub node_search_number: u32,
    pub gate_matrix_cost: u32,
}

pub fn derived_metrics(vs_value: u32) -> DerivedMetrics {
    DerivedMetrics {
        pathwidth: vs_value,
        node_search_number: vs_value + 1,
        gate_matrix_cost: vs_value + 1,
    }
}

fn check_exact_cap(n: usize) -> Result<()> {
    if n > EXACT_N_CAP {
        Err(Error::TooLarge { n, cap: EXACT_N_CAP })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &ColoredGraph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect()
}

/// Minimum vertex separation over all layouts, with a layout attaining it.
/// Colors are ignored. Runs the subset recurrence
/// `cost(S) = max(|active(S)|, min over v in S of cost(S minus v))`
/// with `cost(empty) = 0`, then rebuilds a witness by walking the
/// minimizing choices back from the full set (smallest vertex id on ties,
/// so the witness is deterministic).
pub fn exact_vs(g: &ColoredGraph) -> Result<(u32, Layout)> {
    let n = g.n();
    check_exact_cap(n)?;
    if n == 0 {
        return Ok((0, Layout::empty()));
    }
    let adj = adjacency_masks(g);
    let full: u32 = (1u32 << n) - 1; // n <= EXACT_N_CAP < 32
    let mut cost = vec![0u8; 1usize << n];
    for mask in 1..=full {
        let comp = !mask & full;
        let mut active = 0u8;
        let mut best = u8::MAX;
        let mut s = mask;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            if adj[v] & comp != 0 {
                active += 1;
            }
            let prev = cost[(mask & !(1u32 << v)) as usize];
            if prev < best {
                best = prev;
            }
        }
        cost[mask as usize] = best.max(active);
    }

    let mut order = vec![0u32; n];
    let mut mask = full;
    for pos in (0..n).rev() {
        let mut chosen = None;
        let mut chosen_cost = u8::MAX;
        let mut s = mask;
        while s != 0 {
            let v = s.trailing_zeros();
            s &= s - 1;
            let prev = cost[(mask & !(1u32 << v)) as usize];
            if prev < chosen_cost {
                chosen_cost = prev;
                chosen = Some(v);
            }
        }
        let v = chosen.expect("nonempty mask");
        order[pos] = v;
        mask &= !(1u32 << v);
    }
    let witness = Layout::new(order).expect("reconstruction visits each vertex once");

    let vs = cost[full as usize] as u32;
    if g.vs_of_layout(&witness)? != vs {
        return Err(Error::Internal("vs witness does not attain the optimum".into()));
    }
    Ok((vs, witness))
}

/// Decides whether a colored layout exists and returns one if so.
///
/// States are sets S of placed vertices; S can be extended by any unplaced
/// vertex whose color is absent from the active set of S. The full set is
/// reachable iff a colored layout exists. An improperly colored input is
/// answered no without searching. On yes the witness is re-checked against
/// the definitional predicate and the implied separation bound
/// `vs <= k - 1`; a violation means a solver bug and surfaces as
/// [`Error::Internal`].
pub fn solve_cvs(g: &ColoredGraph) -> Result<CvsResult> {
    let n = g.n();
    check_exact_cap(n)?;
    if !g.is_properly_colored() {
        return Ok(CvsResult::No { reason: NoReason::MonochromaticEdge });
    }
    if n == 0 {
        return Ok(CvsResult::Yes { witness: Layout::empty() });
    }

    let adj = adjacency_masks(g);
    let full: u32 = (1u32 << n) - 1; // n <= EXACT_N_CAP < 32

    // Colors get remapped to dense bit positions; at most n <= 26 distinct
    // color values occur, so a u32 bit set suffices regardless of k.
    let mut used: Vec<u32> = g.colors().to_vec();
    used.sort_unstable();
    used.dedup();
    let color_bit: Vec<u32> = g
        .colors()
        .iter()
        .map(|c| 1u32 << used.binary_search(c).expect("color present"))
        .collect();

    let active_colors = |mask: u32| -> u32 {
        let comp = !mask & full;
        let mut bits = 0u32;
        let mut s = mask;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            if adj[v] & comp != 0 {
                bits |= color_bit[v];
            }
        }
        bits
    };

    let mut reachable = vec![false; 1usize << n];
    reachable[0] = true;
    for mask in 0..full {
        if !reachable[mask as usize] {
            continue;
        }
        let blocked = active_colors(mask);
        let mut s = !mask & full;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            if color_bit[v] & blocked == 0 {
                reachable[(mask | (1u32 << v)) as usize] = true;
            }
        }
    }

    if !reachable[full as usize] {
        return Ok(CvsResult::No { reason: NoReason::NoColoredLayout });
    }

    // Walk back from the full set, taking the smallest removable vertex at
    // each step so the witness is deterministic.
    let mut order = vec![0u32; n];
    let mut mask = full;
    for pos in (0..n).rev() {
        let mut s = mask;
        let mut found = None;
        while s != 0 {
            let v = s.trailing_zeros();
            s &= s - 1;
            let prev = mask & !(1u32 << v);
            if reachable[prev as usize] && color_bit[v as usize] & active_colors(prev) == 0 {
                found = Some(v);
                break;
            }
        }
        let v = found.ok_or_else(|| {
            Error::Internal("reachable state with no colored predecessor".into())
        })?;
        order[pos] = v;
        mask &= !(1u32 << v);
    }

    let witness = Layout::new(order).expect("reconstruction visits each vertex once");
    if !g.is_colored_layout(&witness)? {
        return Err(Error::Internal("cvs witness is not a colored layout".into()));
    }
    if g.vs_of_layout(&witness)? >= g.k() {
        return Err(Error::Internal(
            "colored layout exceeds the implied separation bound k - 1".into(),
        ));
    }
    Ok(CvsResult::Yes { witness })
}

/// Bags `B_i = V_{i-1} + v_i` for the given layout; the width equals
/// `vs_of_layout(g, l)` exactly. The construction is re-validated before it
/// is returned.
pub fn layout_to_path_decomposition(g: &ColoredGraph, l: &Layout) -> Result<PathDecomposition> {
    let vs = g.vs_of_layout(l)?; // also validates the layout against g
    let mut bags = Vec::with_capacity(l.len());
    for (i, &v) in l.order().iter().enumerate() {
        let prefix = l.order()[..i].iter().copied();
        let mut bag: Vec<u32> = g.active_set(prefix)?.members().to_vec();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    let pd = PathDecomposition { bags };
    pd.validate(g)?;
    if !l.is_empty() && pd.width() != vs {
        return Err(Error::Internal("path decomposition width differs from layout cost".into()));
    }
    Ok(pd)
}
