//! Interval models and the two witness translations between colored layouts
//! and properly colored interval supergraphs, plus the sandwich solver and
//! certificate verification built on them.
//!
//! Endpoints are stored doubled, as integers: the closed interval
//! `[a2/2, b2/2]` is the pair `(a2, b2)`. The forward construction places
//! the vertex at 1-based position `i` on `[i, m + 0.5]` where `m` is the
//! last position among the vertex and its neighbors, i.e. `(2i, 2m + 1)` in
//! doubled units. Every overlap test is exact integer arithmetic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Layout};
use crate::layout::{CvsResult, solve_cvs};

/// Closed intervals with half-integer endpoints, one per vertex, stored in
/// doubled units. Invariants enforced at construction: every interval has
/// positive length and all left endpoints are pairwise distinct.
///
/// Distinct left endpoints make the layout read off the model unique;
/// externally supplied models that violate this are rejected rather than
/// perturbed, because perturbation can silently change the overlap graph.
/// Shift one endpoint into a free gap yourself if you need to repair one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        for (v, &(a2, b2)) in intervals.iter().enumerate() {
            if a2 >= b2 {
                return Err(Error::InvalidModel(format!(
                    "vertex {v}: interval ({a2}, {b2}) is empty or reversed"
                )));
            }
        }
        let mut lefts: Vec<i64> = intervals.iter().map(|&(a2, _)| a2).collect();
        lefts.sort_unstable();
        if lefts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidModel("duplicate left endpoint".into()));
        }
        Ok(Self { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    /// Doubled endpoints `(a2, b2)` of the vertex's interval.
    pub fn interval(&self, v: u32) -> (i64, i64) {
        self.intervals[v as usize]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }
}

/// Proof that a graph is a yes-instance: an interval model whose overlap
/// graph is the input plus `added_edges`, all of which join differently
/// colored vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcgCertificate {
    pub added_edges: Vec<(u32, u32)>,
    pub model: IntervalModel,
}

/// One boolean per certificate clause; `valid` iff all four hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// The model's overlap graph contains every input edge.
    pub covers_input_edges: bool,
    /// The overlap graph is exactly input edges plus declared added edges,
    /// and the declared added edges are disjoint from the input edges.
    pub overlap_matches_union: bool,
    /// Every overlap edge joins differently colored vertices.
    pub properly_colored: bool,
    /// Positive lengths and pairwise distinct left endpoints, re-checked
    /// independently of the model's construction path.
    pub model_invariants: bool,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.covers_input_edges
            && self.overlap_matches_union
            && self.properly_colored
            && self.model_invariants
    }
}

/// Builds the interval model of a colored layout: position i (1-based) gets
/// `[i, m + 0.5]` with m the last position among the vertex and its
/// neighbors. The overlap graph of the result is a properly colored
/// supergraph of `g`; left endpoints are even, right endpoints odd, so no
/// interval is degenerate and all lefts are distinct by construction.
///
/// The layout must be a colored layout of `g`; anything else is rejected,
/// since the properness guarantee is exactly what the colored condition
/// buys.
pub fn layout_to_intervals(g: &ColoredGraph, l: &Layout) -> Result<IntervalModel> {
    if !g.is_colored_layout(l)? {
        return Err(Error::NotColoredLayout);
    }
    let pos = l.positions();
    let mut intervals = vec![(0i64, 0i64); g.n()];
    for (idx, &v) in l.order().iter().enumerate() {
        let i = idx as i64 + 1;
        let m = g
            .neighbors(v)
            .iter()
            .map(|&u| pos[u as usize] as i64 + 1)
            .chain(std::iter::once(i))
            .max()
            .expect("chain is never empty");
        intervals[v as usize] = (2 * i, 2 * m + 1);
    }
    IntervalModel::new(intervals)
}

/// Overlap graph of the model: an edge wherever two closed intervals
/// intersect, i.e. `max(a2_u, a2_v) <= min(b2_u, b2_v)`. Canonical sorted
/// `(min, max)` pairs.
pub fn model_to_graph(m: &IntervalModel) -> Vec<(u32, u32)> {
    let n = m.n();
    let mut edges = Vec::new();
    for u in 0..n {
        let (au, bu) = m.intervals[u];
        for v in (u + 1)..n {
            let (av, bv) = m.intervals[v];
            if au.max(av) <= bu.min(bv) {
                edges.push((u as u32, v as u32));
            }
        }
    }
    edges
}

/// The unique layout listing vertices by increasing left endpoint.
pub fn intervals_to_layout(m: &IntervalModel) -> Layout {
    let mut order: Vec<u32> = (0..m.n() as u32).collect();
    order.sort_by_key(|&v| m.intervals[v as usize].0);
    Layout::new(order).expect("distinct left endpoints give a permutation")
}

/// Decides the interval sandwich question and, on yes, emits a certificate:
/// the interval model of a colored layout, with the overlap edges beyond
/// the input recorded as the added set. The certificate is verified before
/// being returned; a failure there is a solver bug.
pub fn solve_icg(g: &ColoredGraph) -> Result<Option<IcgCertificate>> {
    let witness = match solve_cvs(g)? {
        CvsResult::No { .. } => return Ok(None),
        CvsResult::Yes { witness } => witness,
    };
    let model = layout_to_intervals(g, &witness)?;
    let input_edges: BTreeSet<(u32, u32)> = g.edges().into_iter().collect();
    let added_edges: Vec<(u32, u32)> = model_to_graph(&model)
        .into_iter()
        .filter(|e| !input_edges.contains(e))
        .collect();
    let cert = IcgCertificate { added_edges, model };
    let report = verify_certificate(g, &cert)?;
    if !report.valid() {
        return Err(Error::Internal(format!(
            "solver-produced certificate failed verification: {report:?}"
        )));
    }
    Ok(Some(cert))
}

/// Checks the four certificate clauses independently and reports each one.
/// Fails with [`Error::VertexSetMismatch`] if the model is over a different
/// vertex count than the graph.
pub fn verify_certificate(g: &ColoredGraph, cert: &IcgCertificate) -> Result<VerifyReport> {
    if cert.model.n() != g.n() {
        return Err(Error::VertexSetMismatch(format!(
            "graph has {} vertices, model has {}",
            g.n(),
            cert.model.n()
        )));
    }
    let overlap: BTreeSet<(u32, u32)> = model_to_graph(&cert.model).into_iter().collect();
    let input: BTreeSet<(u32, u32)> = g.edges().into_iter().collect();
    let added: BTreeSet<(u32, u32)> = cert
        .added_edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();

    let covers_input_edges = input.is_subset(&overlap);
    let union: BTreeSet<(u32, u32)> = input.union(&added).copied().collect();
    let overlap_matches_union = overlap == union && input.is_disjoint(&added);
    let properly_colored = overlap.iter().all(|&(u, v)| g.color(u) != g.color(v));
    let model_invariants = cert.model.intervals.iter().all(|&(a2, b2)| a2 < b2) && {
        let mut lefts: Vec<i64> = cert.model.intervals.iter().map(|&(a2, _)| a2).collect();
        lefts.sort_unstable();
        lefts.windows(2).all(|w| w[0] != w[1])
    };

    Ok(VerifyReport {
        covers_input_edges,
        overlap_matches_union,
        properly_colored,
        model_invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_icg, brute_is_interval};

    fn graph(n: usize, k: u32, colors: &[u32], edges: &[(u32, u32)]) -> ColoredGraph {
        ColoredGraph::new(n, k, colors.to_vec(), edges).unwrap()
    }

    #[test]
    fn model_invariants_enforced() {
        assert!(matches!(
            IntervalModel::new(vec![(4, 4)]),
            Err(Error::InvalidModel(_))
        ));
        assert!(matches!(
            IntervalModel::new(vec![(5, 3)]),
            Err(Error::InvalidModel(_))
        ));
        assert!(matches!(
            IntervalModel::new(vec![(2, 5), (2, 9)]),
            Err(Error::InvalidModel(_))
        ));
    }

    #[test]
    fn forward_construction_on_path() {
        // Path 0-1-2 colored (1,2,1), layout (0,1,2): intervals
        // [1,2.5], [2,3.5], [3,3.5]; overlap edges exactly the path's.
        let g = graph(3, 2, &[1, 2, 1], &[(0, 1), (1, 2)]);
        let l = Layout::new(vec![0, 1, 2]).unwrap();
        let m = layout_to_intervals(&g, &l).unwrap();
        assert_eq!(m.interval(0), (2, 5));
        assert_eq!(m.interval(1), (4, 7));
        assert_eq!(m.interval(2), (6, 7));
        assert_eq!(model_to_graph(&m), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn forward_construction_single_vertex() {
        let g = graph(1, 1, &[1], &[]);
        let m = layout_to_intervals(&g, &Layout::new(vec![0]).unwrap()).unwrap();
        assert_eq!(m.interval(0), (2, 3)); // [1, 1.5], the j = i clause
    }

    #[test]
    fn forward_construction_p4_adds_nothing() {
        let g = graph(4, 3, &[1, 2, 3, 1], &[(0, 1), (1, 2), (2, 3)]);
        let l = Layout::new(vec![0, 1, 2, 3]).unwrap();
        let m = layout_to_intervals(&g, &l).unwrap();
        assert_eq!(m.interval(0), (2, 5));
        assert_eq!(m.interval(1), (4, 7));
        assert_eq!(m.interval(2), (6, 9));
        assert_eq!(m.interval(3), (8, 9));
        assert_eq!(model_to_graph(&m), g.edges());
        let cert = IcgCertificate { added_edges: vec![], model: m };
        assert!(verify_certificate(&g, &cert).unwrap().valid());
    }

    #[test]
    fn forward_construction_requires_colored_layout() {
        let g = graph(2, 2, &[1, 1], &[(0, 1)]);
        let l = Layout::new(vec![0, 1]).unwrap();
        assert!(matches!(layout_to_intervals(&g, &l), Err(Error::NotColoredLayout)));
    }

    #[test]
    fn overlap_graph_examples() {
        // Unit-coordinate intervals [1,3], [2,5], [4,6] doubled.
        let m = IntervalModel::new(vec![(2, 6), (4, 10), (8, 12)]).unwrap();
        assert_eq!(model_to_graph(&m), vec![(0, 1), (1, 2)]);

        let disjoint = IntervalModel::new(vec![(2, 4), (6, 8)]).unwrap();
        assert_eq!(model_to_graph(&disjoint), vec![]);

        // Recomputed from the forward-transform example.
        let m = IntervalModel::new(vec![(2, 5), (4, 7), (6, 7)]).unwrap();
        assert_eq!(model_to_graph(&m), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn touching_endpoints_overlap() {
        // Closed intervals: sharing a single point is an intersection.
        let m = IntervalModel::new(vec![(2, 6), (6, 8)]).unwrap();
        assert_eq!(model_to_graph(&m), vec![(0, 1)]);
    }

    #[test]
    fn layout_from_model_examples() {
        let m = IntervalModel::new(vec![(2, 6), (4, 10), (8, 12)]).unwrap();
        assert_eq!(intervals_to_layout(&m).order(), &[0, 1, 2]);

        let single = IntervalModel::new(vec![(2, 3)]).unwrap();
        assert_eq!(intervals_to_layout(&single).order(), &[0]);

        let shuffled = IntervalModel::new(vec![(8, 12), (2, 6), (4, 10)]).unwrap();
        assert_eq!(intervals_to_layout(&shuffled).order(), &[1, 2, 0]);
    }

    #[test]
    fn round_trip_reproduces_layout() {
        let g = graph(4, 3, &[1, 2, 3, 1], &[(0, 1), (1, 2), (2, 3)]);
        let l = Layout::new(vec![3, 2, 1, 0]).unwrap();
        assert!(g.is_colored_layout(&l).unwrap());
        let m = layout_to_intervals(&g, &l).unwrap();
        assert_eq!(intervals_to_layout(&m), l);
    }

    #[test]
    fn solve_icg_yes_cases() {
        let p3 = graph(3, 2, &[1, 2, 1], &[(0, 1), (1, 2)]);
        let cert = solve_icg(&p3).unwrap().expect("P3 is already interval");
        assert!(cert.added_edges.is_empty());
        assert!(verify_certificate(&p3, &cert).unwrap().valid());

        // 3-colored 4-cycle: the only possible chord between differently
        // colored vertices is (0, 2), and some chord must be added because
        // the 4-cycle itself is not an interval graph.
        let c4 = graph(4, 3, &[1, 2, 3, 2], &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let cert = solve_icg(&c4).unwrap().expect("brute_icg says yes");
        assert!(brute_icg(&c4).unwrap());
        assert_eq!(cert.added_edges, vec![(0, 2)]);
        assert!(verify_certificate(&c4, &cert).unwrap().valid());
    }

    #[test]
    fn solve_icg_no_case() {
        let c4 = graph(4, 2, &[1, 2, 1, 2], &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(solve_icg(&c4).unwrap().is_none());
        assert!(!brute_icg(&c4).unwrap());
    }

    #[test]
    fn solve_icg_empty_graph() {
        let g = graph(0, 1, &[], &[]);
        let cert = solve_icg(&g).unwrap().expect("trivial yes");
        assert_eq!(cert.model.n(), 0);
        assert!(cert.added_edges.is_empty());
    }

    #[test]
    fn verify_flags_missing_overlap() {
        // Model with disjoint intervals cannot cover the input edge.
        let g = graph(2, 2, &[1, 2], &[(0, 1)]);
        let model = IntervalModel::new(vec![(2, 3), (4, 5)]).unwrap();
        let cert = IcgCertificate { added_edges: vec![], model };
        let r = verify_certificate(&g, &cert).unwrap();
        assert!(!r.covers_input_edges);
        assert!(!r.valid());
    }

    #[test]
    fn verify_flags_monochromatic_added_edge() {
        // Two same-colored, non-adjacent vertices forced to overlap.
        let g = graph(3, 2, &[1, 2, 1], &[(0, 1)]);
        let model = IntervalModel::new(vec![(2, 7), (4, 7), (6, 9)]).unwrap();
        let added = vec![(0, 2), (1, 2)];
        let cert = IcgCertificate { added_edges: added, model };
        let r = verify_certificate(&g, &cert).unwrap();
        assert!(r.covers_input_edges);
        assert!(r.overlap_matches_union);
        assert!(!r.properly_colored);
        assert!(!r.valid());
    }

    #[test]
    fn verify_flags_undeclared_overlap() {
        let g = graph(2, 2, &[1, 2], &[]);
        let model = IntervalModel::new(vec![(2, 5), (4, 7)]).unwrap();
        let cert = IcgCertificate { added_edges: vec![], model };
        let r = verify_certificate(&g, &cert).unwrap();
        assert!(!r.overlap_matches_union);
    }

    #[test]
    fn verify_rejects_mismatched_vertex_set() {
        let g = graph(2, 2, &[1, 2], &[(0, 1)]);
        let model = IntervalModel::new(vec![(2, 5)]).unwrap();
        let cert = IcgCertificate { added_edges: vec![], model };
        assert!(matches!(
            verify_certificate(&g, &cert),
            Err(Error::VertexSetMismatch(_))
        ));
    }

    #[test]
    fn model_overlap_graphs_are_interval() {
        let m = IntervalModel::new(vec![(0, 9), (2, 5), (4, 11), (6, 7), (8, 13)]).unwrap();
        let edges = model_to_graph(&m);
        assert!(brute_is_interval(m.n(), &edges).unwrap());
    }
}
