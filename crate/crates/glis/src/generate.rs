//! Seeded instance generators.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded via
//! `seed_from_u64`, which produces identical streams on every platform; the
//! same parameters and seed always yield byte-identical instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::ColoredGraph;

/// A generated instance plus any parameter-clamping notes. Generators never
/// fail; out-of-range parameters are clamped and reported here.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: ColoredGraph,
    pub warnings: Vec<String>,
}

fn clamp_prob(p: f64, name: &str, warnings: &mut Vec<String>) -> f64 {
    if p.is_nan() {
        warnings.push(format!("{name} was NaN, clamped to 1"));
        1.0
    } else if p < 0.0 {
        warnings.push(format!("{name} = {p} below 0, clamped to 0"));
        0.0
    } else if p > 1.0 {
        warnings.push(format!("{name} = {p} above 1, clamped to 1"));
        1.0
    } else {
        p
    }
}

/// Generates a guaranteed yes-instance of the k-interval sandwich question.
///
/// Construction: place n intervals left to right with sweep-limited right
/// endpoints so the overlap depth never exceeds k (whenever k - 1 intervals
/// are already open, the next one closes immediately); color greedily by
/// increasing left endpoint with the lowest color absent among the open
/// intervals; take the interval graph's edges and keep each independently
/// with probability `keep_prob`. The pre-deletion model is a properly
/// colored interval supergraph of whatever survives, so the output is a
/// yes-instance by construction.
pub fn gen_yes_instance(n: u32, k: u32, keep_prob: f64, seed: u64) -> Generated {
    let mut warnings = Vec::new();
    let n = if n == 0 {
        warnings.push("n = 0 clamped to 1".into());
        1
    } else {
        n
    } as usize;
    let k = if k == 0 {
        warnings.push("k = 0 clamped to 1".into());
        1
    } else {
        k
    };
    let keep_prob = clamp_prob(keep_prob, "keep_prob", &mut warnings);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Vertex v occupies [v+1, end[v] + 0.5] in layout coordinates; two
    // intervals overlap iff the earlier one's end reaches the later start.
    let mut ends = vec![0u32; n];
    let mut colors = vec![0u32; n];
    let mut open: Vec<u32> = Vec::new(); // vertices whose interval is still open
    for v in 0..n {
        let start = v as u32 + 1;
        open.retain(|&u| ends[u as usize] >= start);
        debug_assert!(open.len() < k as usize);
        let end = if open.len() as u32 == k - 1 {
            start
        } else {
            rng.random_range(start..=n as u32)
        };
        ends[v] = end;
        let mut color = 1;
        while open.iter().any(|&u| colors[u as usize] == color) {
            color += 1;
        }
        debug_assert!(color <= k);
        colors[v] = color;
        open.push(v as u32);
    }

    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            let overlap = ends[u as usize] > v;
            if overlap && rng.random::<f64>() < keep_prob {
                edges.push((u, v));
            }
        }
    }

    let graph = ColoredGraph::new(n, k, colors, &edges)
        .expect("generated instances are well-formed");
    Generated { graph, warnings }
}

/// Uniform random graph: each pair is an edge independently with
/// probability `p`; colors are uniform over 1..=k unless `distinct_colors`
/// forces a distinct color per vertex (raising k to n if needed).
pub fn gen_random(n: u32, k: u32, p: f64, seed: u64, distinct_colors: bool) -> Generated {
    let mut warnings = Vec::new();
    let mut k = if k == 0 {
        warnings.push("k = 0 clamped to 1".into());
        1
    } else {
        k
    };
    let p = clamp_prob(p, "p", &mut warnings);
    if distinct_colors && k < n {
        warnings.push(format!("distinct colors need k >= n; raising k from {k} to {n}"));
        k = n;
    }
    let n = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let colors: Vec<u32> = if distinct_colors {
        (1..=n as u32).collect()
    } else {
        (0..n).map(|_| rng.random_range(1..=k)).collect()
    };

    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }

    let graph = ColoredGraph::new(n, k, colors, &edges)
        .expect("generated instances are well-formed");
    Generated { graph, warnings }
}
