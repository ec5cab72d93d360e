//! Seeded synthetic instances for the CLI demos and the test harnesses:
//! random graphs, cluster chains of dense pairs, and chorded cycles with a
//! prescribed bipartiteness profile.

use crate::graph::{bipartition, build_chorded_cycle, ChordSet, SimpleGraph};
use crate::pairs::{density, typical_vertices, AnchoredPathSpec, ClusterChain};
use rand::Rng;

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// Random bipartite graph with sides `0..a` and `a..a+b`; only cross edges.
pub fn random_bipartite(a: usize, b: usize, p: f64, rng: &mut impl Rng) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(a + b, edges).unwrap()
}

/// A chain of `ell` disjoint clusters of the given size; consecutive
/// clusters are joined by independent edges of probability `p`, with no
/// other edges.
pub fn cluster_chain(ell: usize, size: usize, p: f64, rng: &mut impl Rng) -> ClusterChain {
    let n = ell * size;
    let clusters: Vec<Vec<usize>> = (0..ell)
        .map(|j| (j * size..(j + 1) * size).collect())
        .collect();
    let mut edges = Vec::new();
    for j in 0..ell - 1 {
        for &u in &clusters[j] {
            for &v in &clusters[j + 1] {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
    }
    let host = SimpleGraph::from_edges(n, edges).unwrap();
    ClusterChain::new(host, clusters).expect("constructed clusters are valid")
}

/// Anchored path specs over a chain, one per requested length, with anchors
/// drawn from the typical vertices of the first and last clusters (the
/// anchor hypothesis of the chain embedder).
pub fn anchored_specs(chain: &ClusterChain, lengths: &[usize], eps: f64) -> Vec<AnchoredPathSpec> {
    let ell = chain.len();
    let d_first = density(&chain.host, &chain.clusters[0], &chain.clusters[1])
        .map(|d| d.value())
        .unwrap_or(0.0);
    let d_last = density(
        &chain.host,
        &chain.clusters[ell - 2],
        &chain.clusters[ell - 1],
    )
    .map(|d| d.value())
    .unwrap_or(0.0);
    let starts = typical_vertices(
        &chain.host,
        &chain.clusters[0],
        &chain.clusters[1],
        eps,
        d_first,
    );
    let ends = typical_vertices(
        &chain.host,
        &chain.clusters[ell - 1],
        &chain.clusters[ell - 2],
        eps,
        d_last,
    );
    assert!(
        starts.len() >= lengths.len() && ends.len() >= lengths.len(),
        "not enough typical anchors"
    );
    lengths
        .iter()
        .enumerate()
        .map(|(i, &length)| AnchoredPathSpec {
            length,
            start_anchor: starts[i],
            end_anchor: ends[i],
        })
        .collect()
}

/// A bipartite chorded cycle: even `n`, chords joining opposite parity
/// classes, endpoints kept disjoint so the maximum degree stays 3.
/// Returns the graph and its chord set.
pub fn bipartite_chorded_cycle(
    n: usize,
    max_chords: usize,
    rng: &mut impl Rng,
) -> (SimpleGraph, ChordSet) {
    assert!(n % 2 == 0 && n >= 8);
    let mut taken = vec![false; n];
    let mut chords = Vec::new();
    let mut attempts = 0;
    while chords.len() < max_chords && attempts < 50 * max_chords.max(1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let span = 2 * rng.gen_range(1..=(n / 2 - 1).max(2) / 2) + 1; // odd span
        let v = (u + span) % n;
        let (a, b) = (u.min(v), u.max(v));
        let gap = b - a;
        if gap < 3 || gap > n - 3 || taken[a] || taken[b] {
            continue;
        }
        taken[a] = true;
        taken[b] = true;
        chords.push((a, b));
    }
    let set = ChordSet::new(n, chords).unwrap();
    let g = build_chorded_cycle(n, &set).unwrap();
    debug_assert!(bipartition(&g).is_some());
    (g, set)
}

/// An odd chorded cycle with almost-bipartiteness index exactly `k`:
/// `k` well-separated short chords `{c, c+2}` pin `k` vertex-disjoint
/// triangles, plus extra chords consistent with the bipartition that
/// removing one vertex per triangle leaves behind. Panics when `n` is too
/// small for the separation constraints.
pub fn indexed_chorded_cycle(
    n: usize,
    k: usize,
    extra_chords: usize,
    rng: &mut impl Rng,
) -> (SimpleGraph, ChordSet) {
    assert!(n % 2 == 1 && k >= 1);
    assert!(n >= 12 * k + 8, "cycle too short for {k} separated triangles");
    // triangle chords at evenly spread positions
    let stride = n / k;
    let triangle_starts: Vec<usize> = (0..k).map(|i| i * stride).collect();
    let mut chords: Vec<(usize, usize)> = triangle_starts.iter().map(|&c| (c, c + 2)).collect();
    let mut taken = vec![false; n];
    for &c in &triangle_starts {
        for d in 0..=2 {
            taken[(c + d) % n] = true;
        }
    }

    // reference bipartition of the cycle with one triangle vertex removed
    // per triangle: extra chords must respect it
    let base = build_chorded_cycle(n, &ChordSet::new(n, chords.clone()).unwrap()).unwrap();
    let removals: Vec<usize> = triangle_starts.clone();
    let side = {
        use crate::bits::VertexSet;
        let removed = VertexSet::from_iter(n, removals.iter().copied());
        crate::graph::bipartite::two_coloring_excluding(&base, &removed)
            .expect("removing one vertex per triangle leaves a bipartite graph")
    };

    let mut placed = 0;
    let mut attempts = 0;
    while placed < extra_chords && attempts < 200 * extra_chords.max(1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let (a, b) = (u.min(v), u.max(v));
        let gap = b - a;
        if gap < 3 || gap > n - 3 || taken[a] || taken[b] {
            continue;
        }
        // both endpoints colored (not removed) and on opposite sides
        if side[a] == 2 || side[b] == 2 || side[a] == side[b] {
            continue;
        }
        taken[a] = true;
        taken[b] = true;
        chords.push((a, b));
        placed += 1;
    }
    let set = ChordSet::new(n, chords).unwrap();
    let g = build_chorded_cycle(n, &set).unwrap();
    (g, set)
}
