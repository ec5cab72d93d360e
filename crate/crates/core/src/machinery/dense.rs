//! Greedy embedders for dense hosts and the two-colored cleanup step.

use crate::graph::{Embedding, GraphError, SimpleGraph, VertexPartition};
use crate::ramsey::{Color, ColoredCompleteGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Greedy embedding of a bounded-degree pattern into a dense host.
///
/// Host vertices of degree below `(1 - 2 eps) |F|` count as low. When the
/// pattern spans the host, low-degree host vertices are matched to
/// low-degree pattern vertices first; afterwards pattern vertices follow a
/// connectivity-respecting order and each one prefers the valid candidate
/// with the most unused high-degree neighbors, backtracking a bounded
/// number of times when a vertex runs out of candidates. Still a heuristic:
/// `None` means it gave up, not that no embedding exists.
pub fn greedy_dense_embed(
    pattern: &SimpleGraph,
    host: &SimpleGraph,
    eps: f64,
) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let hn = host.n();
    let high_threshold = (1.0 - 2.0 * eps) * hn as f64;
    let is_high = |v: usize| host.degree(v) as f64 >= high_threshold;

    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; hn];
    let valid = |image: &[usize], used: &[bool], p: usize, w: usize| {
        !used[w]
            && pattern
                .neighbors(p)
                .all(|q| image[q] == usize::MAX || host.has_edge(w, image[q]))
    };

    // spanning case: place the scarce low-degree host vertices first, onto
    // the lowest-degree pattern vertices they can legally take
    if pattern.n() == hn {
        let mut lows: Vec<usize> = (0..hn).filter(|&v| !is_high(v)).collect();
        lows.sort_by_key(|&v| (host.degree(v), v));
        for w in lows {
            let mut cands: Vec<usize> = (0..pattern.n())
                .filter(|&p| image[p] == usize::MAX && valid(&image, &used, p, w))
                .collect();
            cands.sort_by_key(|&p| (pattern.degree(p), p));
            match cands.first() {
                Some(&p) => {
                    image[p] = w;
                    used[w] = true;
                }
                None => return None,
            }
        }
    }

    // extension order depends only on which vertices are placed, so it is
    // fixed up front: most placed neighbors, then degree, then index
    let mut order = Vec::new();
    {
        let mut placed: Vec<bool> = image.iter().map(|&w| w != usize::MAX).collect();
        loop {
            let next = (0..pattern.n())
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    (
                        pattern.neighbors(p).filter(|&q| placed[q]).count(),
                        pattern.degree(p),
                        std::cmp::Reverse(p),
                    )
                });
            let Some(p) = next else { break };
            placed[p] = true;
            order.push(p);
        }
    }

    fn extend(
        pattern: &SimpleGraph,
        host: &SimpleGraph,
        order: &[usize],
        pos: usize,
        image: &mut [usize],
        used: &mut [bool],
        budget: &mut u64,
        score: &dyn Fn(&[bool], usize) -> usize,
        valid: &dyn Fn(&[usize], &[bool], usize, usize) -> bool,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let p = order[pos];
        let mut cands: Vec<usize> = (0..host.n()).filter(|&w| valid(image, used, p, w)).collect();
        cands.sort_by_key(|&w| (std::cmp::Reverse(score(used, w)), w));
        for w in cands {
            image[p] = w;
            used[w] = true;
            if extend(pattern, host, order, pos + 1, image, used, budget, score, valid) {
                return true;
            }
            used[w] = false;
            image[p] = usize::MAX;
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
        }
        false
    }

    let score = |used: &[bool], w: usize| {
        host.neighbors(w).filter(|&x| !used[x] && is_high(x)).count()
    };
    let mut budget = 64 * hn as u64;
    if extend(
        pattern,
        host,
        &order,
        0,
        &mut image,
        &mut used,
        &mut budget,
        &score,
        &valid,
    ) {
        let embedding = Embedding { map: image };
        debug_assert!(embedding.is_valid(pattern, host));
        Some(embedding)
    } else {
        None
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwoSidedError {
    #[error("part {part} of the pattern ({need}) exceeds its host side ({have})")]
    Capacity {
        part: &'static str,
        need: usize,
        have: usize,
    },
    #[error("pattern partition must be proper with 2 or 3 parts covering the pattern")]
    BadPartition,
    #[error("host sides overlap at vertex {0}")]
    OverlappingSides(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoSidedOutcome {
    pub embedding: Option<Embedding>,
    /// Largest missing color-degree from the second host side into the first.
    pub actual_defect: usize,
    /// Whether the counting argument guarantees success: the claimed defect
    /// covers the actual one and `|A| - Delta * defect > |Y| - 1` on the
    /// (common-neighborhood-restricted) sides.
    pub guaranteed: bool,
}

/// Embeds a bipartite (or almost-bipartite) pattern into one color class of
/// a complete-graph coloring, across two host vertex sets.
///
/// Pattern part 0 (`X`) lands in `b_side` arbitrarily, part 1 (`Y`) is
/// placed vertex by vertex into common color-neighbors inside `a_side` of
/// the already-placed neighbors. A third pattern part (`Z`, independent) is
/// placed first into `s_side`; the `X`/`Y` pools then shrink to the common
/// color-neighborhoods of the `Z` images, which settles all edges at `Z`.
pub fn two_sided_greedy_embed(
    host: &ColoredCompleteGraph,
    color: Color,
    a_side: &[usize],
    b_side: &[usize],
    s_side: &[usize],
    pattern: &SimpleGraph,
    parts: &VertexPartition,
    claimed_defect: usize,
) -> Result<TwoSidedOutcome, TwoSidedError> {
    if parts.domain_len() != pattern.n() || !parts.is_proper_for(pattern) {
        return Err(TwoSidedError::BadPartition);
    }
    let mut all_sides = a_side.iter().chain(b_side).chain(s_side);
    let mut seen = std::collections::HashSet::new();
    if let Some(&dup) = all_sides.find(|&&v| !seen.insert(v)) {
        return Err(TwoSidedError::OverlappingSides(dup));
    }
    let x_part = parts.part(0);
    let y_part = parts.part(1);
    let z_part: &[usize] = if parts.arity() == 3 { parts.part(2) } else { &[] };
    if x_part.len() > b_side.len() {
        return Err(TwoSidedError::Capacity {
            part: "X",
            need: x_part.len(),
            have: b_side.len(),
        });
    }
    if y_part.len() > a_side.len() {
        return Err(TwoSidedError::Capacity {
            part: "Y",
            need: y_part.len(),
            have: a_side.len(),
        });
    }
    if z_part.len() > s_side.len() {
        return Err(TwoSidedError::Capacity {
            part: "Z",
            need: z_part.len(),
            have: s_side.len(),
        });
    }

    let colored = host.subgraph(color);
    let mut image = vec![usize::MAX; pattern.n()];

    // Z first, arbitrarily = ascending
    for (&z, &s) in z_part.iter().zip(s_side) {
        image[z] = s;
    }
    // pools restricted to common color-neighbors of the Z images
    let common_ok = |v: usize| z_part.iter().all(|&z| colored.has_edge(v, image[z]));
    let a_pool: Vec<usize> = a_side.iter().copied().filter(|&v| common_ok(v)).collect();
    let b_pool: Vec<usize> = b_side.iter().copied().filter(|&v| common_ok(v)).collect();

    let delta = pattern.max_degree();
    let actual_defect = b_pool
        .iter()
        .map(|&b| a_pool.iter().filter(|&&a| !colored.has_edge(a, b)).count())
        .max()
        .unwrap_or(0);
    let guaranteed = actual_defect <= claimed_defect
        && x_part.len() <= b_pool.len()
        && a_pool.len() > delta * claimed_defect + y_part.len().saturating_sub(1);

    let outcome = |embedding| TwoSidedOutcome {
        embedding,
        actual_defect,
        guaranteed,
    };
    if x_part.len() > b_pool.len() {
        return Ok(outcome(None));
    }
    for (&x, &b) in x_part.iter().zip(&b_pool) {
        image[x] = b;
    }
    let mut used = std::collections::HashSet::new();
    for y in y_part {
        let w = a_pool.iter().copied().find(|&a| {
            !used.contains(&a)
                && pattern
                    .neighbors(*y)
                    .all(|q| image[q] == usize::MAX || colored.has_edge(a, image[q]))
        });
        match w {
            Some(a) => {
                image[*y] = a;
                used.insert(a);
            }
            None => return Ok(outcome(None)),
        }
    }
    let embedding = Embedding { map: image };
    debug_assert!(embedding.is_valid(pattern, colored));
    Ok(outcome(Some(embedding)))
}

/// Two graphs on a shared vertex set, one per color; an edge may carry both
/// colors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiColoredGraph {
    layers: [SimpleGraph; 2],
}

impl MultiColoredGraph {
    pub fn new(layer0: SimpleGraph, layer1: SimpleGraph) -> Result<Self, GraphError> {
        if layer0.n() != layer1.n() {
            return Err(GraphError::VertexOutOfRange {
                v: layer1.n(),
                n: layer0.n(),
            });
        }
        Ok(MultiColoredGraph {
            layers: [layer0, layer1],
        })
    }

    pub fn n(&self) -> usize {
        self.layers[0].n()
    }

    pub fn layer(&self, color: usize) -> &SimpleGraph {
        &self.layers[color]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanupOutcome {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub removed_from_v1: Vec<usize>,
    pub removed_from_v2: Vec<usize>,
    /// Whether the input satisfied the stability hypotheses, in which case
    /// the removal-count guarantees were asserted.
    pub hypotheses_hold: bool,
}

/// Removes the vertices that deviate from the expected color pattern on the
/// pair `(v1, v2)` where `majority` is the dominant color inside `v1` and
/// the other color dominates across.
///
/// A `v1` vertex goes when it has at least `beta^(1/10) |v1|` wrong-color
/// edges inside `v1`, or sends at least `beta^(1/10) |v2|` majority-color
/// edges to `v2`; a `v2` vertex goes when it sends at least
/// `beta^(1/10) |v1|` majority-color edges to `v1`. All thresholds are
/// inclusive. When the hypotheses hold (at most `beta^(1/5) |v1|^2`
/// off-color edges inside `v1`, at most `beta^(1/5) |v1| |v2|` off-color
/// edges across), at most `3 beta^(1/10) |v1|` resp. `beta^(1/10) |v2|`
/// vertices are removed, which is asserted.
pub fn stability_cleanup(
    graph: &MultiColoredGraph,
    v1: &[usize],
    v2: &[usize],
    beta: f64,
    majority: usize,
) -> CleanupOutcome {
    assert!((0.0..1.0).contains(&beta) && beta > 0.0, "beta must be in (0,1)");
    assert!(majority < 2);
    assert!(
        v1.iter().all(|v| !v2.contains(v)),
        "v1 and v2 must be disjoint"
    );
    let minority = 1 - majority;
    let thr1 = beta.powf(0.1) * v1.len() as f64;
    let thr2 = beta.powf(0.1) * v2.len() as f64;
    let count = |layer: &SimpleGraph, v: usize, within: &[usize]| {
        within.iter().filter(|&&w| w != v && layer.has_edge(v, w)).count()
    };

    let mut removed_from_v1 = Vec::new();
    let mut a = Vec::new();
    for &v in v1 {
        let wrong_inside = count(graph.layer(minority), v, v1);
        let wrong_cross = count(graph.layer(majority), v, v2);
        if wrong_inside as f64 >= thr1 || wrong_cross as f64 >= thr2 {
            removed_from_v1.push(v);
        } else {
            a.push(v);
        }
    }
    let mut removed_from_v2 = Vec::new();
    let mut b = Vec::new();
    for &v in v2 {
        let wrong_to_v1 = count(graph.layer(majority), v, v1);
        if wrong_to_v1 as f64 >= thr1 {
            removed_from_v2.push(v);
        } else {
            b.push(v);
        }
    }

    // hypothesis check: off-color edge mass inside v1 and across
    let inside_bad = {
        let layer = graph.layer(minority);
        let mut c = 0usize;
        for (i, &u) in v1.iter().enumerate() {
            for &w in &v1[i + 1..] {
                c += layer.has_edge(u, w) as usize;
            }
        }
        c
    };
    let cross_bad = {
        let layer = graph.layer(majority);
        v1.iter().map(|&u| count(layer, u, v2)).sum::<usize>()
    };
    let n1 = v1.len() as f64;
    let n2 = v2.len() as f64;
    let hypotheses_hold = inside_bad as f64 <= beta.powf(0.2) * n1 * n1
        && cross_bad as f64 <= beta.powf(0.2) * n1 * n2;
    if hypotheses_hold {
        assert!(
            removed_from_v1.len() as f64 <= 3.0 * beta.powf(0.1) * n1,
            "cleanup removed too much from the first side"
        );
        assert!(
            removed_from_v2.len() as f64 <= beta.powf(0.1) * n2,
            "cleanup removed too much from the second side"
        );
    }
    CleanupOutcome {
        a,
        b,
        removed_from_v1,
        removed_from_v2,
        hypotheses_hold,
    }
}
