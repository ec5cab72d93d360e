//! Lower-bound colorings for cycle targets and the certifiers that verify
//! they contain no monochromatic copy of a given graph.
//!
//! All three constructions are clique partitions: the red subgraph is a
//! disjoint union of cliques, so the blue subgraph is complete multipartite.
//! The structural certifier exploits exactly that: red is rejected by
//! component size, blue by deciding whether the target admits a proper
//! coloring with class sizes bounded by the blue part sizes.

use crate::graph::{Embedding, SimpleGraph};
use crate::ramsey::{Color, ColoredCompleteGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("construction needs {expected} cycle length > 4, got n={n}")]
    Parity { expected: &'static str, n: usize },
    #[error("k-part construction needs n > k >= 1, got n={n}, k={k}")]
    Size { n: usize, k: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error("structural mode needs a clique-partition coloring: {0}")]
    NotCliquePartition(&'static str),
}

/// Which of the three constructions to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtremalKind {
    EvenMaxcut { n: usize },
    OddMaxcutPlusVertex { n: usize },
    KPart { n: usize, k: usize },
}

impl ExtremalKind {
    pub fn build(self) -> Result<ColoredCompleteGraph, ExtremalError> {
        match self {
            ExtremalKind::EvenMaxcut { n } => even_extremal_coloring(n),
            ExtremalKind::OddMaxcutPlusVertex { n } => odd_extremal_coloring(n),
            ExtremalKind::KPart { n, k } => k_almost_extremal_coloring(n, k),
        }
    }
}

/// The maximal-cut coloring of `K_{2h}`: red edges inside the two halves
/// `{0..h-1}` and `{h..2h-1}`, blue edges across. Red is two disjoint
/// `K_h`, blue is `K_{h,h}`.
pub fn maxcut_coloring(half: usize) -> ColoredCompleteGraph {
    clique_partition_coloring(&[half, half])
}

/// Coloring whose red subgraph is a disjoint union of cliques with the given
/// sizes, laid out consecutively; all cross edges are blue.
pub fn clique_partition_coloring(sizes: &[usize]) -> ColoredCompleteGraph {
    let n: usize = sizes.iter().sum();
    let mut red = Vec::new();
    let mut base = 0;
    for &s in sizes {
        for u in base..base + s {
            for v in u + 1..base + s {
                red.push((u, v));
            }
        }
        base += s;
    }
    ColoredCompleteGraph::from_red_edges(n, red).unwrap()
}

/// For even `n > 4`: the maximal-cut coloring of `K_{2(n-1)}`.
pub fn even_extremal_coloring(n: usize) -> Result<ColoredCompleteGraph, ExtremalError> {
    if n % 2 != 0 || n <= 4 {
        return Err(ExtremalError::Parity { expected: "even", n });
    }
    Ok(maxcut_coloring(n - 1))
}

/// For odd `n > 4`: the maximal-cut coloring of `K_{2(n-1)}` plus one new
/// vertex all of whose incident edges are blue.
pub fn odd_extremal_coloring(n: usize) -> Result<ColoredCompleteGraph, ExtremalError> {
    if n % 2 != 1 || n <= 4 {
        return Err(ExtremalError::Parity { expected: "odd", n });
    }
    Ok(clique_partition_coloring(&[n - 1, n - 1, 1]))
}

/// For odd `n > k >= 1`: vertices split into `X`, `Y`, `Z` with
/// `|X| = |Y| = n-1` and `|Z| = k`; edges inside a part are red, the rest
/// blue. The blue subgraph is the complete tripartite `K_{n-1,n-1,k}`.
pub fn k_almost_extremal_coloring(
    n: usize,
    k: usize,
) -> Result<ColoredCompleteGraph, ExtremalError> {
    if n % 2 != 1 || n <= 4 {
        return Err(ExtremalError::Parity { expected: "odd", n });
    }
    if k == 0 || k >= n {
        return Err(ExtremalError::Size { n, k });
    }
    Ok(clique_partition_coloring(&[n - 1, n - 1, k]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertifyMode {
    Search,
    Structural,
}

/// Why one color class does or does not contain the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "test", rename_all = "snake_case")]
pub enum SideReason {
    /// Largest component of this color is smaller than the target.
    ComponentsTooSmall {
        largest_component: usize,
        target_order: usize,
    },
    /// Some clique component is at least as large as the target, which
    /// therefore embeds.
    CliqueComponentFits { component_size: usize },
    /// The target has no proper coloring with classes bounded by the part
    /// sizes of this complete multipartite color class.
    NoBoundedColoring { part_sizes: Vec<usize> },
    /// A bounded proper coloring exists, so the target embeds.
    BoundedColoringExists { class_sizes: Vec<usize> },
    /// Exhaustive embedding search found nothing.
    SearchExhausted,
    /// Exhaustive embedding search found a copy.
    CopyFound { embedding: Embedding },
}

impl SideReason {
    pub fn rejects(&self) -> bool {
        matches!(
            self,
            SideReason::ComponentsTooSmall { .. }
                | SideReason::NoBoundedColoring { .. }
                | SideReason::SearchExhausted
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: bool,
    pub red_reason: SideReason,
    pub blue_reason: SideReason,
}

/// Certifies that the coloring contains no monochromatic copy of `target`.
///
/// Search mode runs the exhaustive embedding search on both color classes
/// and works for any coloring. Structural mode requires a clique-partition
/// coloring (red components are cliques): red is rejected when its largest
/// component is smaller than the target, blue when the target admits no
/// proper coloring with class sizes bounded by the blue part sizes.
pub fn certify_lower_bound(
    coloring: &ColoredCompleteGraph,
    target: &SimpleGraph,
    mode: CertifyMode,
) -> Result<Certificate, CertifyError> {
    let (red_reason, blue_reason) = match mode {
        CertifyMode::Search => (
            search_side(coloring, Color::Red, target),
            search_side(coloring, Color::Blue, target),
        ),
        CertifyMode::Structural => {
            let comps = coloring.red_subgraph().components();
            for comp in &comps {
                if !coloring.red_subgraph().is_clique(comp) {
                    return Err(CertifyError::NotCliquePartition(
                        "a red component is not a clique",
                    ));
                }
            }
            let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
            let largest = sizes.iter().copied().max().unwrap_or(0);
            let red_reason = if largest < target.n() {
                SideReason::ComponentsTooSmall {
                    largest_component: largest,
                    target_order: target.n(),
                }
            } else {
                SideReason::CliqueComponentFits {
                    component_size: largest,
                }
            };
            let blue_reason = match bounded_class_coloring(target, &sizes) {
                None => SideReason::NoBoundedColoring {
                    part_sizes: sizes.clone(),
                },
                Some(assignment) => {
                    let mut class_sizes = vec![0usize; sizes.len()];
                    for &c in &assignment {
                        class_sizes[c] += 1;
                    }
                    SideReason::BoundedColoringExists { class_sizes }
                }
            };
            (red_reason, blue_reason)
        }
    };
    Ok(Certificate {
        verdict: red_reason.rejects() && blue_reason.rejects(),
        red_reason,
        blue_reason,
    })
}

fn search_side(coloring: &ColoredCompleteGraph, color: Color, target: &SimpleGraph) -> SideReason {
    match crate::graph::find_subgraph(target, coloring.subgraph(color)) {
        Some(embedding) => SideReason::CopyFound { embedding },
        None => SideReason::SearchExhausted,
    }
}

/// Decides whether `g` has a proper coloring whose class sizes fit into the
/// given capacities (one class per capacity entry). This is exactly the
/// question "does `g` embed into the complete multipartite graph with these
/// part sizes". Returns a class assignment per vertex on success.
///
/// Backtracking over vertices in connectivity-respecting decreasing-degree
/// order; among classes that are still empty, only the first of each
/// capacity value is tried (interchangeable-class symmetry).
pub fn bounded_class_coloring(g: &SimpleGraph, capacities: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    if n > capacities.iter().sum() {
        return None;
    }
    // placement order: most placed neighbors, then degree, then index
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    g.neighbors(v).filter(|&u| placed[u]).count(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }

    let mut assignment = vec![usize::MAX; n];
    let mut usage = vec![0usize; capacities.len()];

    fn rec(
        g: &SimpleGraph,
        order: &[usize],
        pos: usize,
        capacities: &[usize],
        usage: &mut [usize],
        assignment: &mut [usize],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let mut seen_empty_caps: Vec<usize> = Vec::new();
        for c in 0..capacities.len() {
            if usage[c] >= capacities[c] {
                continue;
            }
            if usage[c] == 0 {
                if seen_empty_caps.contains(&capacities[c]) {
                    continue;
                }
                seen_empty_caps.push(capacities[c]);
            }
            if g.neighbors(v).any(|u| assignment[u] == c) {
                continue;
            }
            assignment[v] = c;
            usage[c] += 1;
            if rec(g, order, pos + 1, capacities, usage, assignment) {
                return true;
            }
            usage[c] -= 1;
            assignment[v] = usize::MAX;
        }
        false
    }

    if rec(g, &order, 0, capacities, &mut usage, &mut assignment) {
        Some(assignment)
    } else {
        None
    }
}
