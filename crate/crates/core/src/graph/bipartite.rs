//! Bipartiteness testing with odd-cycle witnesses, and the k-almost-bipartite
//! classifier.
//!
//! A graph is k-almost bipartite when some independent set of k vertices can
//! be removed to leave a bipartite graph and no smaller independent set can.
//! The search runs iterative deepening on k: any valid removal set must hit
//! every odd cycle, so we branch on the vertices of a (shortcut-shrunk) odd
//! cycle of the current graph.

use super::{SimpleGraph, VertexPartition};
use crate::bits::VertexSet;

/// Default cap on the almost-bipartite search depth. Independent-set
/// enumeration is exponential in k.
pub const DEFAULT_K_MAX: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A proper 2-part partition covering every vertex of the graph.
    Bipartite(VertexPartition),
    /// An odd cycle, listed in cyclic order (consecutive entries and the
    /// wrap-around pair are edges).
    OddCycle(Vec<usize>),
}

/// Result of [`almost_bipartite_index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostBipartite {
    pub index: usize,
    /// Independent set whose removal leaves the graph bipartite; empty iff
    /// the graph is bipartite.
    pub witness: Vec<usize>,
}

/// BFS 2-coloring of `g` restricted to the non-excluded vertices.
///
/// Returns per-vertex sides (`0`/`1`, excluded vertices keep `2`), or an odd
/// cycle of `g - excluded` on conflict. Component roots are the smallest
/// vertices and take side 0, so the coloring is deterministic.
pub(crate) fn two_coloring_excluding(
    g: &SimpleGraph,
    excluded: &VertexSet,
) -> Result<Vec<u8>, Vec<usize>> {
    let n = g.n();
    let mut side = vec![2u8; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0u32; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if side[root] != 2 || excluded.contains(root) {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if excluded.contains(v) {
                    continue;
                }
                if side[v] == 2 {
                    side[v] = side[u] ^ 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    let cycle = cycle_through_tree(&parent, &depth, u, v);
                    return Err(shortcut_odd_cycle(g, cycle));
                }
            }
        }
    }
    Ok(side)
}

/// Odd cycle from a BFS conflict edge `{u, v}`: tree paths to the lowest
/// common ancestor plus the edge itself.
fn cycle_through_tree(parent: &[usize], depth: &[u32], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // left ends at the common ancestor; attach the right path reversed,
    // dropping the duplicated ancestor
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Repeatedly splits an odd cycle along graph edges between non-consecutive
/// cycle vertices, recursing into the odd half, until no such edge remains.
/// Keeps the cycle valid and odd while making it short, which keeps the
/// almost-bipartite branching factor small.
fn shortcut_odd_cycle(g: &SimpleGraph, mut cycle: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        let len = cycle.len();
        debug_assert!(len % 2 == 1);
        if len == 3 {
            return cycle;
        }
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue; // cycle edge
                }
                if !g.has_edge(cycle[i], cycle[j]) {
                    continue;
                }
                // split into cycle[i..=j] + chord and the complement + chord
                let inner_len = j - i + 1;
                if inner_len % 2 == 1 {
                    cycle = cycle[i..=j].to_vec();
                } else {
                    let mut outer: Vec<usize> = cycle[j..].to_vec();
                    outer.extend_from_slice(&cycle[..=i]);
                    cycle = outer;
                }
                continue 'outer;
            }
        }
        return cycle;
    }
}

/// Decides bipartiteness; on failure the witness is an odd cycle.
pub fn bipartiteness(g: &SimpleGraph) -> Bipartiteness {
    match two_coloring_excluding(g, &VertexSet::new(g.n())) {
        Ok(side) => {
            let u1 = (0..g.n()).filter(|&v| side[v] == 0).collect();
            let u2 = (0..g.n()).filter(|&v| side[v] == 1).collect();
            Bipartiteness::Bipartite(VertexPartition::two(u1, u2).unwrap())
        }
        Err(cycle) => Bipartiteness::OddCycle(cycle),
    }
}

/// Proper 2-part partition covering `V(g)`, or `None` if `g` has an odd cycle.
pub fn bipartition(g: &SimpleGraph) -> Option<VertexPartition> {
    match bipartiteness(g) {
        Bipartiteness::Bipartite(p) => Some(p),
        Bipartiteness::OddCycle(_) => None,
    }
}

/// Minimum `k ≤ k_max` such that some independent set of `k` vertices leaves
/// a bipartite graph after removal, together with a witness set. Returns
/// `None` when no independent set of size at most `k_max` works (complete
/// graphs `K_m`, `m ≥ 5`, for example).
pub fn almost_bipartite_index(g: &SimpleGraph, k_max: usize) -> Option<AlmostBipartite> {
    let mut removed = VertexSet::new(g.n());
    let mut stack = Vec::new();
    for k in 0..=k_max {
        if search(g, k, &mut removed, &mut stack) {
            let mut witness = stack.clone();
            witness.sort_unstable();
            debug_assert!(witness.len() == k);
            return Some(AlmostBipartite { index: k, witness });
        }
        debug_assert!(stack.is_empty());
    }
    None
}

fn search(
    g: &SimpleGraph,
    budget: usize,
    removed: &mut VertexSet,
    stack: &mut Vec<usize>,
) -> bool {
    let cycle = match two_coloring_excluding(g, removed) {
        Ok(_) => return true,
        Err(cycle) => cycle,
    };
    if budget == 0 {
        return false;
    }
    for &v in &cycle {
        // keep the removal set independent in g
        if stack.iter().any(|&s| g.has_edge(s, v)) {
            continue;
        }
        removed.insert(v);
        stack.push(v);
        if search(g, budget - 1, removed, stack) {
            return true;
        }
        stack.pop();
        removed.remove(v);
    }
    false
}
