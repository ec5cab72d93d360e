//! Alternating-path embedding inside one dense pair: a fixed-length odd
//! path between two given vertices, one side per step.

use crate::bits::VertexSet;
use crate::graph::SimpleGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("a path between opposite sides must have odd length, got {0}")]
    EvenLength(usize),
    #[error("anchor {vertex} is not in side {side}")]
    AnchorOutsideSide { vertex: usize, side: usize },
}

/// Searches for a path with exactly `length` edges from `v1` to `v2` that
/// alternates between `x1` and `x2` and whose interior avoids `forbidden`
/// and repeats no vertex.
///
/// Depth-first with degree-greedy candidate ordering (host degree into the
/// opposite side, descending) and a backtrack budget; `Ok(None)` means the
/// heuristic gave up, not that no path exists. Both anchors must meet the
/// `min_deg_fraction` degree floor toward the opposite side, or the search
/// is not attempted.
pub fn pair_path_embed(
    host: &SimpleGraph,
    x1: &[usize],
    x2: &[usize],
    v1: usize,
    v2: usize,
    length: usize,
    min_deg_fraction: f64,
    forbidden: &VertexSet,
    backtrack_budget: u64,
) -> Result<Option<Vec<usize>>, PathError> {
    if length % 2 == 0 {
        return Err(PathError::EvenLength(length));
    }
    if !x1.contains(&v1) {
        return Err(PathError::AnchorOutsideSide { vertex: v1, side: 1 });
    }
    if !x2.contains(&v2) {
        return Err(PathError::AnchorOutsideSide { vertex: v2, side: 2 });
    }

    let n = host.n();
    let side1 = VertexSet::from_iter(n, x1.iter().copied());
    let side2 = VertexSet::from_iter(n, x2.iter().copied());
    let deg_into = |v: usize, side: &VertexSet| {
        crate::bits::count_and(host.row(v), side.words())
    };
    if (deg_into(v1, &side2) as f64) < min_deg_fraction * x2.len() as f64
        || (deg_into(v2, &side1) as f64) < min_deg_fraction * x1.len() as f64
    {
        return Ok(None);
    }
    if length == 1 {
        return Ok(host.has_edge(v1, v2).then(|| vec![v1, v2]));
    }

    let mut used = VertexSet::new(n);
    used.insert(v1);
    used.insert(v2);
    let mut path = vec![v1];
    let mut budget = backtrack_budget;

    // candidates per side, pre-sorted by degree into the opposite side
    let order = |side: &[usize], opp: &VertexSet| {
        let mut v: Vec<usize> = side.to_vec();
        v.sort_by_key(|&w| (std::cmp::Reverse(deg_into(w, opp)), w));
        v
    };
    let by_deg = [order(x1, &side2), order(x2, &side1)];

    fn dfs(
        host: &SimpleGraph,
        by_deg: &[Vec<usize>; 2],
        v2: usize,
        remaining: usize,
        used: &mut VertexSet,
        forbidden: &VertexSet,
        path: &mut Vec<usize>,
        budget: &mut u64,
    ) -> bool {
        let cur = *path.last().unwrap();
        if remaining == 1 {
            return host.has_edge(cur, v2);
        }
        // side of the next vertex alternates: path has `path.len()-1` edges
        // so far, starting in side 0
        let next_side = path.len() % 2;
        for &w in &by_deg[next_side] {
            if w == v2 || used.contains(w) || forbidden.contains(w) || !host.has_edge(cur, w) {
                continue;
            }
            used.insert(w);
            path.push(w);
            if dfs(host, by_deg, v2, remaining - 1, used, forbidden, path, budget) {
                return true;
            }
            path.pop();
            used.remove(w);
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
        }
        false
    }

    let found = dfs(
        host,
        &by_deg,
        v2,
        length,
        &mut used,
        forbidden,
        &mut path,
        &mut budget,
    );
    if found {
        path.push(v2);
        debug_assert_eq!(path.len(), length + 1);
        Ok(Some(path))
    } else {
        Ok(None)
    }
}
