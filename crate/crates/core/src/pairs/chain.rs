//! Routing a family of anchored odd paths through a chain of dense cluster
//! pairs: first decide how many edges of each path cross each pair (the
//! chunk allocation), then embed waypoints and segments pair by pair.

use super::{AnchoredPathSpec, ChunkAllocation, ClusterChain};
use super::density::{density, regularity_check, RegularityMode, RegularityVerdict};
use super::path::pair_path_embed;
use crate::bits::VertexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChunkError {
    #[error("cluster count {ell} infeasible: odd path lengths force an even count of at least 4")]
    ClusterCountInfeasible { ell: usize },
    #[error("path {index} has even length {length}")]
    EvenPathLength { index: usize, length: usize },
    #[error("path {index} of length {length} is below the floor {floor} for this chain")]
    PathTooShort {
        index: usize,
        length: usize,
        floor: usize,
    },
    #[error("pair {column} would carry {load} vertices, over its capacity {cap}")]
    CapacityInfeasible {
        column: usize,
        load: usize,
        cap: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("cluster chain malformed: {0}")]
    ClusterShape(&'static str),
    #[error("allocation does not fit the specs: {0}")]
    AllocationShape(&'static str),
    #[error("allocation invalid: {0}")]
    Allocation(#[from] ChunkError),
    #[error("too many paths: {k} > eps^(1/2) |V_1| = {cap}")]
    TooManyPaths { k: usize, cap: usize },
    #[error("anchor of path {index} invalid: {reason}")]
    AnchorInvalid { index: usize, reason: &'static str },
    #[error("working set W[{cluster}] for path {path} failed check ({check})")]
    WorkingSetTooSmall {
        path: usize,
        cluster: usize,
        check: &'static str,
    },
    #[error("no eligible waypoint in cluster {cluster} for path {path}")]
    WaypointExhausted { path: usize, cluster: usize },
    #[error("segment of path {path} across pair {pair} could not be embedded")]
    SegmentFailed { path: usize, pair: usize },
}

/// The two feasibility inequalities behind the allocation, surfaced
/// separately because their constants differ: the total-length hypothesis
/// uses `(1 - 2 eps^(1/4))(l - 2)|V|` while per-pair capacity allows
/// `2 (1 - 2 eps^(1/4))|V|` endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllocationHypotheses {
    /// Every path length is at least `3 l`.
    pub lengths_at_least_3_ell: bool,
    /// Total length fits: `sum p_i <= (1 - 2 eps^(1/4)) (l - 2) |V|`.
    pub total_fits: bool,
}

pub fn allocation_hypotheses(
    path_lengths: &[usize],
    ell: usize,
    cluster_size: usize,
    eps: f64,
) -> AllocationHypotheses {
    let slack = 1.0 - 2.0 * eps.powf(0.25);
    AllocationHypotheses {
        lengths_at_least_3_ell: path_lengths.iter().all(|&p| p >= 3 * ell),
        total_fits: path_lengths.iter().sum::<usize>() as f64
            <= slack * (ell - 2) as f64 * cluster_size as f64,
    }
}

/// Chooses odd chunk counts `q[i][j]` with `q = 1` on odd-position pairs,
/// `q >= 3` odd on even-position pairs, and row sums equal to the path
/// lengths. The residue of each path is spread over its even-position slots
/// as evenly as possible, leftmost slots taking the remainder.
///
/// Capacity is then verified: each even-position pair receives at most
/// `2 (1 - 2 eps^(1/4)) cluster_size` path vertices.
pub fn allocate_chunks(
    path_lengths: &[usize],
    ell: usize,
    cluster_size: usize,
    eps: f64,
) -> Result<ChunkAllocation, ChunkError> {
    if ell % 2 != 0 || ell < 4 {
        return Err(ChunkError::ClusterCountInfeasible { ell });
    }
    let floor = 2 * ell - 3;
    let even_slots = ell / 2 - 1;
    let mut q = Vec::with_capacity(path_lengths.len());
    for (index, &p) in path_lengths.iter().enumerate() {
        if p % 2 == 0 {
            return Err(ChunkError::EvenPathLength { index, length: p });
        }
        if p < floor {
            return Err(ChunkError::PathTooShort {
                index,
                length: p,
                floor,
            });
        }
        // increments of 2 on top of the all-minimal row (1,3,1,3,...,1)
        let increments = (p - floor) / 2;
        let base = increments / even_slots;
        let extra = increments % even_slots;
        let mut row = Vec::with_capacity(ell - 1);
        let mut even_seen = 0;
        for j in 1..ell {
            if j % 2 == 1 {
                row.push(1);
            } else {
                let bump = if even_seen < extra { base + 1 } else { base };
                row.push(3 + 2 * bump);
                even_seen += 1;
            }
        }
        debug_assert_eq!(row.iter().sum::<usize>(), p);
        q.push(row);
    }
    let cap = (2.0 * (1.0 - 2.0 * eps.powf(0.25)) * cluster_size as f64).floor() as usize;
    for j in (2..ell).step_by(2) {
        let load: usize = q.iter().map(|row| row[j - 1] + 1).sum();
        if load > cap {
            return Err(ChunkError::CapacityInfeasible {
                column: j,
                load,
                cap,
            });
        }
    }
    Ok(ChunkAllocation { q })
}

/// Sampled regularity evidence for every consecutive cluster pair.
pub fn validate_chain_regularity(
    chain: &ClusterChain,
    eps: f64,
    samples: u64,
    seed: u64,
) -> Result<Vec<RegularityVerdict>, super::PairsError> {
    (0..chain.len() - 1)
        .map(|j| {
            regularity_check(
                &chain.host,
                &chain.clusters[j],
                &chain.clusters[j + 1],
                eps,
                RegularityMode::Sampled,
                samples,
                seed.wrapping_add(j as u64),
            )
        })
        .collect()
}

/// Embeds all specs along the chain according to the allocation: waypoint
/// `w_j` of each path sits in cluster `j` (1-indexed), consecutive waypoints
/// across odd-position pairs are host edges, and even-position pairs carry
/// alternating segments of the allocated lengths. Paths are embedded
/// successively and never reuse a vertex; inside the first and last cluster
/// only the anchors are touched. Fails loudly with the offending path and
/// cluster; no partial output.
pub fn chain_path_embed(
    chain: &ClusterChain,
    specs: &[AnchoredPathSpec],
    alloc: &ChunkAllocation,
    eps: f64,
) -> Result<Vec<Vec<usize>>, ChainError> {
    chain.validate()?;
    let ell = chain.len();
    let size = chain.cluster_size();
    let host = &chain.host;
    if ell % 2 != 0 || ell < 4 {
        return Err(ChainError::Allocation(ChunkError::ClusterCountInfeasible {
            ell,
        }));
    }
    if alloc.q.len() != specs.len() {
        return Err(ChainError::AllocationShape("one allocation row per path"));
    }
    for (i, (row, spec)) in alloc.q.iter().zip(specs).enumerate() {
        if row.len() != ell - 1 {
            return Err(ChainError::AllocationShape("row width must be l - 1"));
        }
        if row.iter().sum::<usize>() != spec.length {
            return Err(ChainError::AllocationShape("row sum must equal the path length"));
        }
        for (j0, &v) in row.iter().enumerate() {
            let j = j0 + 1;
            if j % 2 == 1 && v != 1 {
                return Err(ChainError::AllocationShape("odd-position pairs carry one edge"));
            }
            if j % 2 == 0 && (v < 3 || v % 2 == 0) {
                return Err(ChainError::AllocationShape(
                    "even-position pairs carry an odd run of at least 3",
                ));
            }
        }
        if spec.length % 2 == 0 {
            return Err(ChainError::Allocation(ChunkError::EvenPathLength {
                index: i,
                length: spec.length,
            }));
        }
    }
    // capacity before any embedding work
    let cap = (2.0 * (1.0 - 2.0 * eps.powf(0.25)) * size as f64).floor() as usize;
    for j in (2..ell).step_by(2) {
        let load: usize = alloc.q.iter().map(|row| row[j - 1] + 1).sum();
        if load > cap {
            return Err(ChainError::Allocation(ChunkError::CapacityInfeasible {
                column: j,
                load,
                cap,
            }));
        }
    }
    let k_cap = (eps.sqrt() * size as f64).floor() as usize;
    if specs.len() > k_cap {
        return Err(ChainError::TooManyPaths {
            k: specs.len(),
            cap: k_cap,
        });
    }
    // anchors: distinct, in the right clusters, typical toward the second
    // and second-to-last clusters
    let mut anchor_seen = std::collections::HashSet::new();
    let d_first = density(host, &chain.clusters[0], &chain.clusters[1])
        .map_err(|_| ChainError::ClusterShape("first pair"))?
        .value();
    let d_last = density(host, &chain.clusters[ell - 2], &chain.clusters[ell - 1])
        .map_err(|_| ChainError::ClusterShape("last pair"))?
        .value();
    for (i, spec) in specs.iter().enumerate() {
        if !chain.clusters[0].contains(&spec.start_anchor) {
            return Err(ChainError::AnchorInvalid { index: i, reason: "start not in the first cluster" });
        }
        if !chain.clusters[ell - 1].contains(&spec.end_anchor) {
            return Err(ChainError::AnchorInvalid { index: i, reason: "end not in the last cluster" });
        }
        if !anchor_seen.insert(spec.start_anchor) || !anchor_seen.insert(spec.end_anchor) {
            return Err(ChainError::AnchorInvalid { index: i, reason: "anchors must be distinct" });
        }
        let deg2 = count_into(host, spec.start_anchor, &chain.clusters[1]);
        if (deg2 as f64) < (d_first - eps) * size as f64 {
            return Err(ChainError::AnchorInvalid { index: i, reason: "start anchor not typical toward the second cluster" });
        }
        let degl = count_into(host, spec.end_anchor, &chain.clusters[ell - 2]);
        if (degl as f64) < (d_last - eps) * size as f64 {
            return Err(ChainError::AnchorInvalid { index: i, reason: "end anchor not typical toward the second-to-last cluster" });
        }
    }

    let n = host.n();
    let mut used = VertexSet::new(n);
    for spec in specs {
        used.insert(spec.start_anchor);
        used.insert(spec.end_anchor);
    }

    let slack = 1.0 - 2.0 * eps.powf(0.25);
    let mut out = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let row = &alloc.q[i];
        // working sets W_j ⊆ V_j for j = 2..l-1 (1-indexed)
        let mut w: Vec<Vec<usize>> = Vec::with_capacity(ell);
        for j in 2..ell {
            let cluster = &chain.clusters[j - 1];
            let keep: Vec<usize> = cluster
                .iter()
                .copied()
                .filter(|&v| !used.contains(v))
                .filter(|&v| {
                    if j == 2 {
                        host.has_edge(spec.start_anchor, v)
                    } else if j == ell - 1 {
                        host.has_edge(spec.end_anchor, v)
                    } else {
                        true
                    }
                })
                .collect();
            w.push(keep);
        }
        // equalize sizes across each even-position pair (truncate from the top)
        for j in (2..ell).step_by(2) {
            let a = j - 2; // W_j in 0-based w
            let b = j - 1;
            let m = w[a].len().min(w[b].len());
            w[a].truncate(m);
            w[b].truncate(m);
        }
        // size checks: (1 - 2 eps^(1/4)) |W| > (q+1)/2 and |W| > 4 eps^(1/2) |V|
        for j in 2..ell {
            let wj = &w[j - 2];
            let feeding = row[2 * (j / 2) - 1];
            if slack * wj.len() as f64 <= (feeding + 1) as f64 / 2.0 {
                return Err(ChainError::WorkingSetTooSmall { path: i, cluster: j, check: "segment room" });
            }
            if wj.len() as f64 <= 4.0 * eps.sqrt() * size as f64 {
                return Err(ChainError::WorkingSetTooSmall { path: i, cluster: j, check: "absolute floor" });
            }
        }

        // waypoints w_2..w_{l-1}; for odd j in 3..l-3 the pair (w_j, w_{j+1})
        // must be a host edge
        let mut waypoints = vec![usize::MAX; ell + 1]; // 1-indexed
        waypoints[1] = spec.start_anchor;
        waypoints[ell] = spec.end_anchor;
        let typical_in = |j: usize, w: &Vec<Vec<usize>>| -> Vec<usize> {
            let wj = &w[j - 2];
            wj.iter()
                .copied()
                .filter(|&v| {
                    let left_ok = if j > 2 {
                        let prev = &w[j - 3];
                        let d = pair_density(host, prev, wj);
                        count_into(host, v, prev) as f64 >= (d - eps.sqrt()) * prev.len() as f64
                    } else {
                        true
                    };
                    let right_ok = if j < ell - 1 {
                        let next = &w[j - 1];
                        let d = pair_density(host, wj, next);
                        count_into(host, v, next) as f64 >= (d - eps.sqrt()) * next.len() as f64
                    } else {
                        true
                    };
                    left_ok && right_ok
                })
                .collect()
        };
        let pick_single = |j: usize, w: &Vec<Vec<usize>>| -> Option<usize> {
            typical_in(j, w).first().copied()
        };
        waypoints[2] = pick_single(2, &w)
            .ok_or(ChainError::WaypointExhausted { path: i, cluster: 2 })?;
        let mut j = 3;
        while j <= ell - 3 {
            let left = typical_in(j, &w);
            let right = typical_in(j + 1, &w);
            let mut found = None;
            'outer: for &a in &left {
                for &b in &right {
                    if host.has_edge(a, b) {
                        found = Some((a, b));
                        break 'outer;
                    }
                }
            }
            let (a, b) = found.ok_or(ChainError::WaypointExhausted { path: i, cluster: j })?;
            waypoints[j] = a;
            waypoints[j + 1] = b;
            j += 2;
        }
        if ell >= 4 {
            waypoints[ell - 1] = pick_single(ell - 1, &w)
                .ok_or(ChainError::WaypointExhausted { path: i, cluster: ell - 1 })?;
        }
        for j in 2..ell {
            used.insert(waypoints[j]);
        }

        // segments across even-position pairs
        let mut full = vec![spec.start_anchor, waypoints[2]];
        for j in (2..ell).step_by(2) {
            let q = row[j - 1];
            let (wa, wb) = (waypoints[j], waypoints[j + 1]);
            let x1 = &w[j - 2];
            let x2 = &w[j - 1];
            let mut forbidden = used.clone();
            forbidden.remove(wa);
            forbidden.remove(wb);
            let seg = pair_path_embed(
                host,
                x1,
                x2,
                wa,
                wb,
                q,
                0.0,
                &forbidden,
                (size as u64) * 200,
            )
            .ok()
            .flatten()
            .ok_or(ChainError::SegmentFailed { path: i, pair: j })?;
            for &v in &seg {
                used.insert(v);
            }
            full.extend_from_slice(&seg[1..]);
            // the odd-position single edge to the next waypoint
            if j + 2 < ell {
                full.push(waypoints[j + 2]);
            }
        }
        full.push(spec.end_anchor);
        debug_assert_eq!(full.len(), spec.length + 1);
        out.push(full);
    }
    Ok(out)
}

fn count_into(host: &crate::graph::SimpleGraph, v: usize, set: &[usize]) -> usize {
    set.iter().filter(|&&w| host.has_edge(v, w)).count()
}

fn pair_density(host: &crate::graph::SimpleGraph, a: &[usize], b: &[usize]) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let edges: usize = a.iter().map(|&v| count_into(host, v, b)).sum();
    edges as f64 / (a.len() * b.len()) as f64
}
