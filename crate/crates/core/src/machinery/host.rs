//! Decomposing a chorded cycle into a small core graph plus long odd
//! connector paths with aligned endpoints.
//!
//! The pipeline: extract the core (chords plus short cycle arcs), fix
//! connector parities by absorbing one vertex per even connector, then align
//! a 2-part (even cycle length) or 3-part (odd length) partition so that
//! every remaining connector runs between the first two parts.

use crate::bits::VertexSet;
use crate::graph::bipartite::two_coloring_excluding;
use crate::graph::chords::recover_chords;
use crate::graph::{almost_bipartite_index, SimpleGraph, VertexPartition};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HostError {
    #[error("graph is not a chorded canonical cycle")]
    NotChordedCycle,
    #[error("chord set is empty; the decomposition degenerates")]
    EmptyChordSet,
    #[error("segment threshold z={z} too small ({reason})")]
    InvalidThreshold { z: usize, reason: &'static str },
    #[error("core graph has no edges")]
    EmptyCore,
    #[error("graph minus core is not a disjoint union of connector paths (vertex {0})")]
    InteriorBranching(usize),
    #[error("connector closes a loop at vertex {0}")]
    DegenerateLoop(usize),
    #[error("edges outside the core do not reach it (vertex {0})")]
    DanglingEdges(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("no independent removal set of size <= {k_max} leaves a bipartite graph")]
    IndexAboveCap { k_max: usize },
    #[error("connector {first}..{last} has even length {len}")]
    EvenConnector { first: usize, last: usize, len: usize },
    #[error("connector {first}..{last} has length {len} < required {min}")]
    ConnectorTooShort { first: usize, last: usize, len: usize, min: usize },
    #[error("more connectors ({connectors}) than core vertices ({core})")]
    TooManyConnectors { connectors: usize, core: usize },
    #[error("partition is not a proper {expected}-part partition of the core")]
    BadPartition { expected: usize },
    #[error("alignment postcondition failed: connector {first}..{last} does not straddle the first two parts")]
    AlignmentFailed { first: usize, last: usize },
    #[error("size chain violated: {0}")]
    SizeChain(&'static str),
    #[error("decomposition does not partition the edge set ({0})")]
    EdgePartition(&'static str),
}

/// Vertex counts after each pipeline stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSizes {
    /// Core right after extraction (chords plus short arcs).
    pub extracted: usize,
    /// After the parity fix.
    pub parity_fixed: usize,
    /// Final core, after the odd-case augmentation.
    pub core: usize,
}

/// Output of [`prepare_host`]: the core graph with its partition, plus the
/// connector paths. Connectors are internally disjoint odd paths from part 0
/// to part 1 whose union with the core's edges is exactly the input graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PreparedDecomposition {
    pub core: SimpleGraph,
    pub partition: VertexPartition,
    pub connectors: Vec<Vec<usize>>,
    pub stage_sizes: StageSizes,
    /// True when the threshold swallowed the whole cycle and no connectors
    /// remain (legal, but callers usually want to lower `z`).
    pub fully_absorbed: bool,
}

/// The paths of `g - E(core)` whose endpoints lie in the support of `core`
/// and whose interiors avoid it, sorted by smallest endpoint, each oriented
/// from its smaller endpoint. Errors when those paths do not decompose all
/// remaining edges.
pub fn connector_paths(g: &SimpleGraph, core: &SimpleGraph) -> Result<Vec<Vec<usize>>, HostError> {
    let rest = g.minus_edges(core);
    let n = g.n();
    let in_core = VertexSet::from_iter(n, core.support());
    let mut edge_seen = std::collections::HashSet::new();
    let mut covered = 0usize;
    let mut paths = Vec::new();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    for start in 0..n {
        if !in_core.contains(start) {
            continue;
        }
        for first in rest.neighbors(start) {
            if edge_seen.contains(&key(start, first)) {
                continue;
            }
            let mut path = vec![start, first];
            edge_seen.insert(key(start, first));
            covered += 1;
            let (mut prev, mut cur) = (start, first);
            while !in_core.contains(cur) {
                let mut next = None;
                let mut others = 0;
                for w in rest.neighbors(cur) {
                    if w == prev {
                        continue;
                    }
                    others += 1;
                    next = Some(w);
                }
                if others != 1 {
                    return Err(HostError::InteriorBranching(cur));
                }
                let next = next.unwrap();
                edge_seen.insert(key(cur, next));
                covered += 1;
                path.push(next);
                prev = cur;
                cur = next;
            }
            if cur == start {
                return Err(HostError::DegenerateLoop(start));
            }
            paths.push(path);
        }
    }
    if covered != rest.edge_count() {
        let stray = (0..n)
            .find(|&v| rest.neighbors(v).any(|w| !edge_seen.contains(&key(v, w))))
            .unwrap_or(0);
        return Err(HostError::DanglingEdges(stray));
    }
    for p in &mut paths {
        if p[0] > *p.last().unwrap() {
            p.reverse();
        }
    }
    paths.sort_by_key(|p| p.iter().copied().min());
    Ok(paths)
}

/// The core of a chorded cycle: all chord edges plus every cycle arc between
/// consecutive chord endpoints of length at most `z`. An empty chord set
/// yields the empty graph.
pub fn extract_core(g: &SimpleGraph, z: usize) -> Result<SimpleGraph, HostError> {
    let chords = recover_chords(g).ok_or(HostError::NotChordedCycle)?;
    if z < 1 {
        return Err(HostError::InvalidThreshold { z, reason: "must be at least 1" });
    }
    let n = g.n();
    if chords.is_empty() {
        return Ok(SimpleGraph::empty(n));
    }
    let mut edges: Vec<(usize, usize)> = chords.chords().to_vec();
    let ends = chords.endpoints();
    for (i, &a) in ends.iter().enumerate() {
        let b = ends[(i + 1) % ends.len()];
        let gap = (b + n - a) % n;
        if gap >= 1 && gap <= z {
            edges.extend((0..gap).map(|s| ((a + s) % n, (a + s + 1) % n)));
        }
    }
    Ok(SimpleGraph::from_edges(n, edges).unwrap())
}

/// Makes every connector odd: for each even connector, the vertex next to
/// its smaller endpoint moves into the core together with the joining edge.
/// Connectors are processed in increasing order of their smallest vertex.
pub fn parity_fix(core: &SimpleGraph, g: &SimpleGraph) -> Result<SimpleGraph, HostError> {
    if core.edge_count() == 0 {
        return Err(HostError::EmptyCore);
    }
    let connectors = connector_paths(g, core)?;
    let extra: Vec<(usize, usize)> = connectors
        .iter()
        .filter(|p| (p.len() - 1) % 2 == 0)
        // paths arrive oriented from their smaller endpoint
        .map(|p| (p[0], p[1]))
        .collect();
    Ok(core.with_edges(extra).unwrap())
}

/// Restricts a bipartition of `g` to the support of `core` so that every
/// connector (all odd by precondition) runs between the two parts.
pub fn bipartite_path_alignment(
    g: &SimpleGraph,
    core: &SimpleGraph,
) -> Result<VertexPartition, HostError> {
    let side = two_coloring_excluding(g, &VertexSet::new(g.n()))
        .map_err(|_| HostError::NotBipartite)?;
    let connectors = connector_paths(g, core)?;
    for p in &connectors {
        let len = p.len() - 1;
        if len % 2 == 0 {
            return Err(HostError::EvenConnector {
                first: p[0],
                last: *p.last().unwrap(),
                len,
            });
        }
    }
    let support = core.support();
    let u1: Vec<usize> = support.iter().copied().filter(|&v| side[v] == 0).collect();
    let u2: Vec<usize> = support.iter().copied().filter(|&v| side[v] == 1).collect();
    let partition = VertexPartition::two(u1, u2).unwrap();
    for p in &connectors {
        let (a, b) = (p[0], *p.last().unwrap());
        if partition.part_of(a) == partition.part_of(b) {
            return Err(HostError::AlignmentFailed { first: a, last: b });
        }
    }
    Ok(partition)
}

/// Grows a 3-partitioned core so every connector becomes an odd part0-part1
/// path: each connector with an endpoint in part 2 donates its second and
/// second-to-last vertices (and the edges joining them to the old endpoints)
/// to the core. `m` is the guaranteed minimum connector length (at least 3);
/// surviving connectors keep length at least `m - 2`.
pub fn tripartite_augment(
    g: &SimpleGraph,
    core: &SimpleGraph,
    partition: &VertexPartition,
    m: usize,
) -> Result<(SimpleGraph, VertexPartition), HostError> {
    if partition.arity() != 3
        || partition.domain() != core.support()
        || !partition.is_proper_for(core)
    {
        return Err(HostError::BadPartition { expected: 3 });
    }
    if m < 3 {
        return Err(HostError::InvalidThreshold { z: m, reason: "minimum connector length must be at least 3" });
    }
    let connectors = connector_paths(g, core)?;
    let support = core.support();
    if connectors.len() > support.len() {
        return Err(HostError::TooManyConnectors {
            connectors: connectors.len(),
            core: support.len(),
        });
    }
    for p in &connectors {
        let len = p.len() - 1;
        let (first, last) = (p[0], *p.last().unwrap());
        if len % 2 == 0 {
            return Err(HostError::EvenConnector { first, last, len });
        }
        if len < m {
            return Err(HostError::ConnectorTooShort { first, last, len, min: m });
        }
    }

    let mut class: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for (i, part) in partition.parts().iter().enumerate() {
        for &v in part {
            class.insert(v, i);
        }
    }
    let mut extra = Vec::new();
    for p in &connectors {
        let mut p = p.clone();
        let (a, z) = (p[0], *p.last().unwrap());
        let a_third = class.get(&a) == Some(&2);
        let z_third = class.get(&z) == Some(&2);
        if !a_third && !z_third {
            continue;
        }
        // put the part-2 endpoint first; with both in part 2, keep the
        // smaller endpoint first (connectors arrive smaller-endpoint-first)
        if !a_third && z_third {
            p.reverse();
        }
        let (a, z) = (p[0], *p.last().unwrap());
        let b = p[1];
        let y = p[p.len() - 2];
        if a_third && z_third {
            class.insert(b, 0);
            class.insert(y, 1);
        } else {
            let i = class[&z];
            class.insert(b, i);
            class.insert(y, 1 - i);
        }
        extra.push((a, b));
        extra.push((y, z));
    }
    let grown = core.with_edges(extra).unwrap();

    let support = grown.support();
    let mut parts = vec![Vec::new(), Vec::new(), Vec::new()];
    for &v in &support {
        parts[class[&v]].push(v);
    }
    let partition = VertexPartition::new(parts).unwrap();
    if !partition.is_proper_for(&grown) {
        return Err(HostError::BadPartition { expected: 3 });
    }

    // the built partition must straddle every surviving connector; this is
    // where interiors meeting the removal class would surface
    let survivors = connector_paths(g, &grown)?;
    for p in &survivors {
        let len = p.len() - 1;
        let (first, last) = (p[0], *p.last().unwrap());
        if len % 2 == 0 {
            return Err(HostError::EvenConnector { first, last, len });
        }
        if len + 2 < m {
            return Err(HostError::ConnectorTooShort { first, last, len, min: m - 2 });
        }
        match (partition.part_of(first), partition.part_of(last)) {
            (Some(0), Some(1)) | (Some(1), Some(0)) => {}
            _ => return Err(HostError::AlignmentFailed { first, last }),
        }
    }
    Ok((grown, partition))
}

/// Runs the whole preparation pipeline on a chorded cycle.
///
/// Even cycle lengths require a bipartite input; odd lengths require
/// almost-bipartiteness index at most `k_max` and `z >= 3`. All invariants
/// of the decomposition are re-verified before returning.
pub fn prepare_host(
    g: &SimpleGraph,
    z: usize,
    k_max: usize,
) -> Result<PreparedDecomposition, HostError> {
    let chords = recover_chords(g).ok_or(HostError::NotChordedCycle)?;
    if chords.is_empty() {
        return Err(HostError::EmptyChordSet);
    }
    let n = g.n();
    let extracted = extract_core(g, z)?;
    let fixed = parity_fix(&extracted, g)?;

    let (core, partition) = if n % 2 == 0 {
        let partition = bipartite_path_alignment(g, &fixed)?;
        (fixed.clone(), partition)
    } else {
        if z < 3 {
            return Err(HostError::InvalidThreshold { z, reason: "odd cycles need z >= 3" });
        }
        let found =
            almost_bipartite_index(g, k_max).ok_or(HostError::IndexAboveCap { k_max })?;
        let witness = relocate_witness(g, &fixed, found.witness);
        let removed = VertexSet::from_iter(n, witness.iter().copied());
        let side = two_coloring_excluding(g, &removed).expect("witness removal leaves bipartite");
        let support = fixed.support();
        let mut parts = vec![Vec::new(), Vec::new(), Vec::new()];
        for &v in &support {
            let idx = if witness.contains(&v) { 2 } else { side[v] as usize };
            parts[idx].push(v);
        }
        let partition = VertexPartition::new(parts).unwrap();
        let connectors = connector_paths(g, &fixed)?;
        if connectors.is_empty() {
            (fixed.clone(), partition)
        } else {
            let m = connectors.iter().map(|p| p.len() - 1).min().unwrap();
            tripartite_augment(g, &fixed, &partition, m)?
        }
    };

    let mut connectors = connector_paths(g, &core)?;
    for p in &mut connectors {
        if partition.part_of(p[0]) == Some(1) {
            p.reverse();
        }
    }
    let decomposition = PreparedDecomposition {
        stage_sizes: StageSizes {
            extracted: extracted.support().len(),
            parity_fixed: fixed.support().len(),
            core: core.support().len(),
        },
        fully_absorbed: connectors.is_empty(),
        core,
        partition,
        connectors,
    };
    decomposition.verify(g, z, chords.len())?;
    Ok(decomposition)
}

/// Moves removal-set vertices that sit in connector interiors onto the
/// connector endpoints when independence and bipartiteness survive the
/// swap: every cycle through a degree-2 interior vertex traverses its whole
/// connector, so an endpoint hits at least the same cycles.
fn relocate_witness(g: &SimpleGraph, core: &SimpleGraph, witness: Vec<usize>) -> Vec<usize> {
    let in_core = VertexSet::from_iter(g.n(), core.support());
    let strays: Vec<usize> = witness.iter().copied().filter(|&s| !in_core.contains(s)).collect();
    if strays.is_empty() {
        return witness;
    }
    let connectors = match connector_paths(g, core) {
        Ok(c) => c,
        Err(_) => return witness,
    };
    let mut current = witness;
    for s in strays {
        let host_path = connectors.iter().find(|p| p[1..p.len() - 1].contains(&s));
        let Some(path) = host_path else { continue };
        let mut ends = [path[0], *path.last().unwrap()];
        ends.sort_unstable();
        for e in ends {
            if current.contains(&e) {
                continue;
            }
            if current.iter().any(|&t| t != s && g.has_edge(t, e)) {
                continue;
            }
            let mut candidate = current.clone();
            candidate.retain(|&t| t != s);
            candidate.push(e);
            let removed = VertexSet::from_iter(g.n(), candidate.iter().copied());
            if two_coloring_excluding(g, &removed).is_ok() {
                candidate.sort_unstable();
                current = candidate;
                break;
            }
        }
    }
    current
}

impl PreparedDecomposition {
    /// Re-checks every structural invariant against the original graph.
    pub fn verify(&self, g: &SimpleGraph, z: usize, chord_count: usize) -> Result<(), HostError> {
        let s = &self.stage_sizes;
        if s.extracted > 2 * z * chord_count {
            return Err(HostError::SizeChain("extracted core exceeds 2 z |D|"));
        }
        if s.parity_fixed > 2 * s.extracted {
            return Err(HostError::SizeChain("parity fix more than doubled the core"));
        }
        if s.core > 3 * s.parity_fixed {
            return Err(HostError::SizeChain("augmentation more than tripled the core"));
        }
        if self.partition.domain() != self.core.support()
            || !self.partition.is_proper_for(&self.core)
        {
            return Err(HostError::BadPartition { expected: self.partition.arity() });
        }
        let mut seen = std::collections::HashSet::new();
        for (u, v) in self.core.edges() {
            if !g.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
                return Err(HostError::EdgePartition("core edge missing from graph or repeated"));
            }
        }
        let mut interior_seen = VertexSet::new(g.n());
        for p in &self.connectors {
            let len = p.len() - 1;
            let (first, last) = (p[0], *p.last().unwrap());
            if len % 2 == 0 {
                return Err(HostError::EvenConnector { first, last, len });
            }
            if len + 3 < z {
                return Err(HostError::ConnectorTooShort {
                    first,
                    last,
                    len,
                    min: z - 3,
                });
            }
            if self.partition.part_of(first) != Some(0) || self.partition.part_of(last) != Some(1)
            {
                return Err(HostError::AlignmentFailed { first, last });
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) || !seen.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                    return Err(HostError::EdgePartition(
                        "connector edge missing from graph or repeated",
                    ));
                }
            }
            for &v in &p[1..p.len() - 1] {
                if self.partition.part_of(v).is_some() || !interior_seen.insert(v) {
                    return Err(HostError::EdgePartition(
                        "connector interiors must avoid the core and each other",
                    ));
                }
            }
        }
        if seen.len() != g.edge_count() {
            return Err(HostError::EdgePartition("edges of the graph left uncovered"));
        }
        Ok(())
    }
}
