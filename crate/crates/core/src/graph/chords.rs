//! Chord sets over the canonical cycle `0-1-...-(n-1)-0` and the chorded
//! cycle builder.

use super::{GraphError, SimpleGraph};
use serde::{Deserialize, Serialize};

/// A set of chords of the canonical cycle `C_n`. Every chord joins two
/// non-consecutive cycle vertices; pairs are stored `(min, max)` and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ChordSetJson", into = "ChordSetJson")]
pub struct ChordSet {
    n: usize,
    chords: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct ChordSetJson {
    n: usize,
    chords: Vec<(usize, usize)>,
}

impl TryFrom<ChordSetJson> for ChordSet {
    type Error = GraphError;
    fn try_from(raw: ChordSetJson) -> Result<Self, GraphError> {
        ChordSet::new(raw.n, raw.chords)
    }
}

impl From<ChordSet> for ChordSetJson {
    fn from(c: ChordSet) -> Self {
        ChordSetJson {
            n: c.n,
            chords: c.chords,
        }
    }
}

impl ChordSet {
    pub fn new(
        n: usize,
        chords: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in chords {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            let (u, v) = (a.min(b), a.max(b));
            // {u,v} must not be a vertex or an edge of the cycle
            let gap = v - u;
            if gap == 0 || gap == 1 || gap == n - 1 {
                return Err(GraphError::ChordOnCycle(u, v));
            }
            if out.contains(&(u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            out.push((u, v));
        }
        out.sort_unstable();
        Ok(ChordSet { n, chords: out })
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        ChordSet::new(n, std::iter::empty())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.chords.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Distinct chord endpoints, ascending.
    pub fn endpoints(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.chords.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Builds `C_n ∪ D`: the canonical cycle plus the chord edges.
///
/// The result has `n` vertices and `n + |D|` edges.
pub fn build_chorded_cycle(n: usize, chords: &ChordSet) -> Result<SimpleGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    assert_eq!(chords.n(), n, "chord set built for a different cycle length");
    let mut g = SimpleGraph::cycle(n);
    for &(u, v) in chords.chords() {
        g.insert_edge(u, v)?;
    }
    Ok(g)
}

/// Recovers the chord set of a graph produced by [`build_chorded_cycle`]:
/// the non-cycle edges. Returns `None` when some cycle edge is missing,
/// i.e. the graph is not a chorded canonical cycle.
pub fn recover_chords(g: &SimpleGraph) -> Option<ChordSet> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    for v in 0..n {
        if !g.has_edge(v, (v + 1) % n) {
            return None;
        }
    }
    let chords = g.edges().filter(|&(u, v)| {
        let gap = v - u;
        gap != 1 && gap != n - 1
    });
    ChordSet::new(n, chords).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, find_subgraph};

    #[test]
    fn chord_validation() {
        assert!(ChordSet::new(6, vec![(0, 3)]).is_ok());
        assert_eq!(
            ChordSet::new(6, vec![(0, 1)]),
            Err(GraphError::ChordOnCycle(0, 1))
        );
        assert_eq!(
            ChordSet::new(6, vec![(5, 0)]),
            Err(GraphError::ChordOnCycle(0, 5))
        );
        assert_eq!(
            ChordSet::new(6, vec![(2, 2)]),
            Err(GraphError::ChordOnCycle(2, 2))
        );
        assert_eq!(
            ChordSet::new(6, vec![(0, 3), (3, 0)]),
            Err(GraphError::DuplicateEdge(0, 3))
        );
    }

    #[test]
    fn hexagon_with_long_chord_is_bipartite() {
        let d = ChordSet::new(6, vec![(0, 3)]).unwrap();
        let g = build_chorded_cycle(6, &d).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 7);
        assert!(bipartition(&g).is_some());
    }

    #[test]
    fn pentagon_without_chords() {
        let d = ChordSet::empty(5).unwrap();
        let g = build_chorded_cycle(5, &d).unwrap();
        assert_eq!(g, SimpleGraph::cycle(5));
    }

    #[test]
    fn triangle_construction_prefix() {
        // chords {0,2} and {3,5} put two vertex-disjoint triangles on C_13
        let d = ChordSet::new(13, vec![(0, 2), (3, 5)]).unwrap();
        let g = build_chorded_cycle(13, &d).unwrap();
        let tri = SimpleGraph::complete(3);
        let emb = find_subgraph(&tri, &g).expect("triangle present");
        assert!(emb.is_valid(&tri, &g));
        for (a, b) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            assert!(g.has_edge(a, b));
        }
    }

    #[test]
    fn chords_recovered_from_graph() {
        let d = ChordSet::new(9, vec![(0, 2), (4, 7)]).unwrap();
        let g = build_chorded_cycle(9, &d).unwrap();
        assert_eq!(recover_chords(&g), Some(d));
        assert_eq!(recover_chords(&SimpleGraph::path(5)), None);
    }

    #[test]
    fn cycle_embeds_by_the_identity_map() {
        let d = ChordSet::new(11, vec![(0, 2), (4, 8)]).unwrap();
        let g = build_chorded_cycle(11, &d).unwrap();
        let identity = crate::graph::Embedding {
            map: (0..11).collect(),
        };
        assert!(identity.is_valid(&SimpleGraph::cycle(11), &g));
    }

    #[test]
    fn chordset_json_roundtrip() {
        let d = ChordSet::new(9, vec![(4, 7), (0, 2)]).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"n":9,"chords":[[0,2],[4,7]]}"#);
        let back: ChordSet = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<ChordSet>(r#"{"n":9,"chords":[[0,1]]}"#).is_err());
    }
}
