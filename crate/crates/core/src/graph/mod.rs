//! Graph representation, chorded-cycle construction, structural classifiers,
//! and subgraph search.

pub(crate) mod bipartite;
pub(crate) mod chords;
mod graph6;
mod partition;
mod simple;
mod subgraph;

pub use bipartite::{almost_bipartite_index, bipartiteness, bipartition, AlmostBipartite,
    Bipartiteness, DEFAULT_K_MAX};
pub use chords::{build_chorded_cycle, recover_chords, ChordSet};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use partition::VertexPartition;
pub use simple::SimpleGraph;
pub use subgraph::{find_subgraph, Embedding};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("chord {{{0}, {1}}} coincides with a cycle edge or a vertex")]
    ChordOnCycle(usize, usize),
    #[error("cycle length {0} is too short (need at least 3)")]
    CycleTooShort(usize),
    #[error("partition parts are not pairwise disjoint (vertex {0} repeats)")]
    PartitionOverlap(usize),
    #[error("expected {expected} parts, got {got}")]
    PartitionArity { expected: &'static str, got: usize },
}
