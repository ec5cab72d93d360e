//! Density and regularity diagnostics for vertex-set pairs, the single-pair
//! alternating path embedder, and the chunk allocator + chain embedder for
//! families of anchored odd paths.

mod chain;
mod density;
mod path;

pub use chain::{allocate_chunks, chain_path_embed, allocation_hypotheses, validate_chain_regularity,
    AllocationHypotheses, ChainError, ChunkError};
pub use density::{density, regularity_check, typical_vertices, Density, PairsError,
    RegularityMode, RegularityVerdict};
pub use path::{pair_path_embed, PathError};

use crate::graph::SimpleGraph;
use serde::{Deserialize, Serialize};

/// An ordered run of equal-size clusters in a host graph. Clusters are
/// pairwise disjoint except that the first and last may coincide partially.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClusterChain {
    pub host: SimpleGraph,
    pub clusters: Vec<Vec<usize>>,
}

impl ClusterChain {
    pub fn new(host: SimpleGraph, clusters: Vec<Vec<usize>>) -> Result<Self, ChainError> {
        let chain = ClusterChain { host, clusters };
        chain.validate()?;
        Ok(chain)
    }

    pub fn validate(&self) -> Result<(), ChainError> {
        let ell = self.clusters.len();
        if ell < 2 {
            return Err(ChainError::ClusterShape("need at least two clusters"));
        }
        let size = self.clusters[0].len();
        if size == 0 {
            return Err(ChainError::ClusterShape("clusters must be nonempty"));
        }
        for c in &self.clusters {
            if c.len() != size {
                return Err(ChainError::ClusterShape("clusters must have equal sizes"));
            }
            if c.iter().any(|&v| v >= self.host.n()) {
                return Err(ChainError::ClusterShape("cluster vertex outside the host"));
            }
        }
        let mut owner = vec![usize::MAX; self.host.n()];
        for (i, c) in self.clusters.iter().enumerate() {
            for &v in c {
                if owner[v] != usize::MAX && !(i == ell - 1 && owner[v] == 0) {
                    return Err(ChainError::ClusterShape(
                        "clusters overlap beyond the allowed first/last pair",
                    ));
                }
                owner[v] = i;
            }
        }
        Ok(())
    }

    pub fn cluster_size(&self) -> usize {
        self.clusters[0].len()
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }
}

/// One path to embed along a chain: an odd number of edges, anchored at a
/// vertex of the first cluster and one of the last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchoredPathSpec {
    pub length: usize,
    pub start_anchor: usize,
    pub end_anchor: usize,
}

/// How many edges of each path to route through each consecutive cluster
/// pair: `q[i][j]` edges of path `i` cross pair `(V_{j+1}, V_{j+2})` in
/// 1-indexed terms. Single edges on odd-position pairs, odd runs of at
/// least 3 on even-position pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkAllocation {
    pub q: Vec<Vec<usize>>,
}
