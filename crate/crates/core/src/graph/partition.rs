//! Labeled partitions of a vertex subset into two or three parts.

use super::{GraphError, SimpleGraph};
use serde::{Deserialize, Serialize};

/// An ordered partition `(U_1, U_2[, U_3])` of some vertex subset.
/// Parts are sorted vertex lists and pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for VertexPartition {
    type Error = GraphError;
    fn try_from(parts: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        VertexPartition::new(parts)
    }
}

impl From<VertexPartition> for Vec<Vec<usize>> {
    fn from(p: VertexPartition) -> Self {
        p.parts
    }
}

impl VertexPartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if parts.len() != 2 && parts.len() != 3 {
            return Err(GraphError::PartitionArity {
                expected: "2 or 3",
                got: parts.len(),
            });
        }
        let mut parts: Vec<Vec<usize>> = parts;
        let mut seen = std::collections::HashSet::new();
        for part in &mut parts {
            part.sort_unstable();
            part.dedup();
            for &v in part.iter() {
                if !seen.insert(v) {
                    return Err(GraphError::PartitionOverlap(v));
                }
            }
        }
        Ok(VertexPartition { parts })
    }

    pub fn two(u1: Vec<usize>, u2: Vec<usize>) -> Result<Self, GraphError> {
        VertexPartition::new(vec![u1, u2])
    }

    pub fn three(u1: Vec<usize>, u2: Vec<usize>, u3: Vec<usize>) -> Result<Self, GraphError> {
        VertexPartition::new(vec![u1, u2, u3])
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Index of the part containing `v`, if any.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts
            .iter()
            .position(|p| p.binary_search(&v).is_ok())
    }

    /// All covered vertices, ascending.
    pub fn domain(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn domain_len(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// True when no edge of `g` joins two vertices of the same part.
    pub fn is_proper_for(&self, g: &SimpleGraph) -> bool {
        g.edges().all(|(u, v)| {
            match (self.part_of(u), self.part_of(v)) {
                (Some(a), Some(b)) => a != b,
                // edges leaving the domain do not constrain the partition
                _ => true,
            }
        })
    }
}
