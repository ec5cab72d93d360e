//! Undirected simple graphs on vertices `0..n-1`, stored as bitset adjacency
//! rows. Immutable after construction; all operations on them are pure.

use super::GraphError;
use crate::bits;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n).max(1);
        SimpleGraph {
            n,
            words,
            adj: vec![0; n * words],
            m: 0,
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`. Panics for `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = SimpleGraph::empty(n);
        for v in 0..n {
            g.insert_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v).unwrap();
        }
        g
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = SimpleGraph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(u, v).unwrap();
            }
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        bits::set_bit(self.row_mut(u), v);
        bits::set_bit(self.row_mut(v), u);
        self.m += 1;
        Ok(())
    }

    fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        bits::clear_bit(self.row_mut(u), v);
        bits::clear_bit(self.row_mut(v), u);
        self.m -= 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test_bit(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count_ones(self.row(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .skip_while(move |&v| v < u)
                .map(move |v| (u, v))
        })
    }

    /// Vertices with degree at least one.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) > 0).collect()
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    /// The sets are given as bitset words of this graph's width.
    pub fn edges_between(&self, a: &[u64], b: &[u64]) -> usize {
        let mut total = 0;
        for u in bits::ones(a) {
            total += bits::count_and(self.row(u), b);
        }
        total
    }

    /// A new graph with the given edges added.
    pub fn with_edges(
        &self,
        extra: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for (u, v) in extra {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// A new graph on the same vertex set with the edges of `other` removed.
    /// Edges of `other` not present here are ignored.
    pub fn minus_edges(&self, other: &SimpleGraph) -> Self {
        let mut g = self.clone();
        for (u, v) in other.edges() {
            if g.has_edge(u, v) {
                g.remove_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True if the vertex set `comp` induces a clique.
    pub fn is_clique(&self, comp: &[usize]) -> bool {
        comp.iter().enumerate().all(|(i, &u)| {
            comp[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        SimpleGraph::from_edges(raw.n, raw.edges).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_degrees() {
        let g = SimpleGraph::cycle(5);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(4, 0));
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 4]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            SimpleGraph::from_edges(3, vec![(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            SimpleGraph::from_edges(3, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            SimpleGraph::from_edges(3, vec![(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
    }

    #[test]
    fn components_and_cliques() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        edges.push((4, 5));
        let g = SimpleGraph::from_edges(6, edges).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1, 2, 3], vec![4, 5]]);
        assert!(g.is_clique(&comps[0]));
        assert!(g.is_clique(&comps[1]));
    }

    #[test]
    fn json_shape() {
        let g = SimpleGraph::cycle(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        let back: SimpleGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
