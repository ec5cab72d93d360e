//! Exact arrowing decisions and Ramsey numbers for small target graphs, by
//! exhaustive search over red/blue colorings of `K_N` with pruning and
//! symmetry breaking.

mod search;

pub use search::{arrows, arrows_with, ramsey_number, ramsey_number_with, Checkpoint, EngineError,
    SearchConfig, SearchStats};

use crate::graph::{find_subgraph, Embedding, GraphError, SimpleGraph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A 2-coloring of all edges of `K_N`. Serialized as the red edge list
/// (blue is the complement); also exportable as a compact hex bitstring
/// over the canonical edge order.
///
/// The canonical edge order is colex: `(0,1), (0,2), (1,2), (0,3), ...`,
/// i.e. pair `(u,v)` with `u < v` sits at position `v(v-1)/2 + u`. Every
/// prefix of the order is then a fully colored complete subgraph, which is
/// what the search and the archival bitstring rely on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColoredJson", into = "ColoredJson")]
pub struct ColoredCompleteGraph {
    n: usize,
    red: SimpleGraph,
    blue: SimpleGraph,
}

#[derive(Serialize, Deserialize)]
struct ColoredJson {
    #[serde(rename = "N")]
    n: usize,
    red_edges: Vec<(usize, usize)>,
}

impl TryFrom<ColoredJson> for ColoredCompleteGraph {
    type Error = GraphError;
    fn try_from(raw: ColoredJson) -> Result<Self, GraphError> {
        ColoredCompleteGraph::from_red_edges(raw.n, raw.red_edges)
    }
}

impl From<ColoredCompleteGraph> for ColoredJson {
    fn from(c: ColoredCompleteGraph) -> Self {
        ColoredJson {
            n: c.n,
            red_edges: c.red.edges().collect(),
        }
    }
}

/// Position of edge `{u, v}` in the canonical (colex) edge order.
#[inline]
pub fn edge_position(u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    v * (v - 1) / 2 + u
}

/// The canonical edge order for `K_n`.
pub fn canonical_edges(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

impl ColoredCompleteGraph {
    pub fn from_red_edges(
        n: usize,
        red_edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let red = SimpleGraph::from_edges(n, red_edges)?;
        Ok(Self::from_red_subgraph(red))
    }

    pub fn from_red_subgraph(red: SimpleGraph) -> Self {
        let n = red.n();
        let mut blue_edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !red.has_edge(u, v) {
                    blue_edges.push((u, v));
                }
            }
        }
        let blue = SimpleGraph::from_edges(n, blue_edges).unwrap();
        ColoredCompleteGraph { n, red, blue }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color_of(&self, u: usize, v: usize) -> Color {
        if self.red.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn subgraph(&self, color: Color) -> &SimpleGraph {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn red_subgraph(&self) -> &SimpleGraph {
        &self.red
    }

    pub fn blue_subgraph(&self) -> &SimpleGraph {
        &self.blue
    }

    /// Archival form: one bit per edge in canonical order (1 = red), packed
    /// most-significant bit first, lowercase hex.
    pub fn to_hex(&self) -> String {
        let edges = canonical_edges(self.n);
        let mut bytes = vec![0u8; (edges.len() + 7) / 8];
        for (t, &(u, v)) in edges.iter().enumerate() {
            if self.red.has_edge(u, v) {
                bytes[t / 8] |= 1 << (7 - t % 8);
            }
        }
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self, GraphError> {
        let edges = canonical_edges(n);
        let expected = (edges.len() + 7) / 8;
        let bytes: Vec<u8> = (0..hex.len() / 2)
            .map(|i| u8::from_str_radix(&hex[2 * i..2 * i + 2], 16))
            .collect::<Result<_, _>>()
            .map_err(|_| GraphError::VertexOutOfRange { v: 0, n })?;
        if bytes.len() != expected || hex.len() % 2 != 0 {
            return Err(GraphError::VertexOutOfRange { v: 0, n });
        }
        let red_edges = edges
            .iter()
            .enumerate()
            .filter(|(t, _)| bytes[t / 8] >> (7 - t % 8) & 1 == 1)
            .map(|(_, &e)| e);
        ColoredCompleteGraph::from_red_edges(n, red_edges)
    }
}

/// Searches for a monochromatic copy of `pattern`: an embedding into the red
/// subgraph, then into the blue one. Deterministic (red is tried first).
pub fn mono_copy(
    coloring: &ColoredCompleteGraph,
    pattern: &SimpleGraph,
) -> Option<(Color, Embedding)> {
    for color in [Color::Red, Color::Blue] {
        if let Some(emb) = find_subgraph(pattern, coloring.subgraph(color)) {
            return Some((color, emb));
        }
    }
    None
}

/// Outcome of an arrowing decision. When `arrows` is false the witness is a
/// concrete coloring with no monochromatic copy of the target.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowingVerdict {
    pub arrows: bool,
    pub witness: Option<ColoredCompleteGraph>,
    pub stats: SearchStats,
}
