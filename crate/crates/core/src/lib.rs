//! Laboratory for Ramsey numbers of cycles with chords.
//!
//! The crate is organized around five subsystems:
//!
//! - [`graph`]: simple graphs, chorded cycles, bipartiteness and
//!   almost-bipartiteness classifiers, subgraph search, graph6/JSON I/O.
//! - [`ramsey`]: exact arrowing decisions and Ramsey numbers for small
//!   targets by exhaustive search over 2-colorings of `K_N`.
//! - [`extremal`]: the lower-bound colorings (maximal cut, apex vertex,
//!   tripartite) and the structural/search certifiers for them.
//! - [`machinery`]: host preparation of `C_n ∪ D` into a core graph plus
//!   long odd connector paths, the parameter calculator, and the greedy
//!   dense embedders.
//! - [`pairs`]: density/regularity diagnostics for vertex-set pairs and
//!   the chunk allocator + chain embedder for families of long paths.
//!
//! Synthetic-instance builders used by the CLI and the test harnesses live
//! in [`synth`].

pub mod bits;
pub mod extremal;
pub mod graph;
pub mod machinery;
pub mod pairs;
pub mod ramsey;
pub mod synth;

pub use graph::{
    almost_bipartite_index, bipartiteness, bipartition, build_chorded_cycle, find_subgraph,
    AlmostBipartite, Bipartiteness, ChordSet, Embedding, GraphError, SimpleGraph, VertexPartition,
};
pub use ramsey::{arrows, mono_copy, ramsey_number, ArrowingVerdict, Color, ColoredCompleteGraph};

