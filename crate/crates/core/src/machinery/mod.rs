//! Host preparation of chorded cycles, the parameter calculator, and the
//! greedy dense embedders.

mod dense;
mod host;
mod params;

pub use dense::{greedy_dense_embed, stability_cleanup, two_sided_greedy_embed, CleanupOutcome,
    MultiColoredGraph, TwoSidedError, TwoSidedOutcome};
pub use host::{bipartite_path_alignment, connector_paths, extract_core, parity_fix, prepare_host,
    tripartite_augment, HostError, PreparedDecomposition, StageSizes};
pub use params::{parameter_chain, LogValue, ParameterChecks, ParameterInputs, ParameterSet};
