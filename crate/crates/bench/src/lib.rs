//! Criterion benchmarks for the workspace live in `benches/`.
