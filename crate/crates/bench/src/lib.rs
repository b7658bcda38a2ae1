//! Criterion benchmarks for the counting routines; see `benches/`.
