//! Criterion benchmarks for the riordan crate; see `benches/`.
