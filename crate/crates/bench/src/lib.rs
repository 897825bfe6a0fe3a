//! Criterion benchmarks for coorbit-core; see `benches/`.
