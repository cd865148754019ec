//! Criterion benchmarks for `lusztig-core` live in `benches/`.
