//! Criterion benchmarks for the hopfion maps; see `benches/maps.rs`.
