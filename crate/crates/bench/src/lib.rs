//! Benchmarks for the verification kernels; see `benches/kernels.rs`.
