//! Benchmark-only crate; see `benches/diameters.rs`.
