//! Criterion benchmarks for heatcount-core live under `benches/`.
