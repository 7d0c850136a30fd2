//! Benchmarks for the operator algebra live under `benches/`.
