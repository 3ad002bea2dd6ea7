//! Benchmarks live in `benches/`; run them with `cargo bench -p demazure-bench`.
