//! Criterion benchmarks for `tabtype`; see `benches/`.
