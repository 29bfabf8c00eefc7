//! Criterion benchmarks for the annulus solvers. See `benches/`.

use annulus_core::gen::{generate, Distribution, GenSpec};
use annulus_core::PointSet;

/// The seeded uniform instance every benchmark of size `n` uses.
pub fn instance(n: usize) -> PointSet {
    generate(&GenSpec::new(Distribution::Uniform, n, 7))
}
