//! Inputs shared by the benchmarks.

use ultrametric::{generate_space, GeneratorSpec, PointSet, UltrametricSpace, Weight};

/// A random space with `n` points, integer distances `1..=n` and up to four
/// children per ball.
pub fn sample_space(n: usize, seed: u64) -> UltrametricSpace {
    let spec = GeneratorSpec {
        n,
        label_pool: (1..=n as u64).map(Weight::from).collect(),
        branching: 4,
        seed,
    };
    generate_space(&spec).expect("valid generator parameters")
}

/// Two overlapping subsets: every third point, and every other point.
pub fn sample_sets(n: usize) -> (PointSet, PointSet) {
    (PointSet::new((0..n).step_by(3)), PointSet::new((0..n).step_by(2)))
}
