//! Helpers shared by unit tests.

pub use crate::fixtures::z15;
use crate::generate::{generate_space, GeneratorSpec};
use crate::space::UltrametricSpace;
use crate::weight::Weight;

pub fn matrix_from_ints(rows: &[&[u64]]) -> Vec<Vec<Weight>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Weight::from(v)).collect())
        .collect()
}

/// `n` points at mutual distance `d`.
pub fn equilateral(n: usize, d: u64) -> UltrametricSpace {
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Weight::ZERO } else { Weight::from(d) })
                .collect()
        })
        .collect();
    UltrametricSpace::with_default_labels(m).unwrap()
}

/// Random space with `n` points drawn from a small integer label pool.
pub fn random_space(n: usize, seed: u64) -> UltrametricSpace {
    let spec = GeneratorSpec {
        n,
        label_pool: (1..=4).map(Weight::from).collect(),
        branching: 4,
        seed,
    };
    generate_space(&spec).unwrap()
}
