//! Deterministic inputs for the benchmarks.

use minplus_core::{Matrix, TropicalScalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A reproducible `rows × cols` matrix with entries in `[-100, 100]` and
/// roughly `epsilon_ratio` of them set to `ε`.
pub fn random_matrix(rows: usize, cols: usize, epsilon_ratio: f64, seed: u64) -> Matrix {
    let mut rng = StdRng::seed_from_u64(seed);
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.random_bool(epsilon_ratio) {
            TropicalScalar::Epsilon
        } else {
            TropicalScalar::Finite(rng.random_range(-100..=100))
        }
    })
}

/// A zero-diagonal matrix with non-negative weights, the shape whose powers
/// converge to all-pairs shortest-path distances.
pub fn random_distance_matrix(n: usize, seed: u64) -> Matrix {
    let base = random_matrix(n, n, 0.5, seed);
    Matrix::from_fn(n, n, |i, j| match base[(i, j)] {
        _ if i == j => TropicalScalar::Finite(0),
        TropicalScalar::Finite(v) => TropicalScalar::Finite(v.abs()),
        TropicalScalar::Epsilon => TropicalScalar::Epsilon,
    })
}
