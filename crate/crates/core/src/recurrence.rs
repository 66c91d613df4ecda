//! Recurrent linear systems `X(k+1) = A ⊗ X(k)`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::{Semiring, TropicalScalar};

/// The materialized prefix `X(0), …, X(K)` of a recurrent system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory<S = TropicalScalar> {
    states: Vec<Matrix<S>>,
    stabilized_at: Option<usize>,
}

impl<S: Semiring> Trajectory<S> {
    /// `X(0)` through `X(K)`; never empty.
    pub fn states(&self) -> &[Matrix<S>] {
        &self.states
    }

    pub fn state(&self, k: usize) -> Option<&Matrix<S>> {
        self.states.get(k)
    }

    /// The final state `X(K)`.
    pub fn last(&self) -> &Matrix<S> {
        self.states.last().expect("trajectory is never empty")
    }

    /// Index of the last state, `K`.
    pub fn horizon(&self) -> usize {
        self.states.len() - 1
    }

    /// Least `s` with `X(s+1) = X(s)` within the materialized prefix.
    pub fn stabilized_at(&self) -> Option<usize> {
        self.stabilized_at
    }

    pub fn into_states(self) -> Vec<Matrix<S>> {
        self.states
    }
}

fn check_system<S: Semiring>(a: &Matrix<S>, x: &Matrix<S>) -> Result<()> {
    let n = a.require_square()?;
    if x.shape() != (n, 1) {
        return Err(Error::DimensionMismatch {
            op: "step",
            left: a.shape(),
            right: x.shape(),
        });
    }
    Ok(())
}

/// One step of the system: `A ⊗ x` for an `n × n` matrix and an `n × 1` column.
pub fn step<S: Semiring>(a: &Matrix<S>, x: &Matrix<S>) -> Result<Matrix<S>> {
    check_system(a, x)?;
    a.mul(x)
}

/// Computes `X(0) = x0, …, X(k)`.
///
/// Once a fixed point `X(s+1) = X(s)` is reached the remaining states are
/// copies of it; the trajectory still has exactly `k + 1` states.
pub fn solve<S: Semiring>(a: &Matrix<S>, x0: &Matrix<S>, k: usize) -> Result<Trajectory<S>> {
    check_system(a, x0)?;
    let mut states = Vec::with_capacity(k + 1);
    states.push(x0.clone());
    let mut stabilized_at = None;
    for j in 0..k {
        let next = match stabilized_at {
            Some(_) => states[j].clone(),
            None => {
                let next = a.mul(&states[j])?;
                if next == states[j] {
                    stabilized_at = Some(j);
                }
                next
            }
        };
        states.push(next);
    }
    Ok(Trajectory {
        states,
        stabilized_at,
    })
}
