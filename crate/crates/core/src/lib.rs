//! Exact matrix algebra over the min-plus semiring `R_min = (Z ∪ {ε}, min, +)`.
//!
//! - [`semiring`]: the scalar type [`TropicalScalar`] and the [`Semiring`] trait.
//! - [`matrix`]: dense [`Matrix`] with `⊕`, `⊗`, scalar product and powers.
//! - [`bidet`]: bideterminant `(Δ1, Δ2)` and permanent by permutation enumeration.
//! - [`recurrence`]: trajectories of `X(k+1) = A ⊗ X(k)`.
//! - [`io`]: the text and JSON matrix formats.
//!
//! ```
//! use minplus_core::{Matrix, TropicalScalar};
//!
//! let a: Matrix = "0 4\n4 0".parse().unwrap();
//! let b: Matrix = "E 1\n2 E".parse().unwrap();
//! assert_eq!(a.mul(&b).unwrap().to_string(), "6 1\n2 5");
//! assert_eq!(a.scalar_mul(TropicalScalar::Epsilon).unwrap(), Matrix::zeros(2, 2));
//! ```

pub mod bidet;
pub mod error;
pub mod io;
pub mod matrix;
pub mod recurrence;
pub mod semiring;

pub use bidet::{
    bideterminant, enumerate_permutations, permanent, Bideterminant, Parity, Permutation,
    Permutations, MAX_ORDER,
};
pub use error::{Error, Result};
pub use io::{parse_matrix, print_matrix, Format, MatrixDocument};
pub use matrix::Matrix;
pub use recurrence::{solve, step, Trajectory};
pub use semiring::{ParseScalarError, Semiring, TropicalScalar};
