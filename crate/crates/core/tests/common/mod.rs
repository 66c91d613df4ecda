#![allow(dead_code)]

use std::path::PathBuf;

use minplus_core::{Error, Matrix, Semiring, TropicalScalar};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn fixture(name: &str) -> Matrix {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.parse().unwrap()
}

pub fn m(text: &str) -> Matrix {
    text.parse().unwrap()
}

/// Values in [-100, 100] plus ε about one time in six.
pub fn scalar() -> impl Strategy<Value = TropicalScalar> + Clone {
    prop_oneof![
        5 => (-100i64..=100).prop_map(TropicalScalar::Finite),
        1 => Just(TropicalScalar::Epsilon),
    ]
}

pub fn finite() -> impl Strategy<Value = TropicalScalar> {
    (-100i64..=100).prop_map(TropicalScalar::Finite)
}

pub fn matrix_of<S: Semiring + 'static>(
    rows: usize,
    cols: usize,
    elem: impl Strategy<Value = S> + 'static,
) -> impl Strategy<Value = Matrix<S>> {
    prop::collection::vec(elem, rows * cols)
        .prop_map(move |entries| Matrix::from_vec(rows, cols, entries).unwrap())
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    matrix_of(rows, cols, scalar())
}

pub fn square(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(|n| matrix(n, n))
}

/// Max-plus `(Z ∪ {-∞}, max, +)`, the dual instance of the semiring trait.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxPlus {
    Finite(i64),
    NegInf,
}

impl Semiring for MaxPlus {
    fn zero() -> Self {
        Self::NegInf
    }

    fn one() -> Self {
        Self::Finite(0)
    }

    fn oplus(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a.max(b)),
            (Self::NegInf, x) | (x, Self::NegInf) => x,
        }
    }

    fn otimes(self, rhs: Self) -> Result<Self, Error> {
        match (self, rhs) {
            (Self::Finite(a), Self::Finite(b)) => a
                .checked_add(b)
                .map(Self::Finite)
                .ok_or(Error::Overflow { lhs: a, rhs: b }),
            _ => Ok(Self::NegInf),
        }
    }
}

pub fn max_plus() -> impl Strategy<Value = MaxPlus> + Clone {
    prop_oneof![
        5 => (-100i64..=100).prop_map(MaxPlus::Finite),
        1 => Just(MaxPlus::NegInf),
    ]
}

/// Plain `Option<i64>` view of a matrix, `None` for ε.
pub fn plain(a: &Matrix) -> Vec<Vec<Option<i64>>> {
    a.row_iter()
        .map(|row| row.iter().map(|x| x.finite()).collect())
        .collect()
}

/// `min_j (a[i][j] + b[j][k])` with +∞ handled by hand, independent of the
/// semiring trait.
pub fn triple_loop_product(a: &Matrix, b: &Matrix) -> Vec<Vec<Option<i64>>> {
    let (a, b) = (plain(a), plain(b));
    let inner = b.len();
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|k| {
                    let mut best: Option<i64> = None;
                    for j in 0..inner {
                        if let (Some(x), Some(y)) = (row[j], b[j][k]) {
                            let s = x + y;
                            best = Some(best.map_or(s, |cur| cur.min(s)));
                        }
                    }
                    best
                })
                .collect()
        })
        .collect()
}

/// Optimal assignment cost by brute force over every permutation, with no
/// parity bookkeeping.
pub fn brute_force_permanent(a: &Matrix) -> Option<i64> {
    use itertools::Itertools;
    let a = plain(a);
    let n = a.len();
    (0..n)
        .permutations(n)
        .filter_map(|sigma| (0..n).map(|i| a[i][sigma[i]]).sum::<Option<i64>>())
        .min()
}

/// Scalar semiring axioms, including idempotence of `⊕`.
pub fn semiring_axioms<S: Semiring>(a: S, b: S, c: S) -> Result<(), TestCaseError> {
    let mul = |x: S, y: S| x.otimes(y).unwrap();

    prop_assert_eq!(a.oplus(a), a, "idempotence");
    prop_assert_eq!(a.oplus(b), b.oplus(a), "oplus commutative");
    prop_assert_eq!(
        a.oplus(b).oplus(c),
        a.oplus(b.oplus(c)),
        "oplus associative"
    );
    prop_assert_eq!(mul(mul(a, b), c), mul(a, mul(b, c)), "otimes associative");
    prop_assert_eq!(
        mul(a, b.oplus(c)),
        mul(a, b).oplus(mul(a, c)),
        "left distributive"
    );
    prop_assert_eq!(
        mul(b.oplus(c), a),
        mul(b, a).oplus(mul(c, a)),
        "right distributive"
    );
    prop_assert_eq!(S::zero().oplus(a), a, "zero neutral");
    prop_assert_eq!(mul(S::one(), a), a, "one neutral (left)");
    prop_assert_eq!(mul(a, S::one()), a, "one neutral (right)");
    prop_assert_eq!(mul(a, S::zero()), S::zero(), "zero absorbing (right)");
    prop_assert_eq!(mul(S::zero(), a), S::zero(), "zero absorbing (left)");
    Ok(())
}

/// Semiring axioms lifted to square matrices, with `O⊕` and `I⊗`.
pub fn matrix_semiring_axioms<S: Semiring>(
    a: &Matrix<S>,
    b: &Matrix<S>,
    c: &Matrix<S>,
) -> Result<(), TestCaseError> {
    let n = a.rows();
    let add = |x: &Matrix<S>, y: &Matrix<S>| x.add(y).unwrap();
    let mul = |x: &Matrix<S>, y: &Matrix<S>| x.mul(y).unwrap();
    let zero = Matrix::<S>::zeros(n, n);
    let id = Matrix::<S>::identity(n);

    prop_assert_eq!(&add(a, a), a);
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(add(&add(a, b), c), add(a, &add(b, c)));
    prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
    prop_assert_eq!(mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)));
    prop_assert_eq!(mul(&add(b, c), a), add(&mul(b, a), &mul(c, a)));
    prop_assert_eq!(&add(a, &zero), a);
    prop_assert_eq!(&mul(a, &zero), &zero);
    prop_assert_eq!(&mul(&zero, a), &zero);
    prop_assert_eq!(&mul(a, &id), a);
    prop_assert_eq!(&mul(&id, a), a);
    Ok(())
}

pub fn square_triple<S: Semiring + 'static>(
    elem: impl Strategy<Value = S> + Clone + 'static,
) -> impl Strategy<Value = (Matrix<S>, Matrix<S>, Matrix<S>)> {
    (1usize..=5).prop_flat_map(move |n| {
        (
            matrix_of(n, n, elem.clone()),
            matrix_of(n, n, elem.clone()),
            matrix_of(n, n, elem.clone()),
        )
    })
}
