//! Dense matrices over a semiring.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::semiring::{Semiring, TropicalScalar};

/// A dense `rows × cols` matrix stored row-major.
///
/// Both dimensions are at least 1. Equality is exact and structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S = TropicalScalar> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Semiring> Matrix<S> {
    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_vec",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a list of rows, which must all have the same length.
    pub fn from_rows<R, I>(rows: R) -> Result<Self>
    where
        R: IntoIterator<Item = I>,
        I: IntoIterator<Item = S>,
    {
        let mut entries = Vec::new();
        let mut cols = None;
        let mut count = 0;
        for (idx, row) in rows.into_iter().enumerate() {
            let before = entries.len();
            entries.extend(row);
            let found = entries.len() - before;
            match cols {
                None => cols = Some(found),
                Some(expected) if expected != found => {
                    return Err(Error::RaggedRows {
                        line: idx + 1,
                        expected,
                        found,
                    })
                }
                Some(_) => {}
            }
            count += 1;
        }
        match cols {
            Some(cols) if cols > 0 => Self::from_vec(count, cols, entries),
            _ => Err(Error::Empty),
        }
    }

    /// The `n × n` identity `I⊗`: `one` on the diagonal, `zero` elsewhere.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "identity matrix must have order at least 1");
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The all-`zero` matrix `O⊕`.
    ///
    /// # Panics
    ///
    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be at least 1");
        Self {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    /// # Panics
    ///
    /// Panics if either dimension is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be at least 1");
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<S> {
        (row < self.rows && col < self.cols).then(|| self.entries[row * self.cols + col])
    }

    pub fn row(&self, row: usize) -> &[S] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks_exact(self.cols)
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Returns a copy with rows `a` and `b` exchanged.
    pub fn with_rows_swapped(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        if a != b {
            for j in 0..self.cols {
                out.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
        out
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Entrywise `⊕`: `(A ⊕ B)_ij = A_ij ⊕ B_ij`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a.oplus(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Semiring product: `(A ⊗ B)_ik = ⊕_j A_ij ⊗ B_jk`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let lhs = self.row(i);
            for k in 0..other.cols {
                let mut acc = S::zero();
                for (j, &a) in lhs.iter().enumerate() {
                    let b = other.entries[j * other.cols + k];
                    acc = acc.oplus(a.otimes(b)?);
                }
                entries.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Scalar product: `(α ⊗ A)_ij = α ⊗ A_ij`.
    pub fn scalar_mul(&self, alpha: S) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|&a| alpha.otimes(a))
            .collect::<Result<_>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// `A^(k)` by repeated multiplication; `A^(0)` is the identity.
    pub fn power(&self, k: usize) -> Result<Self> {
        let n = self.require_square()?;
        if k == 0 {
            return Ok(Self::identity(n));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Iterates `A, A^(2), …` until two consecutive powers coincide or `max_k`
    /// is reached.
    ///
    /// Returns the last power computed together with the least `k` such that
    /// `A^(k+1) = A^(k)`, or `None` if no such `k < max_k` exists, in which
    /// case the matrix returned is `A^(max_k)`.
    pub fn stabilized_power(&self, max_k: usize) -> Result<(Self, Option<usize>)> {
        self.require_square()?;
        let mut current = self.clone();
        for k in 1..max_k {
            let next = current.mul(self)?;
            if next == current {
                return Ok((current, Some(k)));
            }
            current = next;
        }
        Ok((current, None))
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (row, col): (usize, usize)) -> &S {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[row * self.cols + col]
    }
}
