//! Bideterminant and permanent of square matrices.
//!
//! Without additive inverses there is no signed determinant. Instead the
//! permutation sum is split by parity into the pair `(Δ1, Δ2)`:
//!
//! ```text
//! Δ1(A) = ⊕_{σ even} ⊗_i A[i, σ(i)]
//! Δ2(A) = ⊕_{σ odd}  ⊗_i A[i, σ(i)]
//! perm(A) = Δ1(A) ⊕ Δ2(A)
//! ```
//!
//! Both are computed by enumerating all `n!` permutations, so the order is
//! capped at [`MAX_ORDER`].

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::{Semiring, TropicalScalar};

/// Largest order accepted by the enumerator (`10! = 3_628_800` terms).
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Self::Even => Self::Odd,
            Self::Odd => Self::Even,
        }
    }

    fn from_count(count: usize) -> Self {
        if count % 2 == 0 {
            Self::Even
        } else {
            Self::Odd
        }
    }
}

/// A bijection on `{0, …, n-1}` with its parity.
///
/// `mapping()[i]` is `σ(i)`. Indices are zero-based; `Display` prints the
/// one-line notation one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
    parity: Parity,
}

impl Permutation {
    /// Validates `mapping` and computes its parity from the inversion count.
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(mapping));
            }
        }
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| mapping[i] > mapping[j])
            .count();
        Ok(Self {
            mapping,
            parity: Parity::from_count(inversions),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n).collect(),
            parity: Parity::Even,
        }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            mapping[v] = i;
        }
        Self {
            mapping,
            parity: self.parity,
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.mapping.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}

/// Iterative Heap's algorithm.
///
/// Consecutive arrangements differ by exactly one transposition, so parity is
/// tracked by flipping instead of being recounted.
#[derive(Debug, Clone)]
struct HeapState {
    current: Vec<usize>,
    counters: Vec<usize>,
    cursor: usize,
    parity: Parity,
}

impl HeapState {
    fn new(n: usize) -> Self {
        Self {
            current: (0..n).collect(),
            counters: vec![0; n],
            cursor: 1,
            parity: Parity::Even,
        }
    }

    /// Advances to the next arrangement; `false` once all have been produced.
    fn advance(&mut self) -> bool {
        let n = self.current.len();
        while self.cursor < n {
            let i = self.cursor;
            if self.counters[i] < i {
                let j = if i % 2 == 0 { 0 } else { self.counters[i] };
                self.current.swap(j, i);
                self.parity = self.parity.flip();
                self.counters[i] += 1;
                self.cursor = 1;
                return true;
            }
            self.counters[i] = 0;
            self.cursor += 1;
        }
        false
    }

    fn for_each(n: usize, mut visit: impl FnMut(&[usize], Parity) -> Result<()>) -> Result<()> {
        let mut state = Self::new(n);
        loop {
            visit(&state.current, state.parity)?;
            if !state.advance() {
                return Ok(());
            }
        }
    }
}

/// Iterator over all permutations of a fixed order, produced in Heap's order.
#[derive(Debug, Clone)]
pub struct Permutations {
    state: HeapState,
    started: bool,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.started && !self.state.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Permutation {
            mapping: self.state.current.clone(),
            parity: self.state.parity,
        })
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooLarge { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Every permutation of `{0, …, n-1}` exactly once, each with its parity.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    check_order(n)?;
    Ok(Permutations {
        state: HeapState::new(n),
        started: false,
        done: n == 0,
    })
}

/// The pair `(Δ1, Δ2)` of parity-restricted permutation sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bideterminant<S = TropicalScalar> {
    pub delta1: S,
    pub delta2: S,
}

impl<S: Semiring> Bideterminant<S> {
    /// `Δ1 ⊕ Δ2`.
    pub fn permanent(&self) -> S {
        self.delta1.oplus(self.delta2)
    }
}

/// Computes `(Δ1(A), Δ2(A))`.
///
/// A term with a `zero` entry is absorbed rather than aborting the sum; when
/// every term is absorbed the result is `(zero, zero)`. For `n = 1` there are
/// no odd permutations, so `Δ2` is `zero`.
pub fn bideterminant<S: Semiring>(a: &Matrix<S>) -> Result<Bideterminant<S>> {
    let n = a.require_square()?;
    check_order(n)?;
    let mut even = S::zero();
    let mut odd = S::zero();
    HeapState::for_each(n, |sigma, parity| {
        let term = S::product((0..n).map(|i| a[(i, sigma[i])]))?;
        match parity {
            Parity::Even => even = even.oplus(term),
            Parity::Odd => odd = odd.oplus(term),
        }
        Ok(())
    })?;
    Ok(Bideterminant {
        delta1: even,
        delta2: odd,
    })
}

/// `perm(A) = Δ1(A) ⊕ Δ2(A)`; in min-plus, the optimal assignment cost.
pub fn permanent<S: Semiring>(a: &Matrix<S>) -> Result<S> {
    bideterminant(a).map(|b| b.permanent())
}
