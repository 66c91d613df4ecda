//! Scalar arithmetic of the min-plus semiring `(Z ∪ {ε}, min, +)`.
//!
//! `ε` is a distinct variant rather than a sentinel such as `i64::MAX`, so
//! absorption under `⊗` is structural and finite sums are checked instead of
//! wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An idempotent semiring `(S, ⊕, ⊗, zero, one)`.
///
/// `zero` is neutral for `⊕` and absorbing for `⊗`; `one` is neutral for `⊗`.
/// `⊗` is fallible because concrete carriers are finite machine integers.
pub trait Semiring: Copy + Eq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn oplus(self, rhs: Self) -> Self;
    fn otimes(self, rhs: Self) -> Result<Self>;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    /// `⊗` over a sequence, short-circuiting on `zero`.
    ///
    /// A term containing `zero` is `zero` even if the finite part of the
    /// product would overflow.
    fn product<I>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Self>,
        I::IntoIter: Clone,
    {
        let mut factors = factors.into_iter();
        if factors.clone().any(Self::is_zero) {
            return Ok(Self::zero());
        }
        factors.try_fold(Self::one(), Self::otimes)
    }

    /// `⊕` over a sequence; the empty sum is `zero`.
    fn sum<I: IntoIterator<Item = Self>>(terms: I) -> Self {
        terms.into_iter().fold(Self::zero(), Self::oplus)
    }
}

/// An element of `R_min` restricted to 64-bit integers: a finite value or `ε = +∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TropicalScalar {
    Finite(i64),
    Epsilon,
}

impl TropicalScalar {
    /// `ε`, the neutral element of `⊕`.
    pub const EPSILON: Self = Self::Epsilon;
    /// `e = 0`, the neutral element of `⊗`.
    pub const E: Self = Self::Finite(0);

    pub fn is_epsilon(self) -> bool {
        matches!(self, Self::Epsilon)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Epsilon => None,
        }
    }
}

impl From<i64> for TropicalScalar {
    fn from(v: i64) -> Self {
        Self::Finite(v)
    }
}

impl From<Option<i64>> for TropicalScalar {
    fn from(v: Option<i64>) -> Self {
        v.map_or(Self::Epsilon, Self::Finite)
    }
}

/// Orders by value with `ε` above every finite value, so `⊕` is `min`.
impl Ord for TropicalScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.cmp(b),
            (Self::Finite(_), Self::Epsilon) => Ordering::Less,
            (Self::Epsilon, Self::Finite(_)) => Ordering::Greater,
            (Self::Epsilon, Self::Epsilon) => Ordering::Equal,
        }
    }
}

impl PartialOrd for TropicalScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Semiring for TropicalScalar {
    fn zero() -> Self {
        Self::Epsilon
    }

    fn one() -> Self {
        Self::E
    }

    fn oplus(self, rhs: Self) -> Self {
        self.min(rhs)
    }

    fn otimes(self, rhs: Self) -> Result<Self> {
        match (self, rhs) {
            (Self::Finite(a), Self::Finite(b)) => a
                .checked_add(b)
                .map(Self::Finite)
                .ok_or(Error::Overflow { lhs: a, rhs: b }),
            _ => Ok(Self::Epsilon),
        }
    }
}

impl fmt::Display for TropicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // `pad` so width/alignment flags apply to both variants.
            Self::Finite(v) => f.pad(&v.to_string()),
            Self::Epsilon => f.pad("E"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    pub token: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid scalar {:?}: expected `E` or an integer",
            self.token
        )
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for TropicalScalar {
    type Err = ParseScalarError;

    /// Accepts the literal `E` or a decimal integer with an optional leading `-`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "E" {
            return Ok(Self::Epsilon);
        }
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseScalarError {
                token: s.to_owned(),
            });
        }
        s.parse::<i64>()
            .map(Self::Finite)
            .map_err(|_| ParseScalarError {
                token: s.to_owned(),
            })
    }
}

impl Serialize for TropicalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Finite(v) => serializer.serialize_i64(*v),
            Self::Epsilon => serializer.serialize_str("E"),
        }
    }
}

impl<'de> Deserialize<'de> for TropicalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(Self::Finite(v)),
            Repr::Str(s) if s == "E" => Ok(Self::Epsilon),
            Repr::Str(s) => Err(serde::de::Error::custom(format!(
                "expected integer or \"E\", found {s:?}"
            ))),
        }
    }
}
