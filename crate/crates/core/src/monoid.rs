//! Exponent monoids.
//!
//! Every algebra in this crate is built over a commutative monoid `B` whose
//! nonzero elements are closed under addition. Two instances ship: the
//! natural numbers (as [`BigUint`]) and [`NTilde`], the naturals with an extra
//! element `e` sitting between `0` and `1` that is absorbed by every positive
//! integer.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative additive monoid with zero and no zero divisors.
///
/// `Ord` is only used to order terms canonically; it never enters the algebra.
pub trait ExponentMonoid: Clone + Eq + Ord + Hash + fmt::Debug {
    fn zero() -> Self;

    fn add(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool;
}

impl ExponentMonoid for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// An element of `Ñ = {0, e, 1, 2, ...}`.
///
/// Addition: `0` is the identity, `e + e = e`, and `e + n = n` for `n >= 1`.
/// The order is `0 < e < 1 < 2 < ...`; derived `Ord` relies on the variant
/// order below, so do not reorder them.
///
/// `Pos(n)` must carry `n >= 1`; use [`NTilde::from_natural`] or
/// [`NTilde::pos`] when the payload is not known to be positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NTilde {
    Zero,
    Eps,
    Pos(BigUint),
}

impl NTilde {
    /// `Pos(n)` for `n >= 1`, `None` for zero.
    pub fn pos(n: impl Into<BigUint>) -> Option<Self> {
        let n = n.into();
        (!Zero::is_zero(&n)).then_some(NTilde::Pos(n))
    }

    /// Maps `0` to `Zero` and `n >= 1` to `Pos(n)`.
    pub fn from_natural(n: impl Into<BigUint>) -> Self {
        Self::pos(n).unwrap_or(NTilde::Zero)
    }

    pub fn one() -> Self {
        NTilde::Pos(BigUint::one())
    }

    pub fn is_eps(&self) -> bool {
        matches!(self, NTilde::Eps)
    }

    /// The positive payload, if any.
    pub fn positive(&self) -> Option<&BigUint> {
        match self {
            NTilde::Pos(n) => Some(n),
            _ => None,
        }
    }

    /// The monoid isomorphism `Ñ \ {0} -> ℕ` sending `e` to `0` and fixing positives.
    pub fn theta(&self) -> Result<BigUint> {
        match self {
            NTilde::Zero => Err(Error::ThetaOfZero),
            NTilde::Eps => Ok(BigUint::ZERO),
            NTilde::Pos(n) => Ok(n.clone()),
        }
    }

    /// Inverse of [`NTilde::theta`].
    pub fn theta_inv(n: &BigUint) -> Self {
        if Zero::is_zero(n) {
            NTilde::Eps
        } else {
            NTilde::Pos(n.clone())
        }
    }
}

impl ExponentMonoid for NTilde {
    fn zero() -> Self {
        NTilde::Zero
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (NTilde::Zero, b) => b.clone(),
            (a, NTilde::Zero) => a.clone(),
            (NTilde::Eps, NTilde::Eps) => NTilde::Eps,
            (NTilde::Eps, p @ NTilde::Pos(_)) | (p @ NTilde::Pos(_), NTilde::Eps) => p.clone(),
            (NTilde::Pos(m), NTilde::Pos(n)) => NTilde::Pos(m + n),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, NTilde::Zero)
    }
}

impl fmt::Display for NTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NTilde::Zero => f.write_str("0"),
            NTilde::Eps => f.write_str("e"),
            NTilde::Pos(n) => write!(f, "{n}"),
        }
    }
}

impl From<u64> for NTilde {
    fn from(n: u64) -> Self {
        NTilde::from_natural(n)
    }
}
