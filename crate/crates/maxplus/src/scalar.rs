//! Scalars of the max-plus semiring: exact rationals extended with the
//! bottom element `-inf`.
//!
//! Addition is `max`, multiplication is `+`. The bottom element is neutral
//! for `max` and absorbing for `+`, and sorts below every rational.

use std::cmp::Ordering;
use std::fmt;

use crate::rational::Rational;

/// A max-plus scalar: either `-inf` (the semiring zero) or a finite rational.
///
/// The derived `Ord` uses the variant order, so `NegInf` is less than every
/// finite value, matching the total order of the semiring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    NegInf,
    Fin(Rational),
}

impl Scalar {
    pub const NEG_INF: Scalar = Scalar::NegInf;

    pub fn from_int(n: i128) -> Scalar {
        Scalar::Fin(Rational::from_int(n))
    }

    pub fn rational(n: i128, d: i128) -> Scalar {
        Scalar::Fin(Rational::new(n, d))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Scalar::Fin(_))
    }

    pub fn as_finite(&self) -> Option<Rational> {
        match self {
            Scalar::NegInf => None,
            Scalar::Fin(r) => Some(*r),
        }
    }

    /// Semiring addition: `max`.
    pub fn plus(self, other: Scalar) -> Scalar {
        self.max(other)
    }

    /// Semiring multiplication: `+`, with `-inf` absorbing.
    pub fn times(self, other: Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Fin(a), Scalar::Fin(b)) => Scalar::Fin(a + b),
            _ => Scalar::NegInf,
        }
    }

    /// Multiplicative inverse (negation) of a finite scalar.
    pub fn inverse(self) -> Option<Scalar> {
        self.as_finite().map(|r| Scalar::Fin(-r))
    }

    pub fn cmp_total(&self, other: &Scalar) -> Ordering {
        self.cmp(other)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Scalar {
        Scalar::Fin(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::NegInf => write!(f, "*"),
            Scalar::Fin(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
