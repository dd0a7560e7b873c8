//! Exact rational arithmetic on `i128` numerator/denominator pairs.
//!
//! Every value is kept in canonical form (lowest terms, positive
//! denominator), so equality and hashing are structural. All arithmetic is
//! checked: computations whose reduced result would not fit in `i128`
//! panic with a "rational overflow" message instead of silently wrapping.
//! The supported magnitude is far beyond anything the solvers produce on
//! desk-scale inputs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

const OVERFLOW_MSG: &str = "rational overflow: value out of supported i128 range";

/// An exact rational number `num/den` with `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    // Plain Euclid on non-negative inputs; operands here are already
    // absolute values well inside i128.
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` in canonical form. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "rational denominator must be non-zero");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        if g == 0 {
            return Rational::ZERO;
        }
        Rational {
            num: sign * (num / g),
            den: (den / g).abs(),
        }
    }

    pub fn from_int(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    /// Smallest integer `>= self`.
    pub fn ceil(&self) -> i128 {
        -((-self.num).div_euclid(self.den))
    }

    /// Fractional part `self - floor(self)`, always in `[0, 1)`.
    pub fn frac(&self) -> Rational {
        let f = self.num.rem_euclid(self.den);
        Rational::new(f, self.den)
    }

    pub fn floor_rational(&self) -> Rational {
        Rational::from_int(self.floor())
    }

    pub fn ceil_rational(&self) -> Rational {
        Rational::from_int(self.ceil())
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(self.num != 0, "division by zero rational");
        Rational::new(self.den, self.num)
    }

    fn checked_reduce(num: i128, den: i128) -> Rational {
        debug_assert!(den > 0);
        let g = gcd(num, den);
        if g == 0 {
            return Rational::ZERO;
        }
        Rational {
            num: num / g,
            den: den / g,
        }
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        // Reduce by gcd of the denominators first so intermediates stay small.
        let g = gcd(self.den, rhs.den);
        let lhs_scale = rhs.den / g;
        let rhs_scale = self.den / g;
        let num = self
            .num
            .checked_mul(lhs_scale)
            .and_then(|a| {
                rhs.num
                    .checked_mul(rhs_scale)
                    .and_then(|b| a.checked_add(b))
            })
            .expect(OVERFLOW_MSG);
        let den = self.den.checked_mul(lhs_scale).expect(OVERFLOW_MSG);
        Rational::checked_reduce(num, den)
    }
}

impl Sub for Rational {
    type Output = Rational;

    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            num: self.num.checked_neg().expect(OVERFLOW_MSG),
            den: self.den,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;

    fn mul(self, rhs: Rational) -> Rational {
        // Cross-reduce before multiplying.
        let g1 = gcd(self.num, rhs.den);
        let g2 = gcd(rhs.num, self.den);
        let (an, ad) = (self.num / g1.max(1), self.den / g2.max(1));
        let (bn, bd) = (rhs.num / g2.max(1), rhs.den / g1.max(1));
        let num = an.checked_mul(bn).expect(OVERFLOW_MSG);
        let den = ad.checked_mul(bd).expect(OVERFLOW_MSG);
        Rational::checked_reduce(num, den)
    }
}

impl Div for Rational {
    type Output = Rational;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Rational) -> Rational {
        self * rhs.recip()
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = *self - rhs;
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        // Fast path: cross-multiplication in i128.
        if let (Some(a), Some(b)) = (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            return a.cmp(&b);
        }
        cmp_frac(self.num, self.den, other.num, other.den)
    }
}

/// Overflow-free comparison of `a/b` and `c/d` (`b, d > 0`) by comparing
/// integer parts and recursing on the flipped remainders.
fn cmp_frac(mut a: i128, mut b: i128, mut c: i128, mut d: i128) -> Ordering {
    let mut flipped = false;
    loop {
        let q1 = a.div_euclid(b);
        let q2 = c.div_euclid(d);
        let ord = q1.cmp(&q2);
        if ord != Ordering::Equal {
            return if flipped { ord.reverse() } else { ord };
        }
        let r1 = a - q1 * b;
        let r2 = c - q2 * d;
        if r1 == 0 || r2 == 0 {
            let ord = r1.cmp(&r2);
            return if flipped { ord.reverse() } else { ord };
        }
        // a/b vs c/d with equal integer parts: compare r1/b vs r2/d,
        // i.e. the reciprocals b/r1 vs d/r2 with the order flipped.
        let (na, nb, nc, nd) = (b, r1, d, r2);
        a = na;
        b = nb;
        c = nc;
        d = nd;
        flipped = !flipped;
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i128> for Rational {
    fn from(n: i128) -> Rational {
        Rational::from_int(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_int(n as i128)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Rational {
        Rational::from_int(n as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(-2, -4), r(1, 2));
        assert_eq!(r(2, -4), r(-1, 2));
        assert_eq!(r(0, -7), Rational::ZERO);
        assert_eq!(r(6, 3).numer(), 2);
        assert_eq!(r(6, 3).denom(), 1);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 3), r(1, 6));
        assert_eq!(r(3, 4) * r(2, 3), r(1, 2));
        assert_eq!(r(3, 4) / r(3, 2), r(1, 2));
        assert_eq!(-r(1, 2), r(-1, 2));
    }

    #[test]
    fn floor_ceil_frac() {
        assert_eq!(r(7, 2).floor(), 3);
        assert_eq!(r(7, 2).ceil(), 4);
        assert_eq!(r(7, 2).frac(), r(1, 2));
        assert_eq!(r(-1, 5).floor(), -1);
        assert_eq!(r(-1, 5).ceil(), 0);
        assert_eq!(r(-1, 5).frac(), r(4, 5));
        assert_eq!(r(4, 1).floor(), 4);
        assert_eq!(r(4, 1).ceil(), 4);
        assert_eq!(r(4, 1).frac(), Rational::ZERO);
        assert_eq!(r(-6, 3).floor(), -2);
        assert_eq!(r(-6, 3).ceil(), -2);
    }

    #[test]
    fn ordering() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(-1, 3));
        assert_eq!(r(7, 10).min(r(0, 1)), Rational::ZERO);
        assert_eq!(r(7, 10).max(r(0, 1)), r(7, 10));
        assert_eq!(r(2, 4).cmp(&r(1, 2)), Ordering::Equal);
    }

    #[test]
    fn ordering_large_values() {
        // Values whose cross-products overflow i128 force the slow path.
        let big = i128::MAX / 2;
        let a = Rational::new(big, big - 1);
        let b = Rational::new(big - 1, big - 2);
        assert!(a < b);
        assert!(b > a);
        assert_eq!(a.cmp(&a), Ordering::Equal);
    }

    #[test]
    fn frac_plus_floor_roundtrip() {
        for n in -20..20i128 {
            for d in 1..8i128 {
                let x = r(n, d);
                assert_eq!(x.floor_rational() + x.frac(), x);
                assert!(Rational::ZERO <= x.frac() && x.frac() < Rational::ONE);
                assert_eq!(x.ceil(), -(-x).floor());
            }
        }
    }
}
