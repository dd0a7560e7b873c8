//! Two-row matrices: the image is fully described by the interval of
//! row differences, so the integer image reduces to an integer-in-interval
//! test.

use crate::error::{Error, Result};
use crate::iip::{EmptyReason, IipOutcome};
use crate::interval::ClosedInterval;
use crate::matrix::FiniteMatrix;
use crate::rational::Rational;

/// The interval `[min_j (a_2j - a_1j), max_j (a_2j - a_1j)]`; the image of
/// a two-row matrix is exactly `{ y : y_2 - y_1 in [lo, hi] }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoRowInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl TwoRowInterval {
    pub fn as_interval(&self) -> ClosedInterval {
        ClosedInterval::new(self.lo, self.hi)
    }
}

/// Row-difference interval of a two-row matrix.
pub fn difference_interval(a: &FiniteMatrix) -> Result<TwoRowInterval> {
    if a.rows() != 2 {
        return Err(Error::shape(format!(
            "expected exactly 2 rows, got {}",
            a.rows()
        )));
    }
    let mut lo = a.get(1, 0) - a.get(0, 0);
    let mut hi = lo;
    for j in 1..a.cols() {
        let d = a.get(1, j) - a.get(0, j);
        if d < lo {
            lo = d;
        }
        if d > hi {
            hi = d;
        }
    }
    Ok(TwoRowInterval { lo, hi })
}

/// Integer image of a two-row matrix: non-empty iff the difference
/// interval contains an integer. The witness normalizes `y_1 = 0` and
/// picks the smallest feasible difference.
pub fn solve_two_row(a: &FiniteMatrix) -> Result<IipOutcome> {
    let iv = difference_interval(a)?;
    let t = iv.lo.ceil();
    if Rational::from_int(t) > iv.hi {
        return Ok(IipOutcome::empty(EmptyReason::IntervalEmpty));
    }
    let y = vec![Rational::ZERO, Rational::from_int(t)];
    // y is in the image, so the principal solution solves exactly.
    let x = a.residual(&y)?;
    debug_assert_eq!(a.mp_vec(&x)?, y);
    Ok(IipOutcome::Witness { x, y })
}

/// One maximal run of integer image points on the line `y_2 = y_1 + offset`
/// inside a box: `y_1` ranges over `[y1_lo, y1_hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub offset: i128,
    pub y1_lo: i128,
    pub y1_hi: i128,
}

impl Segment {
    /// Number of integer points on the segment (always at least 1).
    pub fn point_count(&self) -> u128 {
        (self.y1_hi - self.y1_lo + 1) as u128
    }
}

/// Integer image points of a two-row matrix inside the box `[L, U]`,
/// described as parallel line segments (`L` is rounded up to integers
/// first). The description is empty iff the constrained set is.
pub fn box_segments(
    a: &FiniteMatrix,
    lower: &[Rational; 2],
    upper: &[Rational; 2],
) -> Result<Vec<Segment>> {
    let iv = difference_interval(a)?;
    let l1 = lower[0].ceil();
    let l2 = lower[1].ceil();
    // Offsets must lie in the difference interval and leave a non-empty
    // y_1 range inside the box.
    let alpha_min = iv.lo.ceil().max(l2 - upper[0].floor());
    let alpha_max = iv.hi.floor().min(upper[1].floor() - l1);
    let mut segments = Vec::new();
    for alpha in alpha_min..=alpha_max {
        let y1_lo = l1.max(l2 - alpha);
        let y1_hi = upper[0]
            .floor()
            .min((upper[1] - Rational::from_int(alpha)).floor());
        if y1_lo <= y1_hi {
            segments.push(Segment {
                offset: alpha,
                y1_lo,
                y1_hi,
            });
        }
    }
    Ok(segments)
}
