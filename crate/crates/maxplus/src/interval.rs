//! Closed rational intervals with integer-intersection queries.

use crate::rational::Rational;

/// A closed interval `[lo, hi]` of rationals, possibly empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedInterval {
    Empty,
    NonEmpty { lo: Rational, hi: Rational },
}

impl ClosedInterval {
    /// Builds `[lo, hi]`, collapsing to `Empty` when `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> ClosedInterval {
        if lo <= hi {
            ClosedInterval::NonEmpty { lo, hi }
        } else {
            ClosedInterval::Empty
        }
    }

    pub fn point(v: Rational) -> ClosedInterval {
        ClosedInterval::NonEmpty { lo: v, hi: v }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ClosedInterval::Empty)
    }

    pub fn bounds(&self) -> Option<(Rational, Rational)> {
        match self {
            ClosedInterval::Empty => None,
            ClosedInterval::NonEmpty { lo, hi } => Some((*lo, *hi)),
        }
    }

    pub fn contains(&self, v: Rational) -> bool {
        match self {
            ClosedInterval::Empty => false,
            ClosedInterval::NonEmpty { lo, hi } => *lo <= v && v <= *hi,
        }
    }

    /// True when the interval contains at least one integer.
    pub fn contains_integer(&self) -> bool {
        self.first_integer().is_some()
    }

    /// The smallest integer in the interval, if any.
    pub fn first_integer(&self) -> Option<i128> {
        match self {
            ClosedInterval::Empty => None,
            ClosedInterval::NonEmpty { lo, hi } => {
                let t = lo.ceil();
                if Rational::from_int(t) <= *hi {
                    Some(t)
                } else {
                    None
                }
            }
        }
    }

    /// The largest integer in the interval, if any.
    pub fn last_integer(&self) -> Option<i128> {
        match self {
            ClosedInterval::Empty => None,
            ClosedInterval::NonEmpty { lo, hi } => {
                let t = hi.floor();
                if Rational::from_int(t) >= *lo {
                    Some(t)
                } else {
                    None
                }
            }
        }
    }

    pub fn intersect(&self, other: &ClosedInterval) -> ClosedInterval {
        match (self.bounds(), other.bounds()) {
            (Some((a, b)), Some((c, d))) => ClosedInterval::new(a.max(c), b.min(d)),
            _ => ClosedInterval::Empty,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn integer_queries() {
        let iv = ClosedInterval::new(r(-1, 5), r(7, 10));
        assert_eq!(iv.first_integer(), Some(0));
        assert_eq!(iv.last_integer(), Some(0));

        let empty_of_ints = ClosedInterval::new(r(3, 10), r(3, 10));
        assert!(!empty_of_ints.is_empty());
        assert!(!empty_of_ints.contains_integer());

        assert!(ClosedInterval::new(r(1, 1), r(0, 1)).is_empty());
        assert_eq!(ClosedInterval::point(r(4, 1)).first_integer(), Some(4));
    }

    #[test]
    fn intersections() {
        let a = ClosedInterval::new(r(0, 1), r(2, 1));
        let b = ClosedInterval::new(r(1, 1), r(3, 1));
        assert_eq!(a.intersect(&b), ClosedInterval::new(r(1, 1), r(2, 1)));
        assert!(a.intersect(&ClosedInterval::Empty).is_empty());
    }
}
