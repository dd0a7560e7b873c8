//! Three-row column-typical matrices, solved by reduction to the
//! sign-constrained two-row search, one candidate column at a time.

use crate::error::{Error, Result};
use crate::iip::{classify, EmptyReason, IipOutcome};
use crate::matrix::FiniteMatrix;
use crate::rational::Rational;

use super::nonpositive::{solve_nonpositive, NonpositiveOutcome};

/// Integer image of a column-typical 3 x n matrix in O(n^2).
///
/// After scaling the third row to zero, a witness may be normalized so
/// that its third image component is zero and some `x_k = 0` dominates.
/// For each candidate `k` the remaining coordinates must solve a two-row
/// instance over the other columns with lower bound column `k`; the lower
/// bound rounds up exactly because column typicality keeps the first two
/// entries of column `k` non-integer.
pub fn solve_three_row(a: &FiniteMatrix) -> Result<IipOutcome> {
    if a.rows() != 3 {
        return Err(Error::shape(format!(
            "expected exactly 3 rows, got {}",
            a.rows()
        )));
    }
    if !classify(a).column_typical {
        return Err(Error::precondition(
            "three-row method requires a column-typical matrix",
        ));
    }
    let n = a.cols();
    if n == 1 {
        // A column-typical single column cannot be made integer in all
        // three rows at once.
        return Ok(IipOutcome::empty(EmptyReason::AllColumnsFailed));
    }

    // Scale columns so row 3 is identically zero; witnesses transport back
    // through the same shift.
    let shift: Vec<Rational> = (0..n).map(|j| -a.get(2, j)).collect();
    let normalized = a.shift_columns(&shift)?;
    let top = normalized.drop_row(2)?;

    for k in 0..n {
        let sub = top.drop_column(k)?;
        let lower = [normalized.get(0, k), normalized.get(1, k)];
        if let NonpositiveOutcome::Witness { x: z, y } = solve_nonpositive(&sub, &lower)? {
            let mut x_norm = Vec::with_capacity(n);
            x_norm.extend_from_slice(&z[..k]);
            x_norm.push(Rational::ZERO);
            x_norm.extend_from_slice(&z[k..]);
            let x: Vec<Rational> = x_norm.iter().zip(&shift).map(|(v, s)| *v + *s).collect();
            let y = vec![y[0], y[1], Rational::ZERO];
            debug_assert_eq!(a.mp_vec(&x)?, y);
            return Ok(IipOutcome::Witness { x, y });
        }
    }
    Ok(IipOutcome::empty(EmptyReason::AllColumnsFailed))
}
