//! Column-typical matrices: square instances reduce to the integer
//! eigenproblem of the strongly definite normal form; rectangular
//! instances reduce to a search over square column subsets.

use crate::assignment::{normalizing_genperm, permanent_and_ap};
use crate::error::{Error, Result};
use crate::iip::{classify, EmptyReason, IipOutcome};
use crate::matrix::FiniteMatrix;
use crate::rational::Rational;
use crate::spectral::integer_eigen;

/// Integer image of a square column-typical matrix.
///
/// Empty when the optimal permutation is not unique; otherwise the image
/// is the set of integer eigenvectors of the strongly definite `AQ`, and
/// any such eigenvector `v` pulls back to the witness `x = Q (x) v`.
pub fn solve_square_typical(a: &FiniteMatrix) -> Result<IipOutcome> {
    if !a.is_square() {
        return Err(Error::shape("square method requires a square matrix"));
    }
    if !classify(a).column_typical {
        return Err(Error::precondition(
            "square method requires a column-typical matrix",
        ));
    }
    let perm = permanent_and_ap(a)?;
    if !perm.unique {
        return Ok(IipOutcome::empty(EmptyReason::ApNotUnique));
    }
    let q = normalizing_genperm(a, &perm.optimal_perm)?;
    let aq = q.apply_right(a)?;
    match integer_eigen(&aq)? {
        None => Ok(IipOutcome::empty(EmptyReason::NoIntegerEigenvector)),
        Some(witness) => {
            let y = witness.sample;
            let x = q.apply_vec(&y)?;
            debug_assert_eq!(a.mp_vec(&x)?, y);
            Ok(IipOutcome::Witness { x, y })
        }
    }
}

/// Integer image of a column-typical m x n matrix with fixed m: non-empty
/// iff some m-column square submatrix has one. Subsets are scanned in
/// lexicographic order; a submatrix witness extends to the full matrix by
/// pushing the unused coordinates low enough to never reach a row maximum.
pub fn solve_rect_typical(a: &FiniteMatrix) -> Result<IipOutcome> {
    if !classify(a).column_typical {
        return Err(Error::precondition(
            "rectangular method requires a column-typical matrix",
        ));
    }
    let m = a.rows();
    let n = a.cols();
    if m > n {
        return Ok(IipOutcome::empty(EmptyReason::NoFeasibleSubmatrix));
    }
    let margin = a.max_entry() - a.min_entry() + Rational::ONE;

    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        let sub = a.select_columns(&subset)?;
        if let IipOutcome::Witness { x: xs, y } = solve_square_typical(&sub)? {
            let low = xs.iter().fold(xs[0], |acc, v| acc.min(*v)) - margin;
            let mut x = vec![low; n];
            for (pos, &j) in subset.iter().enumerate() {
                x[j] = xs[pos];
            }
            debug_assert_eq!(a.mp_vec(&x)?, y);
            return Ok(IipOutcome::Witness { x, y });
        }
        if !next_subset(&mut subset, n) {
            return Ok(IipOutcome::empty(EmptyReason::NoFeasibleSubmatrix));
        }
    }
}

/// Advances an ascending index subset lexicographically; false at the end.
fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let m = subset.len();
    let mut i = m;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (m - i) {
            subset[i] += 1;
            for k in i + 1..m {
                subset[k] = subset[k - 1] + 1;
            }
            return true;
        }
    }
    false
}
