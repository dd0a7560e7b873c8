//! Almost column uniform matrices: all rows but one share a fractional
//! part in every column. Rounding the shared parts away decides the
//! integer image in O(m n^2).

use crate::error::{Error, Result};
use crate::iip::{classify, is_uniform_without_row, EmptyReason, IipOutcome};
use crate::matrix::FiniteMatrix;
use crate::rational::Rational;

/// Everything the almost-column-uniform run computed, exposed for
/// verification: the conditions the chosen column satisfies are stated on
/// these exact values.
#[derive(Clone, Debug)]
pub struct AlmostUniformRun {
    pub outcome: IipOutcome,
    /// Exceptional row index (0-based).
    pub exceptional_row: usize,
    /// Matrix after scaling columns so the exceptional row is zero.
    pub normalized: FiniteMatrix,
    /// Shared fractional part of each column over the non-exceptional
    /// rows of the normalized matrix.
    pub fracs: Vec<Rational>,
    /// The candidate column that produced the witness, if any.
    pub chosen: Option<usize>,
}

/// Integer image of an almost column uniform matrix.
///
/// `forced_exceptional` overrides exceptional-row detection; it must
/// leave a column-uniform remainder. A uniform column short-circuits to a
/// direct witness.
pub fn solve_almost_uniform(
    a: &FiniteMatrix,
    forced_exceptional: Option<usize>,
) -> Result<IipOutcome> {
    solve_almost_uniform_detailed(a, forced_exceptional).map(|run| run.outcome)
}

pub fn solve_almost_uniform_detailed(
    a: &FiniteMatrix,
    forced_exceptional: Option<usize>,
) -> Result<AlmostUniformRun> {
    let m = a.rows();
    let n = a.cols();
    if m < 2 {
        return Err(Error::precondition(
            "almost-column-uniform method requires at least 2 rows",
        ));
    }
    let profile = classify(a);
    let exceptional = match forced_exceptional {
        Some(r) => {
            if r >= m {
                return Err(Error::precondition(format!(
                    "exceptional row {r} out of range for {m} rows"
                )));
            }
            if !is_uniform_without_row(a, r) {
                return Err(Error::precondition(format!(
                    "removing row {r} does not leave a column-uniform matrix"
                )));
            }
            r
        }
        None => profile
            .almost_uniform_row
            .ok_or_else(|| Error::precondition("matrix is not almost column uniform"))?,
    };

    // A uniform column makes the instance trivially solvable.
    if let Some(&j) = profile.uniform_columns.first() {
        let outcome = super::uniform_column_witness(a, j);
        debug_assert!(outcome.verify(a).is_ok());
        return Ok(AlmostUniformRun {
            outcome,
            exceptional_row: exceptional,
            normalized: a.clone(),
            fracs: Vec::new(),
            chosen: Some(j),
        });
    }

    // Scale columns so the exceptional row is zero; this keeps the other
    // rows column-uniform and their shared fractional parts non-zero.
    let shift: Vec<Rational> = (0..n).map(|j| -a.get(exceptional, j)).collect();
    let normalized = a.shift_columns(&shift)?;
    let others: Vec<usize> = (0..m).filter(|i| *i != exceptional).collect();
    let fracs: Vec<Rational> = (0..n)
        .map(|j| normalized.get(others[0], j).frac())
        .collect();
    debug_assert!(others
        .iter()
        .all(|&i| (0..n).all(|j| normalized.get(i, j).frac() == fracs[j])));
    debug_assert!(fracs.iter().all(|f| !f.is_zero()));

    if n == 1 {
        // One non-uniform column cannot be integer in every row.
        return Ok(AlmostUniformRun {
            outcome: IipOutcome::empty(EmptyReason::AllColumnsFailed),
            exceptional_row: exceptional,
            normalized,
            fracs,
            chosen: None,
        });
    }

    // floors[i][j] = floor of the normalized entry: the value row i takes
    // at column j under x_j = -f_j.
    let floors: Vec<Vec<i128>> = others
        .iter()
        .map(|&i| (0..n).map(|j| normalized.get(i, j).floor()).collect())
        .collect();
    let ceils: Vec<Vec<i128>> = others
        .iter()
        .map(|&i| (0..n).map(|j| normalized.get(i, j).ceil()).collect())
        .collect();

    for k in 0..n {
        let feasible = (0..others.len()).all(|r| {
            let mut best = i128::MIN;
            for (j, &fl) in floors[r].iter().enumerate() {
                if j != k && fl > best {
                    best = fl;
                }
            }
            best >= ceils[r][k]
        });
        if feasible {
            let mut x_norm: Vec<Rational> = fracs.iter().map(|f| -*f).collect();
            x_norm[k] = Rational::ZERO;
            let x: Vec<Rational> = x_norm.iter().zip(&shift).map(|(v, s)| *v + *s).collect();
            let y = a.mp_vec(&x)?;
            let outcome = IipOutcome::Witness { x, y };
            debug_assert!(outcome.verify(a).is_ok());
            return Ok(AlmostUniformRun {
                outcome,
                exceptional_row: exceptional,
                normalized,
                fracs,
                chosen: Some(k),
            });
        }
    }
    Ok(AlmostUniformRun {
        outcome: IipOutcome::empty(EmptyReason::AllColumnsFailed),
        exceptional_row: exceptional,
        normalized,
        fracs,
        chosen: None,
    })
}
