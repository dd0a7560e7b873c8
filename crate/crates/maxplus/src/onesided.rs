//! One-sided max-linear systems `A (x) x = b`, bounded variants
//! `x <= d`, and exact ranges of max-linear functionals over one-equation
//! solution sets.

use crate::error::{Error, Result};
use crate::interval::ClosedInterval;
use crate::matrix::{vec_min, FiniteMatrix};
use crate::rational::Rational;

/// The principal solution `xbar = A# (x)' b` together with the tight-row
/// sets `M_j = { i : xbar_j = b_i - a_ij }`.
///
/// `A (x) xbar <= b` always; the system is solvable iff the `M_j` cover
/// every row, in which case `xbar` is the greatest solution. The full
/// solution set is `{ x <= xbar : rows with x_j = xbar_j cover M }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalSolution {
    pub xbar: Vec<Rational>,
    pub mj_sets: Vec<Vec<usize>>,
    pub solvable: bool,
}

impl PrincipalSolution {
    /// Rows not covered by any `M_j`; empty iff solvable.
    pub fn uncovered_rows(&self, m: usize) -> Vec<usize> {
        let mut covered = vec![false; m];
        for mj in &self.mj_sets {
            for &i in mj {
                covered[i] = true;
            }
        }
        covered
            .iter()
            .enumerate()
            .filter_map(|(i, c)| (!c).then_some(i))
            .collect()
    }
}

/// Solves `A (x) x = b` by residuation.
pub fn solve_one_sided(a: &FiniteMatrix, b: &[Rational]) -> Result<PrincipalSolution> {
    let xbar = a.residual(b)?;
    let mj_sets: Vec<Vec<usize>> = (0..a.cols())
        .map(|j| {
            (0..a.rows())
                .filter(|&i| xbar[j] == b[i] - a.get(i, j))
                .collect()
        })
        .collect();
    let solvable = {
        let mut covered = vec![false; a.rows()];
        for mj in &mj_sets {
            for &i in mj {
                covered[i] = true;
            }
        }
        covered.into_iter().all(|c| c)
    };
    debug_assert_eq!(solvable, a.mp_vec(&xbar)? == b);
    Ok(PrincipalSolution {
        xbar,
        mj_sets,
        solvable,
    })
}

/// Solves `A (x) x = b` under the bound `x <= d`: feasible iff
/// `z = d (+)' xbar` solves the system, and then `z` is the greatest
/// bounded solution.
pub fn solve_bounded(
    a: &FiniteMatrix,
    b: &[Rational],
    d: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    if d.len() != a.cols() {
        return Err(Error::shape(format!(
            "bound length {} does not match {} columns",
            d.len(),
            a.cols()
        )));
    }
    let xbar = a.residual(b)?;
    let z = vec_min(d, &xbar);
    Ok((a.mp_vec(&z)? == b).then_some(z))
}

/// Exact range of `f(x) = max_j (c_j + x_j)` over the solutions of the
/// single equation `max_j (a_j + x_j) = b`, optionally bounded by
/// `x <= d`, with witnesses attaining both endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalRange {
    pub interval: ClosedInterval,
    /// A solution attaining the lower endpoint, when feasible.
    pub lo_witness: Option<Vec<Rational>>,
    /// A solution attaining the upper endpoint, when feasible.
    pub hi_witness: Option<Vec<Rational>>,
}

/// Computes the exact closed interval `{ f(x) : a^T (x) x = b, x <= d }`.
///
/// The upper endpoint is attained at the (bound-clipped) principal
/// solution. The lower endpoint is the best value over solutions pinned at
/// one eligible coordinate (`xbar_k <= d_k`), everything else pushed low.
/// The interval is empty iff no coordinate is eligible.
pub fn functional_range(
    a: &[Rational],
    b: Rational,
    c: &[Rational],
    d: Option<&[Rational]>,
) -> Result<FunctionalRange> {
    let n = a.len();
    if n == 0 || c.len() != n || d.is_some_and(|d| d.len() != n) {
        return Err(Error::shape("functional range needs equal-length vectors"));
    }
    let xbar: Vec<Rational> = a.iter().map(|aj| b - *aj).collect();
    let eligible: Vec<usize> = (0..n)
        .filter(|&k| d.is_none_or(|d| xbar[k] <= d[k]))
        .collect();
    if eligible.is_empty() {
        return Ok(FunctionalRange {
            interval: ClosedInterval::Empty,
            lo_witness: None,
            hi_witness: None,
        });
    }

    // Upper endpoint: the clipped principal solution dominates every
    // solution, and isotonicity carries that through f.
    let xhat: Vec<Rational> = match d {
        Some(d) => vec_min(&xbar, d),
        None => xbar.clone(),
    };
    let hi = f_value(c, &xhat);

    // Lower endpoint: pin one eligible coordinate at xbar_k, push the rest
    // below both the bound and the level where they could affect f.
    let mut lo: Option<(Rational, Vec<Rational>)> = None;
    for &k in &eligible {
        let value = c[k] + xbar[k];
        if lo.as_ref().is_none_or(|(best, _)| value < *best) {
            let x: Vec<Rational> = (0..n)
                .map(|j| {
                    if j == k {
                        xbar[k]
                    } else {
                        let mut v = xbar[j].min(value - c[j]);
                        if let Some(d) = d {
                            v = v.min(d[j]);
                        }
                        v
                    }
                })
                .collect();
            lo = Some((value, x));
        }
    }
    let (lo, lo_witness) = lo.unwrap();

    debug_assert_eq!(f_value(a, &xhat), b);
    debug_assert_eq!(f_value(a, &lo_witness), b);
    debug_assert_eq!(f_value(c, &lo_witness), lo);
    Ok(FunctionalRange {
        interval: ClosedInterval::new(lo, hi),
        lo_witness: Some(lo_witness),
        hi_witness: Some(xhat),
    })
}

fn f_value(c: &[Rational], x: &[Rational]) -> Rational {
    let mut best = c[0] + x[0];
    for j in 1..c.len() {
        let v = c[j] + x[j];
        if v > best {
            best = v;
        }
    }
    best
}
