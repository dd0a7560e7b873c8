//! Integer image solvers: given a finite matrix `A`, find `x` with
//! `A (x) x` integer or prove that none exists.
//!
//! Each special-case solver is exact and is cross-checked against the
//! brute-force oracle in the test suite. The dispatcher routes an instance
//! to the cheapest applicable method and refuses (with
//! [`Error::UnsupportedInstance`]) when no exact method fits within
//! budget: the general problem is open, and a refusal is not a negative
//! answer.

mod almost_uniform;
mod classify;
mod nonpositive;
mod three_row;
mod two_row;
mod typical;

pub use almost_uniform::{solve_almost_uniform, solve_almost_uniform_detailed, AlmostUniformRun};
pub use classify::{classify, is_uniform_without_row, ColumnProfile};
pub use nonpositive::{solve_nonpositive, NonpositiveOutcome};
pub use three_row::solve_three_row;
pub use two_row::{box_segments, difference_interval, solve_two_row, Segment, TwoRowInterval};
pub use typical::{solve_rect_typical, solve_square_typical};

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{vec_is_integer, FiniteMatrix};
use crate::oracle::{self, OracleBudget};
use crate::rational::Rational;

/// Why a solver proved the integer image empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmptyReason {
    /// Two-row method: no integer in the row-difference interval.
    IntervalEmpty,
    /// Sign-constrained two-row search: every candidate point failed.
    AllCheckpointsFailed,
    /// Per-column sweep (three-row / almost-uniform): every column failed.
    AllColumnsFailed,
    /// Square column-typical matrix with more than one optimal permutation.
    ApNotUnique,
    /// Square column-typical route: the normalized matrix has no integer
    /// eigenvector.
    NoIntegerEigenvector,
    /// Rectangular search: no square column subset has an integer image.
    NoFeasibleSubmatrix,
    /// Brute-force enumeration exhausted the candidate box.
    OracleExhausted,
}

impl fmt::Display for EmptyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EmptyReason::IntervalEmpty => "interval-empty",
            EmptyReason::AllCheckpointsFailed => "all-checkpoints-failed",
            EmptyReason::AllColumnsFailed => "all-k-failed",
            EmptyReason::ApNotUnique => "ap-not-unique",
            EmptyReason::NoIntegerEigenvector => "no-integer-eigenvector",
            EmptyReason::NoFeasibleSubmatrix => "no-feasible-submatrix",
            EmptyReason::OracleExhausted => "oracle-exhausted",
        };
        f.write_str(s)
    }
}

/// Outcome of an integer-image query: a verified witness or a proof of
/// emptiness tagged with the deciding method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IipOutcome {
    Witness { x: Vec<Rational>, y: Vec<Rational> },
    Empty { reason: EmptyReason },
}

impl IipOutcome {
    pub fn empty(reason: EmptyReason) -> IipOutcome {
        IipOutcome::Empty { reason }
    }

    pub(crate) fn empty_oracle() -> IipOutcome {
        IipOutcome::Empty {
            reason: EmptyReason::OracleExhausted,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, IipOutcome::Witness { .. })
    }

    /// Exact soundness check: `A (x) x = y` and `y` integer.
    pub fn verify(&self, a: &FiniteMatrix) -> Result<()> {
        if let IipOutcome::Witness { x, y } = self {
            if a.mp_vec(x)? != *y {
                return Err(Error::precondition("witness does not reproduce y"));
            }
            if !vec_is_integer(y) {
                return Err(Error::precondition("witness image is not integer"));
            }
        }
        Ok(())
    }
}

/// Which method decided an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    UniformColumn,
    SingleRow,
    TwoRow,
    ThreeRowTypical,
    AlmostUniform,
    SquareTypical,
    SubmatrixSearch,
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algorithm::UniformColumn => "uniform-column",
            Algorithm::SingleRow => "single-row",
            Algorithm::TwoRow => "two-row",
            Algorithm::ThreeRowTypical => "three-row-typical",
            Algorithm::AlmostUniform => "almost-uniform",
            Algorithm::SquareTypical => "square-typical",
            Algorithm::SubmatrixSearch => "submatrix-search",
            Algorithm::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

/// Dispatcher options.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Budget shared by the oracle fallback and the rectangular
    /// submatrix search.
    pub budget: OracleBudget,
    /// Forces the exceptional row (0-based) of the almost-column-uniform
    /// route instead of auto-detection.
    pub exceptional_row: Option<usize>,
}

/// A dispatched answer: the outcome plus the method that produced it.
#[derive(Clone, Debug)]
pub struct Solved {
    pub outcome: IipOutcome,
    pub algorithm: Algorithm,
}

/// Unit cost of one square subproblem in the rectangular search, used to
/// compare `C(n, m) * m^3` against the budget.
fn subset_search_cost(m: usize, n: usize) -> u128 {
    let mut binom: u128 = 1;
    for i in 0..m {
        binom = binom.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    binom.saturating_mul((m as u128).pow(3))
}

/// Routes an instance to the cheapest exact method.
///
/// Order: uniform-column shortcut, single row, two rows, three-row column
/// typical, almost column uniform, square column typical, rectangular
/// column typical within budget, oracle within budget, and otherwise an
/// `UnsupportedInstance` refusal.
pub fn solve(a: &FiniteMatrix, opts: &SolveOptions) -> Result<Solved> {
    let profile = classify(a);
    let m = a.rows();
    let n = a.cols();

    if let Some(j) = profile.uniform_columns.first() {
        let outcome = uniform_column_witness(a, *j);
        debug_assert!(outcome.verify(a).is_ok());
        return Ok(Solved {
            outcome,
            algorithm: Algorithm::UniformColumn,
        });
    }
    if m == 1 {
        // Unreachable after the uniform-column shortcut (every column of a
        // single-row matrix is uniform), kept for clarity.
        let outcome = uniform_column_witness(a, 0);
        return Ok(Solved {
            outcome,
            algorithm: Algorithm::SingleRow,
        });
    }
    if m == 2 {
        return Ok(Solved {
            outcome: solve_two_row(a)?,
            algorithm: Algorithm::TwoRow,
        });
    }
    if opts.exceptional_row.is_some() {
        // Explicit override: force the almost-column-uniform route.
        let outcome = solve_almost_uniform(a, opts.exceptional_row)?;
        return Ok(Solved {
            outcome,
            algorithm: Algorithm::AlmostUniform,
        });
    }
    if m == 3 && profile.column_typical {
        return Ok(Solved {
            outcome: solve_three_row(a)?,
            algorithm: Algorithm::ThreeRowTypical,
        });
    }
    if profile.almost_uniform_row.is_some() {
        let outcome = solve_almost_uniform(a, None)?;
        return Ok(Solved {
            outcome,
            algorithm: Algorithm::AlmostUniform,
        });
    }
    if profile.column_typical {
        if m == n {
            return Ok(Solved {
                outcome: solve_square_typical(a)?,
                algorithm: Algorithm::SquareTypical,
            });
        }
        if m > n {
            // A column-typical matrix with more rows than columns has no
            // integer image; the rectangular search reports it directly.
            return Ok(Solved {
                outcome: solve_rect_typical(a)?,
                algorithm: Algorithm::SubmatrixSearch,
            });
        }
        if subset_search_cost(m, n) <= opts.budget.max_candidates {
            return Ok(Solved {
                outcome: solve_rect_typical(a)?,
                algorithm: Algorithm::SubmatrixSearch,
            });
        }
    }

    let box_ = oracle::image_box(a);
    if oracle::box_size(&box_) <= opts.budget.max_candidates {
        return Ok(Solved {
            outcome: oracle::oracle_iip(a, &opts.budget)?,
            algorithm: Algorithm::Oracle,
        });
    }
    Err(Error::UnsupportedInstance)
}

/// Witness construction when column `j` is uniform: set `x_j = -fr` so the
/// column becomes integer, and push every other component low enough that
/// column `j` alone attains every row maximum.
pub(crate) fn uniform_column_witness(a: &FiniteMatrix, j: usize) -> IipOutcome {
    let n = a.cols();
    let fr = a.get(0, j).frac();
    let margin = a.max_entry() - a.min_entry() + Rational::ONE;
    let mut x = vec![-fr - margin; n];
    x[j] = -fr;
    let y: Vec<Rational> = (0..a.rows()).map(|i| a.get(i, j) - fr).collect();
    debug_assert!(vec_is_integer(&y));
    IipOutcome::Witness { x, y }
}
