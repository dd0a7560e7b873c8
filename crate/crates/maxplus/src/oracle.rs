//! Brute-force ground truth on desk-scale instances.
//!
//! Every answer here is exact: the oracles enumerate a finite candidate
//! set that provably contains a witness whenever one exists, and verify
//! each candidate with the principal-solution test. They exist for
//! correctness checking, never as a production path.

use crate::error::{Error, Result};
use crate::iip::IipOutcome;
use crate::matrix::{vec_is_integer, FiniteMatrix, Matrix};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::spectral::Definiteness;

/// Cap on the number of enumerated candidates. Oracles abort with a
/// budget error instead of running unbounded.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_candidates: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_candidates: 10_000_000,
        }
    }
}

impl OracleBudget {
    pub fn new(max_candidates: u128) -> OracleBudget {
        OracleBudget { max_candidates }
    }
}

/// Enumeration box for integer images normalized to `y_1 = 0`: for each
/// row `i >= 2`, any image point satisfies
/// `y_i - y_1 in [min_j (a_ij - a_1j), max_j (a_ij - a_1j)]`.
pub fn image_box(a: &FiniteMatrix) -> Vec<(i128, i128)> {
    let m = a.rows();
    let n = a.cols();
    let mut box_ = Vec::with_capacity(m - 1);
    for i in 1..m {
        let mut lo = a.get(i, 0) - a.get(0, 0);
        let mut hi = lo;
        for j in 1..n {
            let d = a.get(i, j) - a.get(0, j);
            if d < lo {
                lo = d;
            }
            if d > hi {
                hi = d;
            }
        }
        box_.push((lo.ceil(), hi.floor()));
    }
    box_
}

/// Number of candidates the box contains (0 when any dimension is empty).
pub fn box_size(box_: &[(i128, i128)]) -> u128 {
    let mut total: u128 = 1;
    for &(lo, hi) in box_ {
        if hi < lo {
            return 0;
        }
        let width = (hi - lo + 1) as u128;
        total = total.saturating_mul(width);
    }
    total
}

/// Exhaustive integer-image decision: enumerates integer candidates
/// `y = (0, y_2, ..., y_m)` over [`image_box`] in lexicographic order from
/// the lower corner and accepts the first `y` with
/// `A (x) residual(A, y) = y`.
pub fn oracle_iip(a: &FiniteMatrix, budget: &OracleBudget) -> Result<IipOutcome> {
    let box_ = image_box(a);
    let size = box_size(&box_);
    if size > budget.max_candidates {
        return Err(Error::Budget {
            needed: size,
            budget: budget.max_candidates,
        });
    }
    if size == 0 {
        return Ok(IipOutcome::empty_oracle());
    }

    let mut y: Vec<Rational> = Vec::with_capacity(a.rows());
    y.push(Rational::ZERO);
    for &(lo, _) in &box_ {
        y.push(Rational::from_int(lo));
    }
    loop {
        let xbar = a.residual(&y)?;
        if a.mp_vec(&xbar)? == y {
            return Ok(IipOutcome::Witness { x: xbar, y });
        }
        // Odometer step through the box.
        let mut dim = box_.len();
        loop {
            if dim == 0 {
                return Ok(IipOutcome::empty_oracle());
            }
            dim -= 1;
            let (lo, hi) = box_[dim];
            let cur = y[dim + 1].numer();
            if cur < hi {
                y[dim + 1] = Rational::from_int(cur + 1);
                break;
            }
            y[dim + 1] = Rational::from_int(lo);
        }
    }
}

/// Exhaustive integer-eigenvector search for a strongly definite matrix:
/// candidates are `x = (0, x_2, ..., x_n)` with
/// `x_i in [ceil(a_i1), floor(-a_1i)]`, tested by `A (x) x = x`.
pub fn oracle_integer_eigen(
    a: &FiniteMatrix,
    budget: &OracleBudget,
) -> Result<Option<Vec<Rational>>> {
    if crate::spectral::definiteness(&Matrix::from(a.clone()))? != Definiteness::StronglyDefinite {
        return Err(Error::precondition(
            "integer eigenvector oracle requires a strongly definite matrix",
        ));
    }
    let n = a.rows();
    let mut box_ = Vec::with_capacity(n - 1);
    for i in 1..n {
        // (A x)_i = x_i forces x_i >= a_i1 + x_1 and x_1 >= a_1i + x_i.
        box_.push((a.get(i, 0).ceil(), (-a.get(0, i)).floor()));
    }
    let size = box_size(&box_);
    if size > budget.max_candidates {
        return Err(Error::Budget {
            needed: size,
            budget: budget.max_candidates,
        });
    }
    if size == 0 {
        return Ok(None);
    }

    let mut x: Vec<Rational> = Vec::with_capacity(n);
    x.push(Rational::ZERO);
    for &(lo, _) in &box_ {
        x.push(Rational::from_int(lo));
    }
    loop {
        if a.mp_vec(&x)? == x {
            debug_assert!(vec_is_integer(&x));
            return Ok(Some(x));
        }
        let mut dim = box_.len();
        loop {
            if dim == 0 {
                return Ok(None);
            }
            dim -= 1;
            let (lo, hi) = box_[dim];
            let cur = x[dim + 1].numer();
            if cur < hi {
                x[dim + 1] = Rational::from_int(cur + 1);
                break;
            }
            x[dim + 1] = Rational::from_int(lo);
        }
    }
}

const MAX_ENUM_DIM: usize = 7;

/// Exhaustive maximum cycle mean over all elementary cycles; `-inf` for an
/// acyclic digraph. Sizes above 7 are rejected.
pub fn oracle_cycle_mean(a: &Matrix) -> Result<Scalar> {
    if !a.is_square() {
        return Err(Error::shape("cycle mean requires a square matrix"));
    }
    let n = a.rows();
    if n > MAX_ENUM_DIM {
        return Err(Error::Budget {
            needed: u128::MAX,
            budget: 0,
        });
    }
    let mut best: Option<Rational> = None;
    // Enumerate simple cycles as paths that start and end at their
    // smallest vertex.
    let mut path: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for start in 0..n {
        path.push(start);
        used[start] = true;
        cycles_from(a, start, &mut path, &mut used, Rational::ZERO, &mut best);
        used[start] = false;
        path.pop();
    }
    Ok(match best {
        None => Scalar::NEG_INF,
        Some(l) => Scalar::Fin(l),
    })
}

fn cycles_from(
    a: &Matrix,
    start: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    weight: Rational,
    best: &mut Option<Rational>,
) {
    let n = a.rows();
    let last = *path.last().unwrap();
    if let Some(w) = a.get(last, start).as_finite() {
        let total = weight + w;
        let mean = total / Rational::from_int(path.len() as i128);
        if best.is_none_or(|b| mean > b) {
            *best = Some(mean);
        }
    }
    for next in (start + 1)..n {
        if used[next] {
            continue;
        }
        if let Some(w) = a.get(last, next).as_finite() {
            used[next] = true;
            path.push(next);
            cycles_from(a, start, path, used, weight + w, best);
            path.pop();
            used[next] = false;
        }
    }
}

/// Exhaustive max-algebraic permanent: the optimal assignment value and
/// the number of optimal permutations. Sizes above 7 are rejected.
pub fn oracle_permanent(a: &FiniteMatrix) -> Result<(Rational, u64)> {
    if !a.is_square() {
        return Err(Error::shape("permanent requires a square matrix"));
    }
    let n = a.rows();
    if n > MAX_ENUM_DIM {
        return Err(Error::Budget {
            needed: u128::MAX,
            budget: 0,
        });
    }
    let mut cols: Vec<usize> = (0..n).collect();
    let mut best: Option<Rational> = None;
    let mut count = 0u64;
    permute(a, 0, &mut cols, Rational::ZERO, &mut best, &mut count);
    Ok((best.unwrap(), count))
}

fn permute(
    a: &FiniteMatrix,
    row: usize,
    cols: &mut Vec<usize>,
    acc: Rational,
    best: &mut Option<Rational>,
    count: &mut u64,
) {
    let n = a.rows();
    if row == n {
        match best {
            Some(b) if acc < *b => {}
            Some(b) if acc == *b => *count += 1,
            _ => {
                *best = Some(acc);
                *count = 1;
            }
        }
        return;
    }
    for idx in row..n {
        cols.swap(row, idx);
        let w = acc + a.get(row, cols[row]);
        permute(a, row + 1, cols, w, best, count);
        cols.swap(row, idx);
    }
}
