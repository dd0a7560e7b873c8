//! Sign-constrained two-row search: find `x <= 0` with `A (x) x` integer
//! and `A (x) x >= L`, in time linear in the number of columns.
//!
//! Geometry: with `U = A (x) 0`, every feasible image point lies in the
//! box `[ceil(L), U]`, every integer image point can be diagonally
//! projected onto the left or bottom side of that box, and on each side
//! the feasible points form a closed interval. It therefore suffices to
//! test the integer candidates closest to the diagonal projection of `U`;
//! each test is one principal-solution check.

use crate::error::{Error, Result};
use crate::matrix::{vec_le, FiniteMatrix};
use crate::rational::Rational;

use super::two_row::difference_interval;

/// Outcome of the sign-constrained search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonpositiveOutcome {
    Witness {
        x: Vec<Rational>,
        y: [Rational; 2],
    },
    /// `ceil(L) <= A (x) 0` fails: the candidate box is empty.
    BoxEmpty,
    /// Every candidate point failed the membership test.
    AllCheckpointsFailed,
}

impl NonpositiveOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, NonpositiveOutcome::Witness { .. })
    }
}

/// Solves `A (x) x in Z^2`, `x <= 0`, `A (x) x >= lower` for a two-row
/// matrix. `lower` is rounded up to integers first, which is exact:
/// the image is integer so the bound can only bind at integers.
pub fn solve_nonpositive(a: &FiniteMatrix, lower: &[Rational; 2]) -> Result<NonpositiveOutcome> {
    if a.rows() != 2 {
        return Err(Error::shape(format!(
            "expected exactly 2 rows, got {}",
            a.rows()
        )));
    }
    let l = [lower[0].ceil_rational(), lower[1].ceil_rational()];
    let u = row_maxima(a);
    if !(l[0] <= u[0] && l[1] <= u[1]) {
        return Ok(NonpositiveOutcome::BoxEmpty);
    }

    // Mirror coordinates so that the diagonal projection of U lands on the
    // left side of the box; the search is symmetric under swapping rows.
    if u[1] - u[0] >= l[1] - l[0] {
        solve_left_anchored(a, &l, &u)
    } else {
        let mirrored = swap_rows(a);
        let outcome = solve_left_anchored(&mirrored, &[l[1], l[0]], &[u[1], u[0]])?;
        Ok(match outcome {
            NonpositiveOutcome::Witness { x, y } => {
                NonpositiveOutcome::Witness { x, y: [y[1], y[0]] }
            }
            other => other,
        })
    }
}

/// Case `u_2 - u_1 >= l_2 - l_1`: the projection of `U` lies on the left
/// side. Candidates sit at integer offsets `alpha = y_2 - y_1` nearest the
/// projection offset `u_2 - u_1`.
fn solve_left_anchored(
    a: &FiniteMatrix,
    l: &[Rational; 2],
    u: &[Rational; 2],
) -> Result<NonpositiveOutcome> {
    let iv = difference_interval(a)?;
    let d = u[1] - u[0];
    // U is itself an image point, so d lies in [iv.lo, iv.hi]; the outer
    // branches only fire if a caller ever supplies a looser box.
    let mut checkpoints: Vec<[Rational; 2]> = Vec::with_capacity(2);
    if d < iv.lo {
        checkpoints.push([l[0], l[0] + iv.lo.ceil_rational()]);
    } else if d > iv.hi {
        let c2 = [l[0], l[0] + iv.hi.floor_rational()];
        if c2[1] < l[1] {
            // The left-side candidate falls below the box: move it to the
            // bottom side.
            checkpoints.push([l[1] - iv.hi.floor_rational(), l[1]]);
        } else {
            checkpoints.push(c2);
        }
    } else {
        let c3 = [l[0], l[0] + d.floor_rational()];
        let c4 = [l[0], l[0] + d.ceil_rational()];
        checkpoints.push(c3);
        if c4 != c3 {
            checkpoints.push(c4);
        }
    }

    for y in checkpoints {
        if !(vec_le(l, &y) && vec_le(&y, u)) {
            continue;
        }
        if let Some(x) = membership(a, &y)? {
            return Ok(NonpositiveOutcome::Witness { x, y });
        }
    }
    Ok(NonpositiveOutcome::AllCheckpointsFailed)
}

/// Tests whether `y` is reachable with `x <= 0`: clamp the principal
/// solution at zero and check the product reproduces `y`.
fn membership(a: &FiniteMatrix, y: &[Rational; 2]) -> Result<Option<Vec<Rational>>> {
    let xbar = a.residual(y)?;
    let x: Vec<Rational> = xbar.into_iter().map(|v| v.min(Rational::ZERO)).collect();
    let ax = a.mp_vec(&x)?;
    Ok((ax == y.as_slice()).then_some(x))
}

fn row_maxima(a: &FiniteMatrix) -> [Rational; 2] {
    let max_of = |i: usize| {
        let row = a.row(i);
        let mut best = row[0];
        for v in &row[1..] {
            if *v > best {
                best = *v;
            }
        }
        best
    };
    [max_of(0), max_of(1)]
}

fn swap_rows(a: &FiniteMatrix) -> FiniteMatrix {
    FiniteMatrix::from_rows(vec![a.row(1).to_vec(), a.row(0).to_vec()]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_is_integer;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    fn fm(rows: Vec<Vec<Rational>>) -> FiniteMatrix {
        FiniteMatrix::from_rows(rows).unwrap()
    }

    /// Brute check over the candidate box, used to pin the fixtures.
    fn brute(a: &FiniteMatrix, lower: &[Rational; 2]) -> Option<[Rational; 2]> {
        let l = [lower[0].ceil(), lower[1].ceil()];
        let u = row_maxima(a);
        let mut y1 = l[0];
        while Rational::from_int(y1) <= u[0] {
            let mut y2 = l[1];
            while Rational::from_int(y2) <= u[1] {
                let y = [Rational::from_int(y1), Rational::from_int(y2)];
                if membership(a, &y).unwrap().is_some() {
                    return Some(y);
                }
                y2 += 1;
            }
            y1 += 1;
        }
        None
    }

    #[test]
    fn worked_positive_example() {
        let a = fm(vec![vec![r(1, 2), r(6, 5)], vec![r(3, 2), r(11, 5)]]);
        let lower = [Rational::ZERO, Rational::ONE];
        match solve_nonpositive(&a, &lower).unwrap() {
            NonpositiveOutcome::Witness { x, y } => {
                assert_eq!(y, [r(0, 1), r(1, 1)]);
                assert_eq!(x, vec![r(-1, 2), r(-6, 5)]);
                assert!(x.iter().all(|v| *v <= Rational::ZERO));
                assert!(vec_is_integer(&y));
                assert_eq!(a.mp_vec(&x).unwrap(), y.to_vec());
            }
            other => panic!("expected witness, got {other:?}"),
        }
        assert!(brute(&a, &lower).is_some());
    }

    #[test]
    fn single_column_negative_example() {
        let a = fm(vec![vec![r(6, 5)], vec![r(27, 10)]]);
        let lower = [Rational::ONE, r(2, 1)];
        assert_eq!(
            solve_nonpositive(&a, &lower).unwrap(),
            NonpositiveOutcome::AllCheckpointsFailed
        );
        assert!(brute(&a, &lower).is_none());
    }

    #[test]
    fn empty_box() {
        let a = fm(vec![vec![r(1, 2)], vec![r(1, 2)]]);
        let lower = [r(10, 1), r(10, 1)];
        assert_eq!(
            solve_nonpositive(&a, &lower).unwrap(),
            NonpositiveOutcome::BoxEmpty
        );
    }

    #[test]
    fn mirrored_case() {
        // u_2 - u_1 < l_2 - l_1 forces the mirrored branch.
        let a = fm(vec![vec![r(11, 5), r(7, 5)], vec![r(12, 5), r(1, 5)]]);
        let lower = [Rational::ZERO, r(2, 1)];
        let out = solve_nonpositive(&a, &lower).unwrap();
        if let NonpositiveOutcome::Witness { x, y } = &out {
            assert!(x.iter().all(|v| *v <= Rational::ZERO));
            assert!(y[0] >= lower[0] && y[1] >= lower[1]);
            assert_eq!(a.mp_vec(x).unwrap(), y.to_vec());
        }
        assert_eq!(out.is_witness(), brute(&a, &lower).is_some());
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(52_716);
        for _ in 0..400 {
            let n = rng.gen_range(1..=4);
            let rows: Vec<Vec<Rational>> = (0..2)
                .map(|_| {
                    (0..n)
                        .map(|_| Rational::new(rng.gen_range(-30..=30), rng.gen_range(1..=6)))
                        .collect()
                })
                .collect();
            let a = fm(rows);
            let lower = [
                Rational::new(rng.gen_range(-8..=4), 1),
                Rational::new(rng.gen_range(-8..=4), 1),
            ];
            let ours = solve_nonpositive(&a, &lower).unwrap();
            let truth = brute(&a, &lower);
            assert_eq!(
                ours.is_witness(),
                truth.is_some(),
                "disagreement on {a:?} with lower {lower:?}"
            );
            if let NonpositiveOutcome::Witness { x, y } = ours {
                assert!(x.iter().all(|v| *v <= Rational::ZERO));
                assert!(vec_le(&lower, &y));
                assert!(vec_is_integer(&y));
                assert_eq!(a.mp_vec(&x).unwrap(), y.to_vec());
            }
        }
    }
}
