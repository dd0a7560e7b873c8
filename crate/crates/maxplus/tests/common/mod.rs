//! Shared instance generators for the integration suites. Everything is
//! seeded: failures reproduce deterministically.

#![allow(dead_code)]

use maxplus::matrix::{FiniteMatrix, Matrix};
use maxplus::scalar::Scalar;
use maxplus::spectral;
use maxplus::Rational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random rational with numerator in `[-max_num, max_num]` and
/// denominator in `[1, max_den]`.
pub fn rq(rng: &mut ChaCha8Rng, max_num: i128, max_den: i128) -> Rational {
    Rational::new(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

/// The stock entry distribution: `|p| <= 40`, `q <= 10`.
pub fn rq_stock(rng: &mut ChaCha8Rng) -> Rational {
    rq(rng, 40, 10)
}

/// Entries with small magnitude (values in roughly [-5, 5]) but varied
/// denominators, keeping enumeration boxes narrow.
pub fn rq_small(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.gen_range(1..=10i128);
    Rational::new(rng.gen_range(-5 * den..=5 * den).clamp(-40, 40), den)
}

pub fn finite_matrix(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
    gen: impl Fn(&mut ChaCha8Rng) -> Rational,
) -> FiniteMatrix {
    FiniteMatrix::from_rows((0..m).map(|_| (0..n).map(|_| gen(rng)).collect()).collect()).unwrap()
}

pub fn finite_vector(
    rng: &mut ChaCha8Rng,
    n: usize,
    gen: impl Fn(&mut ChaCha8Rng) -> Rational,
) -> Vec<Rational> {
    (0..n).map(|_| gen(rng)).collect()
}

/// Square matrix with `-inf` entries at the given density (percent).
pub fn sparse_matrix(rng: &mut ChaCha8Rng, n: usize, eps_percent: u32) -> Matrix {
    Matrix::from_rows(
        (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_ratio(eps_percent, 100) {
                            Scalar::NegInf
                        } else {
                            Scalar::Fin(rq_small(rng))
                        }
                    })
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

/// Square matrix with non-positive maximum cycle mean (possibly acyclic).
pub fn nonpositive_mean_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let a = sparse_matrix(rng, n, 35);
    let mcm = spectral::max_cycle_mean(&a).unwrap();
    match mcm.lambda.as_finite() {
        None => a,
        Some(l) => {
            // Shift so the mean becomes zero, sometimes strictly negative.
            let extra = if rng.gen_bool(0.5) {
                Rational::ZERO
            } else {
                Rational::ONE
            };
            a.scale(-l - extra)
        }
    }
}

/// Finite strongly definite matrix: normalize a random matrix to zero
/// cycle mean, then pin the diagonal at zero.
pub fn strongly_definite_matrix(rng: &mut ChaCha8Rng, n: usize) -> FiniteMatrix {
    let c = finite_matrix(rng, n, n, rq_small);
    let lambda = spectral::max_cycle_mean(&Matrix::from(c.clone()))
        .unwrap()
        .lambda
        .as_finite()
        .unwrap();
    let shifted = c.scale(-lambda);
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::ZERO
                    } else {
                        shifted.get(i, j)
                    }
                })
                .collect()
        })
        .collect();
    FiniteMatrix::from_rows(rows).unwrap()
}

/// Matrix whose every column has pairwise distinct fractional parts.
pub fn column_typical_matrix(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
    gen: impl Fn(&mut ChaCha8Rng) -> Rational,
) -> FiniteMatrix {
    let mut rows = vec![Vec::with_capacity(n); m];
    for _ in 0..n {
        loop {
            let col: Vec<Rational> = (0..m).map(|_| gen(rng)).collect();
            let mut fr: Vec<Rational> = col.iter().map(|v| v.frac()).collect();
            fr.sort();
            fr.dedup();
            if fr.len() == m {
                for (i, v) in col.into_iter().enumerate() {
                    rows[i].push(v);
                }
                break;
            }
        }
    }
    FiniteMatrix::from_rows(rows).unwrap()
}

/// Almost column uniform matrix without uniform columns: one exceptional
/// row at a random position.
pub fn acu_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> FiniteMatrix {
    let exceptional = rng.gen_range(0..m);
    let mut rows = vec![vec![Rational::ZERO; n]; m];
    for j in 0..n {
        let den = rng.gen_range(2..=8i128);
        let fr = Rational::new(rng.gen_range(0..den), den);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != exceptional {
                row[j] = Rational::from_int(rng.gen_range(-4..=4)) + fr;
            }
        }
        loop {
            let v = rq_small(rng);
            if v.frac() != fr {
                rows[exceptional][j] = v;
                break;
            }
        }
    }
    FiniteMatrix::from_rows(rows).unwrap()
}
