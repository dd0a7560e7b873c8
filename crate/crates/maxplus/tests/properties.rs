//! Algebraic invariants of the kernel and the solver-side identities that
//! the special-case methods rely on.

mod common;

use common::*;

use maxplus::iip::{self, solve_nonpositive, IipOutcome, NonpositiveOutcome, SolveOptions};
use maxplus::io;
use maxplus::matrix::{vec_is_integer, vec_le, FiniteMatrix, GenPermMatrix, Matrix};
use maxplus::onesided;
use maxplus::oracle;
use maxplus::scalar::Scalar;
use maxplus::Rational;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-200i128..=200, 1i128..=24).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::NegInf),
        9 => arb_rational().prop_map(Scalar::Fin),
    ]
}

proptest! {
    #[test]
    fn semiring_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        // Commutativity and associativity of both operations.
        prop_assert_eq!(a.plus(b), b.plus(a));
        prop_assert_eq!(a.times(b), b.times(a));
        prop_assert_eq!(a.plus(b).plus(c), a.plus(b.plus(c)));
        prop_assert_eq!(a.times(b).times(c), a.times(b.times(c)));
        // Distributivity.
        prop_assert_eq!(a.times(b.plus(c)), a.times(b).plus(a.times(c)));
        // Neutral and absorbing bottom, neutral zero.
        prop_assert_eq!(Scalar::NEG_INF.plus(a), a);
        prop_assert_eq!(Scalar::NEG_INF.times(a), Scalar::NEG_INF);
        prop_assert_eq!(Scalar::from_int(0).times(a), a);
    }

    #[test]
    fn fractional_decomposition_roundtrip(v in proptest::collection::vec(arb_rational(), 1..12)) {
        let a = FiniteMatrix::new(1, v.len(), v).unwrap();
        let (floor, frac, ceil) = a.frac_decompose();
        for j in 0..a.cols() {
            let x = a.get(0, j);
            prop_assert_eq!(floor.get(0, j) + frac.get(0, j), x);
            prop_assert!(Rational::ZERO <= frac.get(0, j));
            prop_assert!(frac.get(0, j) < Rational::ONE);
            prop_assert_eq!(ceil.get(0, j), -((-x).floor_rational()));
        }
    }

    #[test]
    fn fractional_sum_lemma(a in arb_rational(), b in arb_rational()) {
        // fr(a+b) = fr(a) + fr(b), minus one when the sum reaches one.
        let sum = a.frac() + b.frac();
        let expect = if sum < Rational::ONE { sum } else { sum - Rational::ONE };
        prop_assert_eq!((a + b).frac(), expect);
    }

    #[test]
    fn shared_fraction_floor_lemma(a in arb_rational(), shift in -40i128..=40, y in arb_rational()) {
        // Equal fractional parts make floor(. + y) - . agree.
        let b = a + Rational::from_int(shift);
        prop_assert_eq!(a.frac(), b.frac());
        prop_assert_eq!(
            (a + y).floor_rational() - a,
            (b + y).floor_rational() - b
        );
    }

    #[test]
    fn scalar_display_roundtrip(s in arb_scalar()) {
        prop_assert_eq!(io::parse_scalar(&s.to_string()), Ok(s));
    }

    #[test]
    fn parser_never_panics(text in "\\PC*") {
        let _ = io::parse_matrix(&text);
        let _ = io::parse_vector(&text);
        let _ = io::parse_rational(&text);
    }

    #[test]
    fn parser_never_panics_on_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..256)) {
        if let Ok(text) = std::str::from_utf8(&bytes) {
            let _ = io::parse_matrix(text);
        }
    }

    #[test]
    fn matrix_text_roundtrip(
        rows in 1usize..4,
        cols in 1usize..4,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<Scalar> = (0..rows * cols)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    Scalar::NegInf
                } else {
                    Scalar::Fin(rq(&mut rng, 1000, 64))
                }
            })
            .collect();
        let m = Matrix::new(rows, cols, data).unwrap();
        let text = io::write_matrix(&m);
        prop_assert_eq!(io::parse_matrix(&text).unwrap(), m);
    }
}

#[test]
fn isotonicity_of_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..200 {
        let m = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let b = finite_matrix(&mut rng, m, k, rq_stock);
        // a >= b entry-wise.
        let bump = Rational::new(rng.gen_range(0..=10), 1);
        let a = b.map(|v| v + bump);
        let c = finite_matrix(&mut rng, k, n, rq_stock);
        let ac = a.mp_mul(&c).unwrap();
        let bc = b.mp_mul(&c).unwrap();
        for i in 0..m {
            assert!(vec_le(bc.row(i), ac.row(i)));
        }
    }
}

#[test]
fn residuation_galois_connection() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..500 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, m, n, rq_stock);
        let x = finite_vector(&mut rng, n, rq_stock);
        let y = finite_vector(&mut rng, m, rq_stock);
        let res = a.residual(&y).unwrap();
        let lhs = vec_le(&a.mp_vec(&x).unwrap(), &y);
        let rhs = vec_le(&x, &res);
        assert_eq!(lhs, rhs, "Galois connection failed for {a:?}");
        assert!(vec_le(&a.mp_vec(&res).unwrap(), &y));
    }
}

#[test]
fn sampled_subsolutions_solve_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut solved = 0;
    for _ in 0..300 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, m, n, rq_stock);
        let x0 = finite_vector(&mut rng, n, rq_stock);
        let b = a.mp_vec(&x0).unwrap();
        let sol = onesided::solve_one_sided(&a, &b).unwrap();
        assert!(sol.solvable);
        // Keep a random covering set of coordinates pinned at xbar, push
        // the rest down; the result must still solve exactly.
        let mut x = sol.xbar.clone();
        let mut covered = vec![false; m];
        let pinned: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.6)).collect();
        for (j, _) in pinned.iter().enumerate().filter(|(_, p)| **p) {
            for &i in &sol.mj_sets[j] {
                covered[i] = true;
            }
        }
        if covered.iter().all(|c| *c) {
            for (xj, _) in x.iter_mut().zip(&pinned).filter(|(_, p)| !**p) {
                *xj -= Rational::from_int(rng.gen_range(1..=5));
            }
            assert_eq!(a.mp_vec(&x).unwrap(), b);
            solved += 1;
        }
    }
    assert!(solved > 20);
}

#[test]
fn solution_sets_are_max_convex() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..200 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, m, n, rq_stock);
        let seed_x = finite_vector(&mut rng, n, rq_stock);
        let b = a.mp_vec(&seed_x).unwrap();
        let xbar = onesided::solve_one_sided(&a, &b).unwrap().xbar;
        let d = &xbar;

        // Two solutions: xbar itself and a sampled one (xbar always works).
        let x = xbar.clone();
        let y = sample_solution(&mut rng, &a, &b, &xbar);
        let lambda = Rational::ZERO;
        let mu = -Rational::from_int(rng.gen_range(0..=6));
        // max-plus combination with lambda (+) mu = 0.
        let z: Vec<Rational> = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (*xi + lambda).max(*yi + mu))
            .collect();
        assert_eq!(a.mp_vec(&z).unwrap(), b);
        assert!(vec_le(&z, d));
    }
}

/// Picks a random solution of `A (x) x = b` below `xbar` by keeping a
/// covering set of tight coordinates.
fn sample_solution(
    rng: &mut ChaCha8Rng,
    a: &FiniteMatrix,
    b: &[Rational],
    xbar: &[Rational],
) -> Vec<Rational> {
    loop {
        let mut x = xbar.to_vec();
        for xj in x.iter_mut() {
            if rng.gen_bool(0.4) {
                *xj -= Rational::from_int(rng.gen_range(1..=4));
            }
        }
        if a.mp_vec(&x).unwrap() == b {
            return x;
        }
    }
}

#[test]
fn intermediate_values_attained_constructively() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..200 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, m, n, rq_stock);
        let seed_x = finite_vector(&mut rng, n, rq_stock);
        let b = a.mp_vec(&seed_x).unwrap();
        let xbar = onesided::solve_one_sided(&a, &b).unwrap().xbar;
        let c = finite_vector(&mut rng, n, rq_stock);
        let f = |x: &[Rational]| x.iter().zip(&c).map(|(xi, ci)| *xi + *ci).max().unwrap();

        let x = sample_solution(&mut rng, &a, &b, &xbar);
        let y = sample_solution(&mut rng, &a, &b, &xbar);
        let (x, y) = if f(&x) <= f(&y) { (x, y) } else { (y, x) };
        let (fx, fy) = (f(&x), f(&y));
        // A value strictly between fx and fy, rational midpoint-ish.
        let target = fx + (fy - fx) * Rational::new(1, 3);
        let mu = target - fy;
        let z: Vec<Rational> = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (*xi).max(*yi + mu))
            .collect();
        assert_eq!(a.mp_vec(&z).unwrap(), b);
        assert_eq!(f(&z), target);
    }
}

#[test]
fn integer_images_are_diagonal_scale_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let opts = SolveOptions::default();
    for _ in 0..150 {
        let m = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, m, n, rq_small);
        let shift = finite_vector(&mut rng, n, rq_small);
        let scaled = a.shift_columns(&shift).unwrap();
        let ours = iip::solve(&a, &opts).unwrap().outcome;
        let theirs = iip::solve(&scaled, &opts).unwrap().outcome;
        assert_eq!(ours.is_witness(), theirs.is_witness());
        // Witness transport: x for A gives D^-1 x for AD.
        if let IipOutcome::Witness { x, y } = ours {
            let moved: Vec<Rational> = x.iter().zip(&shift).map(|(xi, s)| *xi - *s).collect();
            assert_eq!(scaled.mp_vec(&moved).unwrap(), y);
        }
    }
}

#[test]
fn integer_shift_preserves_integrality() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let opts = SolveOptions::default();
    for _ in 0..100 {
        let m = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, m, n, rq_small);
        if let IipOutcome::Witness { x, y: _ } = iip::solve(&a, &opts).unwrap().outcome {
            let alpha = Rational::from_int(rng.gen_range(-5..=5));
            let moved: Vec<Rational> = x.iter().map(|xi| *xi + alpha).collect();
            assert!(vec_is_integer(&a.mp_vec(&moved).unwrap()));
        }
    }
}

#[test]
fn integer_images_are_genperm_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let opts = SolveOptions::default();
    for _ in 0..100 {
        let m = rng.gen_range(2..=3);
        let n = rng.gen_range(2..=4);
        let a = finite_matrix(&mut rng, m, n, rq_small);
        // Random generalized permutation on the columns.
        let mut sigma: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            sigma.swap(i, rng.gen_range(0..=i));
        }
        let weights = finite_vector(&mut rng, n, rq_small);
        let q = GenPermMatrix::new(sigma, weights).unwrap();
        let aq = q.apply_right(&a).unwrap();
        let ours = iip::solve(&a, &opts).unwrap().outcome;
        let theirs = iip::solve(&aq, &opts).unwrap().outcome;
        assert_eq!(ours.is_witness(), theirs.is_witness());
        if let IipOutcome::Witness { x, y } = theirs {
            // AQ witness x maps to the A witness Q (x) x.
            let moved = q.apply_vec(&x).unwrap();
            assert_eq!(a.mp_vec(&moved).unwrap(), y);
        }
    }
}

#[test]
fn nonpositive_witnesses_project_to_the_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let mut hits = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=4);
        let a = finite_matrix(&mut rng, 2, n, rq_small);
        let lower = [
            Rational::from_int(rng.gen_range(-6..=2)),
            Rational::from_int(rng.gen_range(-6..=2)),
        ];
        if let NonpositiveOutcome::Witness { x, y } = solve_nonpositive(&a, &lower).unwrap() {
            hits += 1;
            let b = y;
            // Project diagonally to pin one coordinate at its lower bound.
            let lambda = if b[1] - b[0] >= lower[1] - lower[0] {
                lower[0] - b[0]
            } else {
                lower[1] - b[1]
            };
            assert!(lambda <= Rational::ZERO);
            assert!(lambda.is_integer());
            let moved: Vec<Rational> = x.iter().map(|xi| *xi + lambda).collect();
            let image = a.mp_vec(&moved).unwrap();
            assert!(vec_is_integer(&image));
            assert!(moved.iter().all(|v| *v <= Rational::ZERO));
            assert!(lower[0] <= image[0] && lower[1] <= image[1]);
            assert!(image[0] == lower[0] || image[1] == lower[1]);
        }
    }
    assert!(hits > 30);
}

#[test]
fn solver_witnesses_stay_in_the_oracle_box() {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let opts = SolveOptions::default();
    let mut checked = 0;
    for round in 0..1000 {
        let (m, n) = match round % 4 {
            0 => (2, rng.gen_range(1..=5)),
            1 => (3, rng.gen_range(2..=4)),
            2 => (rng.gen_range(2..=4), rng.gen_range(2..=4)),
            _ => (rng.gen_range(2..=3), rng.gen_range(2..=5)),
        };
        let a = match round % 3 {
            0 => finite_matrix(&mut rng, m, n, rq_small),
            1 => column_typical_matrix(&mut rng, m, n.max(m), rq_small),
            _ => acu_matrix(&mut rng, m, n),
        };
        let solved = match iip::solve(&a, &opts) {
            Ok(s) => s,
            Err(_) => continue,
        };
        if let IipOutcome::Witness { y, .. } = solved.outcome {
            // Normalize y_1 = 0 (an integer shift keeps it an image point)
            // and check containment in the enumeration box.
            let box_ = oracle::image_box(&a);
            let base = y[0];
            for (i, (lo, hi)) in box_.iter().enumerate() {
                let v = y[i + 1] - base;
                assert!(
                    Rational::from_int(*lo) <= v && v <= Rational::from_int(*hi),
                    "witness escaped the enumeration box for {a:?}"
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 200, "only {checked} witnesses checked");
}

#[test]
fn rounded_vector_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for _ in 0..200 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=5);
        // Column uniform H.
        let mut rows = vec![vec![Rational::ZERO; n]; m];
        for j in 0..n {
            let den = rng.gen_range(1..=8i128);
            let fr = Rational::new(rng.gen_range(0..den), den);
            for row in rows.iter_mut() {
                row[j] = Rational::from_int(rng.gen_range(-6..=6)) + fr;
            }
        }
        let h = FiniteMatrix::from_rows(rows).unwrap();
        let w = finite_vector(&mut rng, n, rq_stock);
        // Rounded vector: w~_j = floor(h_ij + w_j) - h_ij, any row i.
        let w_tilde: Vec<Rational> = (0..n)
            .map(|j| (h.get(0, j) + w[j]).floor_rational() - h.get(0, j))
            .collect();
        for j in 0..n {
            for i in 0..m {
                assert_eq!(
                    (h.get(i, j) + w[j]).floor_rational() - h.get(i, j),
                    w_tilde[j]
                );
            }
        }
        assert!(vec_le(&w_tilde, &w));
        let hw = h.mp_vec(&w).unwrap();
        let hw_tilde = h.mp_vec(&w_tilde).unwrap();
        let floored: Vec<Rational> = hw.iter().map(|v| v.floor_rational()).collect();
        assert_eq!(hw_tilde, floored);
    }
}
