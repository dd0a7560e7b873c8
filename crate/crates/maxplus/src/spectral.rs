//! Graph-side quantities of a square max-plus matrix: maximum cycle mean,
//! Kleene star, definiteness, the principal eigenproblem and integer
//! eigenvectors of strongly definite matrices.

use crate::error::{Error, Result};
use crate::matrix::{FiniteMatrix, Matrix};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Maximum cycle mean together with a witness cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleMeanResult {
    /// `-inf` iff the digraph of the matrix is acyclic.
    pub lambda: Scalar,
    /// A simple cycle (vertex list, implicitly closed) whose mean equals
    /// `lambda`; `None` iff `lambda` is `-inf`. Extraction is
    /// deterministic: the cycle is reached by a greedy walk over tight
    /// edges from the smallest critical vertex and rotated to start at its
    /// smallest vertex.
    pub witness: Option<Vec<usize>>,
}

/// Definiteness classification of a square matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    NotDefinite,
    Definite,
    StronglyDefinite,
}

/// Maximum cycle mean via Karp's dynamic program, exact rationals.
///
/// `D[k][v]` is the maximum weight of a walk with exactly `k` edges ending
/// at `v`, starting anywhere. The mean is
/// `max_v min_k (D[n][v] - D[k][v]) / (n - k)` over finite entries.
pub fn max_cycle_mean(a: &Matrix) -> Result<CycleMeanResult> {
    if !a.is_square() {
        return Err(Error::shape("cycle mean requires a square matrix"));
    }
    let n = a.rows();
    let mut table: Vec<Vec<Scalar>> = Vec::with_capacity(n + 1);
    table.push(vec![Scalar::from_int(0); n]);
    for k in 1..=n {
        let prev = &table[k - 1];
        let mut cur = vec![Scalar::NEG_INF; n];
        for (u, &du) in prev.iter().enumerate() {
            if !du.is_finite() {
                continue;
            }
            for (v, w) in a.row(u).iter().enumerate() {
                let cand = du.times(*w);
                if cand > cur[v] {
                    cur[v] = cand;
                }
            }
        }
        table.push(cur);
    }

    let mut lambda: Option<Rational> = None;
    for v in 0..n {
        let dn = match table[n][v].as_finite() {
            Some(r) => r,
            None => continue,
        };
        let mut best: Option<Rational> = None;
        for (k, row) in table.iter().enumerate().take(n) {
            if let Some(dk) = row[v].as_finite() {
                let mean = (dn - dk) / Rational::from_int((n - k) as i128);
                if best.is_none_or(|b| mean < b) {
                    best = Some(mean);
                }
            }
        }
        if let Some(b) = best {
            if lambda.is_none_or(|l| b > l) {
                lambda = Some(b);
            }
        }
    }

    match lambda {
        None => Ok(CycleMeanResult {
            lambda: Scalar::NEG_INF,
            witness: None,
        }),
        Some(l) => {
            let witness = extract_witness_cycle(a, l);
            debug_assert_eq!(
                cycle_mean_of(a, witness.as_deref().unwrap()),
                Some(l),
                "witness cycle mean must equal lambda"
            );
            Ok(CycleMeanResult {
                lambda: Scalar::Fin(l),
                witness,
            })
        }
    }
}

/// Mean of an explicit cycle (vertex list, implicitly closed), `None` if
/// some edge is `-inf`.
pub fn cycle_mean_of(a: &Matrix, cycle: &[usize]) -> Option<Rational> {
    let len = cycle.len();
    let mut total = Rational::ZERO;
    for i in 0..len {
        let u = cycle[i];
        let v = cycle[(i + 1) % len];
        total += a.get(u, v).as_finite()?;
    }
    Some(total / Rational::from_int(len as i128))
}

/// Finds a simple cycle of mean exactly `lambda` in the reduced graph:
/// walk tight edges greedily and cut at the first repeated vertex.
fn extract_witness_cycle(a: &Matrix, lambda: Rational) -> Option<Vec<usize>> {
    let n = a.rows();
    let reduced = a.scale(-lambda);
    let star = star_unchecked(&reduced);
    let plus = reduced.mp_mul(&star).ok()?;

    let zero = Scalar::from_int(0);
    let v0 = (0..n).find(|&v| plus.get(v, v) == zero)?;

    // Walk tight edges: (u, w) is tight when reduced(u,w) + star(w, v0)
    // equals star(u, v0). At most n+1 steps before a vertex repeats.
    let mut seq = vec![v0];
    let mut seen = vec![usize::MAX; n];
    seen[v0] = 0;
    let mut u = v0;
    loop {
        let su = star.get(u, v0);
        let mut next = None;
        for w in 0..n {
            let edge = reduced.get(u, w);
            if edge.is_finite() && edge.times(star.get(w, v0)) == su {
                next = Some(w);
                break;
            }
        }
        let w = next?;
        if seen[w] != usize::MAX {
            let cycle: Vec<usize> = seq[seen[w]..].to_vec();
            return Some(canonical_rotation(cycle));
        }
        seen[w] = seq.len();
        seq.push(w);
        u = w;
    }
}

fn canonical_rotation(cycle: Vec<usize>) -> Vec<usize> {
    let pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap();
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[pos..]);
    out.extend_from_slice(&cycle[..pos]);
    out
}

/// Floyd-Warshall transitive closure with unit diagonal; caller must
/// ensure there is no positive cycle.
fn star_unchecked(a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut d: Vec<Scalar> = (0..n * n).map(|i| a.get(i / n, i % n)).collect();
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if !dik.is_finite() {
                continue;
            }
            for j in 0..n {
                let cand = dik.times(d[k * n + j]);
                if cand > d[i * n + j] {
                    d[i * n + j] = cand;
                }
            }
        }
    }
    let zero = Scalar::from_int(0);
    for i in 0..n {
        if d[i * n + i] < zero {
            d[i * n + i] = zero;
        }
    }
    Matrix::new(n, n, d).unwrap()
}

/// The Kleene star `I (+) A (+) A^2 (+) ...`.
///
/// Converges iff the maximum cycle mean is at most zero; otherwise the
/// series is unbounded and a divergence error is returned.
pub fn kleene_star(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::shape("kleene star requires a square matrix"));
    }
    let mcm = max_cycle_mean(a)?;
    if mcm.lambda > Scalar::from_int(0) {
        return Err(Error::precondition(format!(
            "kleene star diverges: maximum cycle mean {} is positive",
            mcm.lambda
        )));
    }
    Ok(star_unchecked(a))
}

/// Kleene star of a finite matrix (always finite for finite input).
pub fn kleene_star_finite(a: &FiniteMatrix) -> Result<FiniteMatrix> {
    kleene_star(&Matrix::from(a.clone()))?.to_finite()
}

/// `NotDefinite` / `Definite` (zero cycle mean) / `StronglyDefinite`
/// (zero cycle mean and all-zero diagonal).
pub fn definiteness(a: &Matrix) -> Result<Definiteness> {
    if !a.is_square() {
        return Err(Error::shape("definiteness requires a square matrix"));
    }
    let mcm = max_cycle_mean(a)?;
    if mcm.lambda != Scalar::from_int(0) {
        return Ok(Definiteness::NotDefinite);
    }
    let zero = Scalar::from_int(0);
    let diag_zero = (0..a.rows()).all(|i| a.get(i, i) == zero);
    if diag_zero {
        Ok(Definiteness::StronglyDefinite)
    } else {
        Ok(Definiteness::Definite)
    }
}

/// Principal eigenvalue, with an eigenspace generator when the matrix is
/// strongly definite (`V(A) = { A* (x) u }`).
#[derive(Clone, Debug)]
pub struct PrincipalEigen {
    pub lambda: Scalar,
    /// Present iff the matrix is strongly definite; then every max-plus
    /// combination of its columns is an eigenvector.
    pub generator: Option<Matrix>,
}

/// The principal eigenvalue of a square matrix is its maximum cycle mean;
/// for a finite matrix it is the unique eigenvalue.
pub fn principal_eigen(a: &Matrix) -> Result<PrincipalEigen> {
    let mcm = max_cycle_mean(a)?;
    let generator = if definiteness(a)? == Definiteness::StronglyDefinite {
        Some(star_unchecked(a))
    } else {
        None
    };
    Ok(PrincipalEigen {
        lambda: mcm.lambda,
        generator,
    })
}

/// Membership test `A (x) x = lambda (x) x` for an arbitrary vector.
pub fn is_principal_eigenvector(a: &Matrix, x: &[Scalar]) -> Result<bool> {
    let lambda = max_cycle_mean(a)?.lambda;
    let ax = a.mp_vec(x)?;
    Ok(ax.iter().zip(x).all(|(l, r)| *l == lambda.times(*r)))
}

/// Witness for a non-empty set of integer eigenvectors.
#[derive(Clone, Debug)]
pub struct IntegerEigenWitness {
    /// `ceil(A)*`; the integer eigenvectors are exactly its max-plus
    /// combinations with integer coefficients.
    pub generator: FiniteMatrix,
    /// The combination with all coefficients zero.
    pub sample: Vec<Rational>,
}

/// Integer eigenvectors of a strongly definite matrix.
///
/// Non-empty iff the ceiling matrix has zero maximum cycle mean; then
/// `IV(A) = { ceil(A)* (x) z : z integer }`.
pub fn integer_eigen(a: &FiniteMatrix) -> Result<Option<IntegerEigenWitness>> {
    let am = Matrix::from(a.clone());
    if definiteness(&am)? != Definiteness::StronglyDefinite {
        return Err(Error::precondition(
            "integer eigenvectors require a strongly definite matrix",
        ));
    }
    let ceil = a.ceil();
    let mcm = max_cycle_mean(&Matrix::from(ceil.clone()))?;
    if mcm.lambda != Scalar::from_int(0) {
        return Ok(None);
    }
    let generator = kleene_star_finite(&ceil)?;
    let zeros = vec![Rational::ZERO; a.cols()];
    let sample = generator.mp_vec(&zeros)?;
    debug_assert_eq!(a.mp_vec(&sample)?, sample);
    Ok(Some(IntegerEigenWitness { generator, sample }))
}
