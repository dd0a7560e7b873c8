//! Max-algebraic permanent: the optimal assignment value, one optimal
//! permutation, uniqueness of the optimum, and normalization of a square
//! matrix to strongly definite form through a generalized permutation
//! matrix.

use crate::error::{Error, Result};
use crate::matrix::{FiniteMatrix, GenPermMatrix, Matrix};
use crate::rational::Rational;
use crate::spectral::{definiteness, Definiteness};

/// Result of the assignment computation on a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermanentResult {
    /// `per(A) = max over permutations of the diagonal sum`.
    pub value: Rational,
    /// One optimal permutation, as the column assigned to each row.
    pub optimal_perm: Vec<usize>,
    /// True iff no other permutation attains `value`.
    pub unique: bool,
}

/// Computes the max-algebraic permanent by a primal-dual (shortest
/// augmenting path) assignment solver over exact rationals, then decides
/// uniqueness on the graph of potential-tight entries: the optimum is
/// unique iff repeatedly deleting degree-one vertices together with their
/// forced partners empties that graph.
pub fn permanent_and_ap(a: &FiniteMatrix) -> Result<PermanentResult> {
    if !a.is_square() {
        return Err(Error::shape("permanent requires a square matrix"));
    }
    let n = a.rows();
    // Maximize by minimizing the negated costs.
    let cost = a.map(|r| -r);
    let (row_to_col, u, v) = min_assignment(&cost);

    let mut value = Rational::ZERO;
    for (i, &j) in row_to_col.iter().enumerate() {
        value += a.get(i, j);
    }

    // Tight entries of the dual: u_i + v_j = cost_ij. Every optimal
    // permutation lives inside this bipartite graph.
    let tight: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| u[i] + v[j] == cost.get(i, j)).collect())
        .collect();
    debug_assert!((0..n).all(|i| tight[i][row_to_col[i]]));
    debug_assert!((0..n).all(|i| (0..n).all(|j| u[i] + v[j] <= cost.get(i, j))));

    let unique = has_unique_perfect_matching(&tight);

    Ok(PermanentResult {
        value,
        optimal_perm: row_to_col,
        unique,
    })
}

/// Shortest-augmenting-path assignment with potentials, exact rationals.
/// Returns the minimizing row-to-column assignment and a feasible dual
/// (`u_i + v_j <= c_ij`, tight on matched pairs). Ties inside the search
/// resolve to the smallest column index.
fn min_assignment(c: &FiniteMatrix) -> (Vec<usize>, Vec<Rational>, Vec<Rational>) {
    let n = c.rows();
    let mut u = vec![Rational::ZERO; n + 1];
    let mut v = vec![Rational::ZERO; n + 1];
    // col_match[j] = row matched to column j; n is the virtual column.
    let mut col_match = vec![n; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 0..n {
        col_match[n] = i;
        let mut j0 = n;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = col_match[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 0..n {
                if used[j] {
                    continue;
                }
                let cur = c.get(i0, j) - u[i0] - v[j];
                if minv[j].is_none_or(|m| cur < m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                if delta.is_none_or(|d| minv[j].unwrap() < d) {
                    delta = Some(minv[j].unwrap());
                    j1 = j;
                }
            }
            let delta = delta.expect("augmenting path always exists");
            for j in 0..=n {
                if used[j] {
                    u[col_match[j]] += delta;
                    v[j] -= delta;
                } else if let Some(m) = minv[j] {
                    minv[j] = Some(m - delta);
                }
            }
            j0 = j1;
            if col_match[j0] == n {
                break;
            }
        }
        // Augment along the alternating path.
        loop {
            let j1 = way[j0];
            col_match[j0] = col_match[j1];
            j0 = j1;
            if j0 == n {
                break;
            }
        }
    }

    let mut row_to_col = vec![0usize; n];
    for j in 0..n {
        if col_match[j] != n {
            row_to_col[col_match[j]] = j;
        }
    }
    (row_to_col, u[..n].to_vec(), v[..n].to_vec())
}

/// Uniqueness of a perfect matching in a bipartite graph that has one:
/// peel degree-one vertices with their forced partners; unique iff the
/// peeling empties the graph (any stalled remainder with all degrees at
/// least two carries an alternating cycle).
fn has_unique_perfect_matching(tight: &[Vec<bool>]) -> bool {
    let n = tight.len();
    let mut row_deg = vec![0usize; n];
    let mut col_deg = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if tight[i][j] {
                row_deg[i] += 1;
                col_deg[j] += 1;
            }
        }
    }
    let mut row_alive = vec![true; n];
    let mut col_alive = vec![true; n];
    let mut removed = 0usize;
    let mut queue: Vec<(bool, usize)> = Vec::new();
    for i in 0..n {
        if row_deg[i] == 1 {
            queue.push((true, i));
        }
        if col_deg[i] == 1 {
            queue.push((false, i));
        }
    }
    while let Some((is_row, idx)) = queue.pop() {
        if is_row && (!row_alive[idx] || row_deg[idx] != 1) {
            continue;
        }
        if !is_row && (!col_alive[idx] || col_deg[idx] != 1) {
            continue;
        }
        // The single live neighbor is forced into every perfect matching.
        let partner = if is_row {
            (0..n).find(|&j| col_alive[j] && tight[idx][j])
        } else {
            (0..n).find(|&i| row_alive[i] && tight[i][idx])
        };
        let partner = match partner {
            Some(p) => p,
            None => return false,
        };
        let (row, col) = if is_row {
            (idx, partner)
        } else {
            (partner, idx)
        };
        row_alive[row] = false;
        col_alive[col] = false;
        removed += 1;
        for j in 0..n {
            if tight[row][j] && col_alive[j] {
                col_deg[j] -= 1;
                if col_deg[j] == 1 {
                    queue.push((false, j));
                }
            }
        }
        for i in 0..n {
            if tight[i][col] && row_alive[i] {
                row_deg[i] -= 1;
                if row_deg[i] == 1 {
                    queue.push((true, i));
                }
            }
        }
    }
    removed == n
}

/// Normalizes a square matrix with a unique optimal permutation to
/// strongly definite form: returns the unique generalized permutation
/// matrix `Q` and `AQ` (zero diagonal, zero maximum cycle mean).
pub fn normalize_strongly_definite(a: &FiniteMatrix) -> Result<(GenPermMatrix, FiniteMatrix)> {
    let perm = permanent_and_ap(a)?;
    if !perm.unique {
        return Err(Error::precondition(
            "normalization requires a unique optimal permutation",
        ));
    }
    let q = normalizing_genperm(a, &perm.optimal_perm)?;
    let aq = q.apply_right(a)?;
    debug_assert_eq!(
        definiteness(&Matrix::from(aq.clone()))?,
        Definiteness::StronglyDefinite
    );
    Ok((q, aq))
}

/// `Q` built from an optimal permutation: column `j` of `AQ` is column
/// `perm[j]` of `A` shifted so the diagonal becomes zero.
pub(crate) fn normalizing_genperm(a: &FiniteMatrix, row_to_col: &[usize]) -> Result<GenPermMatrix> {
    let weights: Vec<Rational> = row_to_col
        .iter()
        .enumerate()
        .map(|(i, &j)| -a.get(i, j))
        .collect();
    GenPermMatrix::new(row_to_col.to_vec(), weights)
}
