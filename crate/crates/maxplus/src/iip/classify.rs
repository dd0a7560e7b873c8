//! Column fractional-part profiles: typical / uniform / almost uniform.

use crate::matrix::FiniteMatrix;
use crate::rational::Rational;

/// Exact fractional-part structure of a matrix, computed per column.
///
/// A column is *typical* when no two of its entries share a fractional
/// part and *uniform* when all entries share one. For a single-row matrix
/// every column is both. A matrix is *almost column uniform* when deleting
/// one row (the *exceptional* row) leaves it column uniform.
#[derive(Clone, Debug)]
pub struct ColumnProfile {
    /// Per column: the fractional parts of its entries, top to bottom.
    pub column_fracs: Vec<Vec<Rational>>,
    /// Per column: all fractional parts distinct.
    pub typical_columns: Vec<bool>,
    /// Per column: all fractional parts equal.
    pub uniform_columns_flags: Vec<bool>,
    /// Indices of uniform columns.
    pub uniform_columns: Vec<usize>,
    /// Every column typical.
    pub column_typical: bool,
    /// Every column uniform.
    pub column_uniform: bool,
    /// Smallest row index whose removal leaves a column-uniform matrix,
    /// when one exists (only meaningful for at least two rows).
    pub almost_uniform_row: Option<usize>,
}

/// Computes the exact fractional-part profile of a finite matrix.
pub fn classify(a: &FiniteMatrix) -> ColumnProfile {
    let m = a.rows();
    let n = a.cols();

    let mut column_fracs = Vec::with_capacity(n);
    let mut typical_columns = Vec::with_capacity(n);
    let mut uniform_flags = Vec::with_capacity(n);
    for j in 0..n {
        let fracs: Vec<Rational> = (0..m).map(|i| a.get(i, j).frac()).collect();
        let mut sorted = fracs.clone();
        sorted.sort();
        let typical = sorted.windows(2).all(|w| w[0] != w[1]);
        let uniform = fracs.iter().all(|f| *f == fracs[0]);
        typical_columns.push(typical);
        uniform_flags.push(uniform);
        column_fracs.push(fracs);
    }

    let uniform_columns: Vec<usize> = uniform_flags
        .iter()
        .enumerate()
        .filter_map(|(j, u)| u.then_some(j))
        .collect();
    let column_typical = typical_columns.iter().all(|t| *t);
    let column_uniform = uniform_flags.iter().all(|u| *u);

    let almost_uniform_row = if m < 2 {
        None
    } else {
        (0..m).find(|&r| uniform_without_row(&column_fracs, m, r))
    };

    ColumnProfile {
        column_fracs,
        typical_columns,
        uniform_columns_flags: uniform_flags,
        uniform_columns,
        column_typical,
        column_uniform,
        almost_uniform_row,
    }
}

fn uniform_without_row(column_fracs: &[Vec<Rational>], m: usize, skip: usize) -> bool {
    column_fracs.iter().all(|fracs| {
        let mut first = None;
        for (i, f) in fracs.iter().enumerate().take(m) {
            if i == skip {
                continue;
            }
            match first {
                None => first = Some(*f),
                Some(v) if v != *f => return false,
                _ => {}
            }
        }
        true
    })
}

/// True when deleting row `skip` leaves the matrix column uniform.
pub fn is_uniform_without_row(a: &FiniteMatrix, skip: usize) -> bool {
    let profile = classify(a);
    uniform_without_row(&profile.column_fracs, a.rows(), skip)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    fn fm(rows: Vec<Vec<Rational>>) -> FiniteMatrix {
        FiniteMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn typical_and_uniform_flags() {
        let a = fm(vec![vec![r(1, 2), r(1, 3)], vec![r(3, 2), r(2, 3)]]);
        let p = classify(&a);
        // Column 0 is uniform (fr 1/2 twice), column 1 typical.
        assert!(p.uniform_columns_flags[0]);
        assert!(!p.typical_columns[0]);
        assert!(p.typical_columns[1]);
        assert!(!p.uniform_columns_flags[1]);
        assert_eq!(p.uniform_columns, vec![0]);
        assert!(!p.column_typical);
        assert!(!p.column_uniform);
    }

    #[test]
    fn exclusive_for_two_or_more_rows() {
        let a = fm(vec![
            vec![r(1, 5), r(2, 5)],
            vec![r(2, 5), r(3, 5)],
            vec![r(3, 5), r(4, 5)],
        ]);
        let p = classify(&a);
        for j in 0..2 {
            assert!(p.typical_columns[j] != p.uniform_columns_flags[j] || a.rows() == 1);
        }
        assert!(p.column_typical);
    }

    #[test]
    fn single_row_is_both() {
        let a = fm(vec![vec![r(1, 2), r(5, 1)]]);
        let p = classify(&a);
        assert!(p.column_typical);
        assert!(p.column_uniform);
    }

    #[test]
    fn almost_uniform_detection_lowest_row() {
        // Removing row 2 makes both columns uniform.
        let a = fm(vec![
            vec![r(1, 2), r(6, 5)],
            vec![r(3, 2), r(11, 5)],
            vec![r(1, 3), r(1, 7)],
        ]);
        let p = classify(&a);
        assert_eq!(p.almost_uniform_row, Some(2));

        // Every 2-row matrix is almost uniform with exceptional row 0.
        let b = fm(vec![vec![r(1, 2), r(1, 3)], vec![r(1, 5), r(1, 7)]]);
        assert_eq!(classify(&b).almost_uniform_row, Some(0));

        // Column-uniform matrices report the lowest row.
        let c = fm(vec![vec![r(1, 2)], vec![r(3, 2)], vec![r(5, 2)]]);
        assert_eq!(classify(&c).almost_uniform_row, Some(0));
    }

    #[test]
    fn not_almost_uniform() {
        let a = fm(vec![
            vec![r(1, 2), r(1, 3)],
            vec![r(1, 3), r(1, 2)],
            vec![r(1, 5), r(1, 7)],
        ]);
        assert_eq!(classify(&a).almost_uniform_row, None);
    }
}
