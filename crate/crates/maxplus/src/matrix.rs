//! Dense matrices and vectors over the max-plus semiring, plus the
//! min-plus dual used for residuation.
//!
//! [`Matrix`] admits `-inf` entries; [`FiniteMatrix`] guarantees every
//! entry is a rational and is the carrier for the solver pipelines, which
//! are defined for finite data only. Both are immutable after
//! construction.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Dense row-major max-plus matrix, `-inf` entries allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape("matrix dimensions must be at least 1x1"));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::shape("ragged rows"));
        }
        Matrix::new(m, n, rows.into_iter().flatten().collect())
    }

    /// The max-plus unit matrix: zero diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Matrix {
        let mut data = vec![Scalar::NEG_INF; n * n];
        for i in 0..n {
            data[i * n + i] = Scalar::from_int(0);
        }
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    /// Matrix with every entry `-inf`.
    pub fn bottom(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::NEG_INF; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(Scalar::is_finite)
    }

    /// Checked view as a finite matrix; reports the first `-inf` entry.
    pub fn to_finite(&self) -> Result<FiniteMatrix> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_finite() {
                    return Err(Error::NotFinite { row: i, col: j });
                }
            }
        }
        let data = self.data.iter().map(|s| s.as_finite().unwrap()).collect();
        Ok(FiniteMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Max-plus matrix product.
    pub fn mp_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![Scalar::NEG_INF; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if !aik.is_finite() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = aik.times(other.get(k, j));
                    let cell = &mut data[i * other.cols + j];
                    if term > *cell {
                        *cell = term;
                    }
                }
            }
        }
        Matrix::new(self.rows, other.cols, data)
    }

    /// Max-plus matrix-vector product.
    pub fn mp_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::shape(format!(
                "vector length {} does not match {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a.times(*b))
                    .fold(Scalar::NEG_INF, Scalar::plus)
            })
            .collect())
    }

    /// Entry-wise max of two equally shaped matrices.
    pub fn join(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape("entry-wise max of mismatched shapes"));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.plus(*b))
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    /// Adds a finite scalar to every entry (`-inf` stays put).
    pub fn scale(&self, c: Rational) -> Matrix {
        let data = self.data.iter().map(|s| s.times(Scalar::Fin(c))).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Min-plus matrix product; defined for finite operands only.
    pub fn min_plus_mul(&self, other: &Matrix) -> Result<Matrix> {
        let a = self.to_finite()?;
        let b = other.to_finite()?;
        Ok(a.min_plus_mul(&b)?.into())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Dense matrix with every entry a finite rational.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl FiniteMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<FiniteMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape("matrix dimensions must be at least 1x1"));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                data.len()
            )));
        }
        Ok(FiniteMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<FiniteMatrix> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::shape("ragged rows"));
        }
        FiniteMatrix::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    pub fn transpose(&self) -> FiniteMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        FiniteMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The conjugate `-A^T`, the left adjoint of residuation.
    pub fn conjugate(&self) -> FiniteMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(-self.get(i, j));
            }
        }
        FiniteMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Max-plus product of finite matrices (always finite).
    pub fn mp_mul(&self, other: &FiniteMatrix) -> Result<FiniteMatrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut best = self.get(i, 0) + other.get(0, j);
                for k in 1..self.cols {
                    let term = self.get(i, k) + other.get(k, j);
                    if term > best {
                        best = term;
                    }
                }
                data.push(best);
            }
        }
        FiniteMatrix::new(self.rows, other.cols, data)
    }

    /// Max-plus matrix-vector product.
    pub fn mp_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::shape(format!(
                "vector length {} does not match {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut best = row[0] + x[0];
                for k in 1..row.len() {
                    let term = row[k] + x[k];
                    if term > best {
                        best = term;
                    }
                }
                best
            })
            .collect())
    }

    /// Min-plus product.
    pub fn min_plus_mul(&self, other: &FiniteMatrix) -> Result<FiniteMatrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut best = self.get(i, 0) + other.get(0, j);
                for k in 1..self.cols {
                    let term = self.get(i, k) + other.get(k, j);
                    if term < best {
                        best = term;
                    }
                }
                data.push(best);
            }
        }
        FiniteMatrix::new(self.rows, other.cols, data)
    }

    /// Min-plus matrix-vector product.
    pub fn min_plus_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::shape(format!(
                "vector length {} does not match {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut best = row[0] + x[0];
                for k in 1..row.len() {
                    let term = row[k] + x[k];
                    if term < best {
                        best = term;
                    }
                }
                best
            })
            .collect())
    }

    /// Principal solution of `A (x) = b`: `x_j = min_i (b_i - a_ij)`.
    ///
    /// Always satisfies `A (x) <= b`, with equality iff the system is
    /// solvable.
    pub fn residual(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if b.len() != self.rows {
            return Err(Error::shape(format!(
                "vector length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        Ok((0..self.cols)
            .map(|j| {
                let mut best = b[0] - self.get(0, j);
                for (i, bi) in b.iter().enumerate().skip(1) {
                    let v = *bi - self.get(i, j);
                    if v < best {
                        best = v;
                    }
                }
                best
            })
            .collect())
    }

    /// Entry-wise lower integer part, fractional part and upper integer part.
    /// `floor + frac == self` exactly and `ceil == -floor(-self)`.
    pub fn frac_decompose(&self) -> (FiniteMatrix, FiniteMatrix, FiniteMatrix) {
        let floor = self.map(|r| r.floor_rational());
        let frac = self.map(|r| r.frac());
        let ceil = self.map(|r| r.ceil_rational());
        (floor, frac, ceil)
    }

    pub fn floor(&self) -> FiniteMatrix {
        self.map(|r| r.floor_rational())
    }

    pub fn ceil(&self) -> FiniteMatrix {
        self.map(|r| r.ceil_rational())
    }

    pub fn frac(&self) -> FiniteMatrix {
        self.map(|r| r.frac())
    }

    pub fn map(&self, f: impl Fn(Rational) -> Rational) -> FiniteMatrix {
        FiniteMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| f(*r)).collect(),
        }
    }

    /// Adds a scalar to every entry.
    pub fn scale(&self, c: Rational) -> FiniteMatrix {
        self.map(|r| r + c)
    }

    /// Shifts column `j` by `shift[j]` (right multiplication by the
    /// diagonal matrix with those weights).
    pub fn shift_columns(&self, shift: &[Rational]) -> Result<FiniteMatrix> {
        if shift.len() != self.cols {
            return Err(Error::shape("column shift length mismatch"));
        }
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            for (v, s) in self.row(i).iter().zip(shift) {
                data.push(*v + *s);
            }
        }
        FiniteMatrix::new(self.rows, self.cols, data)
    }

    pub fn min_entry(&self) -> Rational {
        *self.data.iter().min().unwrap()
    }

    pub fn max_entry(&self) -> Rational {
        *self.data.iter().max().unwrap()
    }

    /// Deletes one column; errors when only one column remains.
    pub fn drop_column(&self, j: usize) -> Result<FiniteMatrix> {
        if self.cols < 2 {
            return Err(Error::shape("cannot drop the only column"));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for c in 0..self.cols {
                if c != j {
                    data.push(self.get(i, c));
                }
            }
        }
        FiniteMatrix::new(self.rows, self.cols - 1, data)
    }

    /// Deletes one row; errors when only one row remains.
    pub fn drop_row(&self, i: usize) -> Result<FiniteMatrix> {
        if self.rows < 2 {
            return Err(Error::shape("cannot drop the only row"));
        }
        let mut data = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in 0..self.rows {
            if r != i {
                data.extend_from_slice(self.row(r));
            }
        }
        FiniteMatrix::new(self.rows - 1, self.cols, data)
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<FiniteMatrix> {
        if cols.is_empty() {
            return Err(Error::shape("empty column selection"));
        }
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j));
            }
        }
        FiniteMatrix::new(self.rows, cols.len(), data)
    }
}

impl From<FiniteMatrix> for Matrix {
    fn from(m: FiniteMatrix) -> Matrix {
        Matrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.into_iter().map(Scalar::Fin).collect(),
        }
    }
}

impl fmt::Debug for FiniteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FiniteMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|r| r.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Generalized permutation matrix: column `j` carries its single finite
/// entry `weights[j]` in row `sigma[j]`. These are exactly the invertible
/// max-plus matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPermMatrix {
    sigma: Vec<usize>,
    weights: Vec<Rational>,
}

impl GenPermMatrix {
    pub fn new(sigma: Vec<usize>, weights: Vec<Rational>) -> Result<GenPermMatrix> {
        let n = sigma.len();
        if n == 0 || weights.len() != n {
            return Err(Error::shape("permutation and weight lengths must match"));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::precondition("sigma is not a permutation"));
            }
            seen[s] = true;
        }
        Ok(GenPermMatrix { sigma, weights })
    }

    pub fn identity(n: usize) -> GenPermMatrix {
        GenPermMatrix {
            sigma: (0..n).collect(),
            weights: vec![Rational::ZERO; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn to_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut data = vec![Scalar::NEG_INF; n * n];
        for j in 0..n {
            data[self.sigma[j] * n + j] = Scalar::Fin(self.weights[j]);
        }
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    /// The max-plus inverse: `Q (x) Q^-1 = I`.
    pub fn inverse(&self) -> GenPermMatrix {
        let n = self.dim();
        let mut sigma_inv = vec![0usize; n];
        let mut weights_inv = vec![Rational::ZERO; n];
        for j in 0..n {
            // Column sigma[j] of the inverse has its entry in row j with
            // weight -weights[j].
            sigma_inv[self.sigma[j]] = j;
            weights_inv[self.sigma[j]] = -self.weights[j];
        }
        GenPermMatrix {
            sigma: sigma_inv,
            weights: weights_inv,
        }
    }

    /// Right multiplication `A (x) Q`: permutes and shifts the columns of `A`.
    pub fn apply_right(&self, a: &FiniteMatrix) -> Result<FiniteMatrix> {
        if a.cols() != self.dim() {
            return Err(Error::shape("column count does not match Q dimension"));
        }
        let mut data = Vec::with_capacity(a.rows() * a.cols());
        for i in 0..a.rows() {
            for j in 0..self.dim() {
                data.push(a.get(i, self.sigma[j]) + self.weights[j]);
            }
        }
        FiniteMatrix::new(a.rows(), a.cols(), data)
    }

    /// Max-plus product `Q (x) v`.
    pub fn apply_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::shape("vector length does not match Q dimension"));
        }
        let mut out = vec![Rational::ZERO; n];
        for j in 0..n {
            out[self.sigma[j]] = self.weights[j] + v[j];
        }
        Ok(out)
    }
}

/// Entry-wise `a <= b` on rational slices of equal length.
pub fn vec_le(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Component-wise min of two rational slices.
pub fn vec_min(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| (*x).min(*y)).collect()
}

/// Component-wise max of two rational slices.
pub fn vec_max(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| (*x).max(*y)).collect()
}

/// True when every component is an integer.
pub fn vec_is_integer(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_integer)
}
