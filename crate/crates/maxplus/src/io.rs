//! Text format for matrices, vectors and scalar literals.
//!
//! The format is line oriented:
//!
//! ```text
//! # comment
//! 2 3            <- rows cols
//! 1/2 -3 0.25    <- row entries
//! *  7  -1/5     <- '*' is -inf
//! ```
//!
//! An entry is `p/q`, an integer, a decimal literal (converted exactly to
//! a rational), or `*` for `-inf`. `#` starts a comment that runs to the
//! end of the line. Parsing never panics on malformed input; every error
//! carries a 1-based line and column.

use std::fmt;

use crate::matrix::{FiniteMatrix, Matrix};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Guard against absurd header lines allocating unbounded memory.
const MAX_ENTRIES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Parses a scalar literal: `p/q`, integer, decimal, or `*`.
pub fn parse_scalar(token: &str) -> Result<Scalar, String> {
    if token == "*" {
        return Ok(Scalar::NegInf);
    }
    parse_rational(token).map(Scalar::Fin)
}

/// Parses an exact rational literal: `p/q`, integer, or decimal.
pub fn parse_rational(token: &str) -> Result<Rational, String> {
    if token.is_empty() {
        return Err("empty entry".to_string());
    }
    if let Some((num, den)) = token.split_once('/') {
        let n: i128 = num
            .parse()
            .map_err(|_| format!("invalid numerator `{num}`"))?;
        if den.starts_with('+') || den.starts_with('-') {
            return Err(format!("denominator `{den}` must be unsigned"));
        }
        let d: i128 = den
            .parse()
            .map_err(|_| format!("invalid denominator `{den}`"))?;
        if d == 0 {
            return Err("denominator is zero".to_string());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = token.split_once('.') {
        if frac_part.contains(['+', '-']) {
            return Err(format!("invalid decimal `{token}`"));
        }
        let (sign, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1i128, rest),
            None => (1i128, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if digits.is_empty() && frac_part.is_empty() {
            return Err(format!("invalid decimal `{token}`"));
        }
        if !digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(format!("invalid decimal `{token}`"));
        }
        let whole: i128 = if digits.is_empty() {
            0
        } else {
            digits
                .parse()
                .map_err(|_| format!("decimal `{token}` out of range"))?
        };
        let mut num = whole;
        let mut den = 1i128;
        for c in frac_part.chars() {
            let digit = (c as u8 - b'0') as i128;
            num = num
                .checked_mul(10)
                .and_then(|v| v.checked_add(digit))
                .ok_or_else(|| format!("decimal `{token}` out of range"))?;
            den = den
                .checked_mul(10)
                .ok_or_else(|| format!("decimal `{token}` out of range"))?;
        }
        return Ok(Rational::new(sign * num, den));
    }
    let n: i128 = token
        .parse()
        .map_err(|_| format!("invalid entry `{token}`"))?;
    Ok(Rational::from_int(n))
}

/// Tokens of a line with their 1-based starting columns.
fn tokens_with_cols(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses the matrix text format.
pub fn parse_matrix(input: &str) -> Result<Matrix, ParseError> {
    let mut rows: Option<usize> = None;
    let mut cols: usize = 0;
    let mut data: Vec<Scalar> = Vec::new();
    let mut filled_rows = 0usize;

    for (lineno0, raw) in input.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = strip_comment(raw);
        let toks = tokens_with_cols(line);
        if toks.is_empty() {
            continue;
        }
        match rows {
            None => {
                if toks.len() != 2 {
                    return Err(ParseError::new(
                        lineno,
                        toks[0].0,
                        "header line must be `rows cols`",
                    ));
                }
                let m: usize = toks[0]
                    .1
                    .parse()
                    .map_err(|_| ParseError::new(lineno, toks[0].0, "invalid row count"))?;
                let n: usize = toks[1]
                    .1
                    .parse()
                    .map_err(|_| ParseError::new(lineno, toks[1].0, "invalid column count"))?;
                if m == 0 || n == 0 {
                    return Err(ParseError::new(
                        lineno,
                        toks[0].0,
                        "matrix dimensions must be at least 1x1",
                    ));
                }
                if m.saturating_mul(n) > MAX_ENTRIES {
                    return Err(ParseError::new(
                        lineno,
                        toks[0].0,
                        format!("matrix larger than the {MAX_ENTRIES}-entry limit"),
                    ));
                }
                rows = Some(m);
                cols = n;
                // Allocation grows with actual data, not the header claim.
                data = Vec::with_capacity((m * n).min(65_536));
            }
            Some(m) => {
                if filled_rows == m {
                    return Err(ParseError::new(
                        lineno,
                        toks[0].0,
                        format!("expected only {m} data rows"),
                    ));
                }
                if toks.len() != cols {
                    return Err(ParseError::new(
                        lineno,
                        toks[0].0,
                        format!("expected {cols} entries, found {}", toks.len()),
                    ));
                }
                for (col, tok) in toks {
                    let s = parse_scalar(tok).map_err(|msg| ParseError::new(lineno, col, msg))?;
                    data.push(s);
                }
                filled_rows += 1;
            }
        }
    }

    let m = rows.ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    if filled_rows != m {
        return Err(ParseError::new(
            filled_rows + 2,
            1,
            format!("expected {m} data rows, found {filled_rows}"),
        ));
    }
    Matrix::new(m, cols, data).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Parses a matrix file and requires every entry to be finite. Syntax
/// problems surface as parse errors, `-inf` entries as `NotFinite`.
pub fn parse_finite_matrix(input: &str) -> crate::error::Result<FiniteMatrix> {
    let m = parse_matrix(input)?;
    m.to_finite()
}

/// Parses a vector: a matrix with one column or one row.
pub fn parse_vector(input: &str) -> Result<Vec<Scalar>, ParseError> {
    let m = parse_matrix(input)?;
    if m.cols() != 1 && m.rows() != 1 {
        return Err(ParseError::new(
            1,
            1,
            format!(
                "expected a vector (one row or one column), got {}x{}",
                m.rows(),
                m.cols()
            ),
        ));
    }
    if m.cols() == 1 {
        Ok((0..m.rows()).map(|i| m.get(i, 0)).collect())
    } else {
        Ok(m.row(0).to_vec())
    }
}

/// Parses a vector and requires every entry to be finite.
pub fn parse_finite_vector(input: &str) -> crate::error::Result<Vec<Rational>> {
    let v = parse_vector(input)?;
    v.iter()
        .enumerate()
        .map(|(i, s)| {
            s.as_finite()
                .ok_or(crate::error::Error::NotFinite { row: i, col: 0 })
        })
        .collect()
}

/// Writes a matrix in the text format; output re-parses to the identical
/// matrix.
pub fn write_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|s| s.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_finite_matrix(m: &FiniteMatrix) -> String {
    write_matrix(&Matrix::from(m.clone()))
}

/// Renders a rational vector as comma-separated exact literals.
pub fn format_rational_vec(v: &[Rational]) -> String {
    v.iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_scalar_vec(v: &[Scalar]) -> String {
    v.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_matrix(self))
    }
}

impl fmt::Display for FiniteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_finite_matrix(self))
    }
}
