//! Batch CLI over the maxplus library.
//!
//! Commands read matrices and vectors in the shared text format and
//! report results either as human-readable text or as line-oriented
//! `key=value` records (`--format structured`). Output is exact by
//! default: values print as rationals, never as floats. `--decimal` opts
//! into decimal rendering with rounded values marked `~`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use maxplus::iip::{self, IipOutcome, SolveOptions};
use maxplus::io::{self, format_rational_vec, format_scalar_vec};
use maxplus::matrix::vec_le;
use maxplus::oracle::{self, OracleBudget};
use maxplus::spectral;
use maxplus::{assignment, onesided, Error, FiniteMatrix, Matrix, Rational};

/// Exit codes: 0 answered (witness, empty, solvable or unsolvable are all
/// answers), 1 I/O or internal failure, 2 usage, then one code per error
/// class.
const EXIT_PARSE: u8 = 10;
const EXIT_SHAPE: u8 = 11;
const EXIT_PRECONDITION: u8 = 12;
const EXIT_UNSUPPORTED: u8 = 13;
const EXIT_BUDGET: u8 = 14;

#[derive(Parser)]
#[command(
    name = "maxplus",
    about = "Exact max-plus linear algebra and integer-image solvers",
    version
)]
struct Cli {
    /// Output mode: human-readable text or key=value records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Candidate budget for the oracle and the submatrix search.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u128,

    /// Render values as decimals. Non-terminating values are rounded and
    /// marked with `~`; the default exact rational output never is.
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Command,
}

/// Decimal rendering for `--decimal`: exact when the expansion
/// terminates within the printed digits, otherwise rounded and marked.
fn decimal_string(r: Rational) -> String {
    const PLACES: u32 = 6;
    if r.is_integer() {
        return r.to_string();
    }
    let scale: i128 = 10i128.pow(PLACES);
    let num = r.numer();
    let den = r.denom();
    // Round half away from zero: (2*num*scale + sign*den) / (2*den) with
    // truncating division.
    let Some(doubled) = num
        .checked_mul(scale * 2)
        .and_then(|v| v.checked_add(num.signum() * den))
    else {
        return format!("~{r}");
    };
    let scaled = doubled / (2 * den);
    let exact = Rational::new(scaled, scale) == r;
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.abs();
    let whole = abs / scale;
    let mut frac = format!("{:06}", abs % scale);
    while frac.ends_with('0') {
        frac.pop();
    }
    let marker = if exact { "" } else { "~" };
    if frac.is_empty() {
        format!("{marker}{sign}{whole}")
    } else {
        format!("{marker}{sign}{whole}.{frac}")
    }
}

/// Value formatting under the selected output style.
#[derive(Clone, Copy)]
struct Style {
    decimal: bool,
}

impl Style {
    fn rat(&self, r: Rational) -> String {
        if self.decimal {
            decimal_string(r)
        } else {
            r.to_string()
        }
    }

    fn vec(&self, v: &[Rational]) -> String {
        if self.decimal {
            v.iter()
                .map(|r| decimal_string(*r))
                .collect::<Vec<_>>()
                .join(",")
        } else {
            format_rational_vec(v)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum cycle mean of a square matrix, with a witness cycle.
    Mcm { matrix: PathBuf },
    /// Kleene star (strong transitive closure) of a square matrix.
    Star { matrix: PathBuf },
    /// Column fractional-part profile: typical / uniform / almost uniform.
    Classify { matrix: PathBuf },
    /// Max-algebraic permanent, one optimal permutation and uniqueness.
    Perm { matrix: PathBuf },
    /// Solve the one-sided system A(x)x = b.
    Solve { matrix: PathBuf, rhs: PathBuf },
    /// Solve A(x)x = b under the bound x <= d.
    SolveBounded {
        matrix: PathBuf,
        rhs: PathBuf,
        bound: PathBuf,
    },
    /// Principal eigenvalue, and the eigenspace generator when strongly
    /// definite.
    Eigen { matrix: PathBuf },
    /// Integer eigenvector of a strongly definite matrix.
    IntEigen { matrix: PathBuf },
    /// Decide whether some x makes A(x)x integer.
    Iip {
        matrix: PathBuf,
        /// Force the exceptional row (1-based) of the almost-column-uniform
        /// method.
        #[arg(long)]
        exceptional_row: Option<usize>,
    },
    /// Brute-force integer-image decision (ground truth, budgeted).
    IipOracle { matrix: PathBuf },
    /// Exact range of c^T(x)x over the solutions of a^T(x)x = b (x <= d).
    Range {
        a: PathBuf,
        b: String,
        c: PathBuf,
        d: Option<PathBuf>,
    },
    /// Machine start times for given completion times, or integer
    /// completion times with --integer.
    Schedule {
        matrix: PathBuf,
        #[arg(required_unless_present = "integer", conflicts_with = "integer")]
        rhs: Option<PathBuf>,
        /// Ask for integer completion times instead of exact deadlines.
        #[arg(long)]
        integer: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(()) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(String),
    Lib(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(msg) => f.write_str(msg),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::ParseError> for CliError {
    fn from(e: io::ParseError) -> Self {
        CliError::Lib(Error::Parse(e))
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Lib(e) => match e {
                Error::Parse(_) => EXIT_PARSE,
                Error::Shape(_) => EXIT_SHAPE,
                Error::NotFinite { .. } | Error::Precondition(_) => EXIT_PRECONDITION,
                Error::UnsupportedInstance => EXIT_UNSUPPORTED,
                Error::Budget { .. } => EXIT_BUDGET,
            },
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix, CliError> {
    Ok(io::parse_matrix(&read_file(path)?)?)
}

fn load_finite_matrix(path: &Path) -> Result<FiniteMatrix, CliError> {
    Ok(io::parse_finite_matrix(&read_file(path)?)?)
}

fn load_finite_vector(path: &Path) -> Result<Vec<Rational>, CliError> {
    Ok(io::parse_finite_vector(&read_file(path)?)?)
}

fn run(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    let fmt = cli.format;
    let style = Style {
        decimal: cli.decimal,
    };
    match &cli.command {
        Command::Mcm { matrix } => cmd_mcm(&load_matrix(matrix)?, fmt, style, out),
        Command::Star { matrix } => cmd_star(&load_matrix(matrix)?, fmt, out),
        Command::Classify { matrix } => cmd_classify(&load_finite_matrix(matrix)?, fmt, out),
        Command::Perm { matrix } => cmd_perm(&load_finite_matrix(matrix)?, fmt, style, out),
        Command::Solve { matrix, rhs } => cmd_solve(
            &load_finite_matrix(matrix)?,
            &load_finite_vector(rhs)?,
            fmt,
            style,
            out,
        ),
        Command::SolveBounded { matrix, rhs, bound } => cmd_solve_bounded(
            &load_finite_matrix(matrix)?,
            &load_finite_vector(rhs)?,
            &load_finite_vector(bound)?,
            fmt,
            style,
            out,
        ),
        Command::Eigen { matrix } => cmd_eigen(&load_matrix(matrix)?, fmt, style, out),
        Command::IntEigen { matrix } => {
            cmd_int_eigen(&load_finite_matrix(matrix)?, fmt, style, out)
        }
        Command::Iip {
            matrix,
            exceptional_row,
        } => {
            let a = load_finite_matrix(matrix)?;
            let exceptional = match exceptional_row {
                Some(0) => return Err(Error::precondition("--exceptional-row is 1-based").into()),
                Some(r) => Some(r - 1),
                None => None,
            };
            let opts = SolveOptions {
                budget: OracleBudget::new(cli.budget),
                exceptional_row: exceptional,
            };
            let solved = iip::solve(&a, &opts)?;
            emit_iip(
                &solved.outcome,
                &solved.algorithm.to_string(),
                fmt,
                style,
                out,
            );
            Ok(())
        }
        Command::IipOracle { matrix } => {
            let a = load_finite_matrix(matrix)?;
            let outcome = oracle::oracle_iip(&a, &OracleBudget::new(cli.budget))?;
            emit_iip(&outcome, "oracle", fmt, style, out);
            Ok(())
        }
        Command::Range { a, b, c, d } => {
            let a = load_finite_vector(a)?;
            let b = io::parse_rational(b)
                .map_err(|msg| CliError::Io(format!("invalid rational `{b}`: {msg}")))?;
            let c = load_finite_vector(c)?;
            let d = match d {
                Some(path) => Some(load_finite_vector(path)?),
                None => None,
            };
            cmd_range(&a, b, &c, d.as_deref(), fmt, style, out)
        }
        Command::Schedule {
            matrix,
            rhs,
            integer,
        } => {
            if *integer {
                let a = load_finite_matrix(matrix)?;
                cmd_schedule_integer(&a, cli.budget, fmt, style, out)
            } else {
                let a = load_finite_matrix(matrix)?;
                let b = load_finite_vector(rhs.as_ref().expect("clap enforces rhs"))?;
                cmd_schedule(&a, &b, fmt, style, out)
            }
        }
    }
}

fn cycle_display(cycle: &[usize]) -> String {
    let mut parts: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
    parts.push((cycle[0] + 1).to_string());
    parts.join("->")
}

fn emit_matrix(m: &Matrix, fmt: Format, out: &mut String) {
    match fmt {
        Format::Human => {
            let _ = write!(out, "{}", io::write_matrix(m));
        }
        Format::Structured => {
            let _ = writeln!(out, "rows={}", m.rows());
            let _ = writeln!(out, "cols={}", m.cols());
            for i in 0..m.rows() {
                let _ = writeln!(out, "row{i}={}", format_scalar_vec(m.row(i)));
            }
        }
    }
}

fn cmd_mcm(a: &Matrix, fmt: Format, style: Style, out: &mut String) -> Result<(), CliError> {
    let res = spectral::max_cycle_mean(a)?;
    let lambda = match res.lambda.as_finite() {
        Some(r) => style.rat(r),
        None => "*".to_string(),
    };
    match fmt {
        Format::Human => {
            let _ = writeln!(out, "maximum cycle mean: {}", lambda);
            match &res.witness {
                Some(c) => {
                    let _ = writeln!(out, "witness cycle: {}", cycle_display(c));
                }
                None => {
                    let _ = writeln!(out, "witness cycle: none (acyclic)");
                }
            }
        }
        Format::Structured => {
            let _ = writeln!(out, "lambda={}", lambda);
            if let Some(c) = &res.witness {
                let _ = writeln!(out, "cycle={}", cycle_display(c));
            }
        }
    }
    Ok(())
}

fn cmd_star(a: &Matrix, fmt: Format, out: &mut String) -> Result<(), CliError> {
    let star = spectral::kleene_star(a)?;
    emit_matrix(&star, fmt, out);
    Ok(())
}

fn cmd_classify(a: &FiniteMatrix, fmt: Format, out: &mut String) -> Result<(), CliError> {
    let p = iip::classify(a);
    let classes: Vec<&str> = (0..a.cols())
        .map(|j| {
            if p.uniform_columns_flags[j] && p.typical_columns[j] {
                "both"
            } else if p.uniform_columns_flags[j] {
                "uniform"
            } else if p.typical_columns[j] {
                "typical"
            } else {
                "mixed"
            }
        })
        .collect();
    match fmt {
        Format::Human => {
            let _ = writeln!(out, "columns: {}", classes.join(", "));
            let _ = writeln!(out, "column typical: {}", p.column_typical);
            let _ = writeln!(out, "column uniform: {}", p.column_uniform);
            match p.almost_uniform_row {
                Some(r) => {
                    let _ = writeln!(
                        out,
                        "almost column uniform: yes (exceptional row {})",
                        r + 1
                    );
                }
                None => {
                    let _ = writeln!(out, "almost column uniform: no");
                }
            }
        }
        Format::Structured => {
            let _ = writeln!(out, "columns={}", classes.join(","));
            let _ = writeln!(out, "column_typical={}", p.column_typical);
            let _ = writeln!(out, "column_uniform={}", p.column_uniform);
            let _ = writeln!(
                out,
                "almost_uniform_row={}",
                p.almost_uniform_row
                    .map(|r| (r + 1).to_string())
                    .unwrap_or_else(|| "none".to_string())
            );
        }
    }
    Ok(())
}

fn cmd_perm(a: &FiniteMatrix, fmt: Format, style: Style, out: &mut String) -> Result<(), CliError> {
    let res = assignment::permanent_and_ap(a)?;
    let perm: Vec<String> = res
        .optimal_perm
        .iter()
        .map(|j| (j + 1).to_string())
        .collect();
    match fmt {
        Format::Human => {
            let _ = writeln!(out, "permanent: {}", style.rat(res.value));
            let _ = writeln!(out, "optimal permutation: {}", perm.join(","));
            let _ = writeln!(out, "unique optimum: {}", res.unique);
        }
        Format::Structured => {
            let _ = writeln!(out, "value={}", style.rat(res.value));
            let _ = writeln!(out, "perm={}", perm.join(","));
            let _ = writeln!(out, "unique={}", res.unique);
        }
    }
    Ok(())
}

fn cmd_solve(
    a: &FiniteMatrix,
    b: &[Rational],
    fmt: Format,
    style: Style,
    out: &mut String,
) -> Result<(), CliError> {
    let sol = onesided::solve_one_sided(a, b)?;
    let status = if sol.solvable {
        "solvable"
    } else {
        "unsolvable"
    };
    match fmt {
        Format::Human => {
            let _ = writeln!(out, "status: {status}");
            let _ = writeln!(out, "greatest sub-solution xbar: {}", style.vec(&sol.xbar));
            for (j, mj) in sol.mj_sets.iter().enumerate() {
                let rows: Vec<String> = mj.iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(
                    out,
                    "tight rows for column {}: {{{}}}",
                    j + 1,
                    rows.join(",")
                );
            }
            if sol.solvable {
                let _ = writeln!(
                    out,
                    "solution set: all x <= xbar whose tight columns cover every row"
                );
            } else {
                let uncovered: Vec<String> = sol
                    .uncovered_rows(a.rows())
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect();
                let _ = writeln!(out, "uncovered rows: {{{}}}", uncovered.join(","));
            }
        }
        Format::Structured => {
            let _ = writeln!(out, "status={status}");
            let _ = writeln!(out, "xbar={}", style.vec(&sol.xbar));
            for (j, mj) in sol.mj_sets.iter().enumerate() {
                let rows: Vec<String> = mj.iter().map(|i| (i + 1).to_string()).collect();
                let _ = writeln!(out, "m{}={}", j + 1, rows.join(","));
            }
            if !sol.solvable {
                let uncovered: Vec<String> = sol
                    .uncovered_rows(a.rows())
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect();
                let _ = writeln!(out, "uncovered={}", uncovered.join(","));
            }
        }
    }
    Ok(())
}

fn cmd_solve_bounded(
    a: &FiniteMatrix,
    b: &[Rational],
    d: &[Rational],
    fmt: Format,
    style: Style,
    out: &mut String,
) -> Result<(), CliError> {
    match onesided::solve_bounded(a, b, d)? {
        Some(z) => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: witness");
                let _ = writeln!(out, "x: {}", style.vec(&z));
            }
            Format::Structured => {
                let _ = writeln!(out, "status=witness");
                let _ = writeln!(out, "x={}", style.vec(&z));
            }
        },
        None => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: empty (no solution with x <= d)");
            }
            Format::Structured => {
                let _ = writeln!(out, "status=empty");
            }
        },
    }
    Ok(())
}

fn cmd_eigen(a: &Matrix, fmt: Format, style: Style, out: &mut String) -> Result<(), CliError> {
    let eig = spectral::principal_eigen(a)?;
    let lambda = match eig.lambda.as_finite() {
        Some(r) => style.rat(r),
        None => "*".to_string(),
    };
    match fmt {
        Format::Human => {
            let _ = writeln!(out, "principal eigenvalue: {}", lambda);
            match &eig.generator {
                Some(g) => {
                    let _ = writeln!(
                        out,
                        "eigenspace generator (max-plus combinations of the columns):"
                    );
                    let _ = write!(out, "{}", io::write_matrix(g));
                }
                None => {
                    let _ = writeln!(out, "matrix is not strongly definite: no generator form");
                }
            }
        }
        Format::Structured => {
            let _ = writeln!(out, "lambda={}", lambda);
            let _ = writeln!(out, "strongly_definite={}", eig.generator.is_some());
            if let Some(g) = &eig.generator {
                emit_matrix(g, fmt, out);
            }
        }
    }
    Ok(())
}

fn cmd_int_eigen(
    a: &FiniteMatrix,
    fmt: Format,
    style: Style,
    out: &mut String,
) -> Result<(), CliError> {
    match spectral::integer_eigen(a)? {
        Some(w) => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: witness");
                let _ = writeln!(out, "integer eigenvector: {}", style.vec(&w.sample));
                let _ = writeln!(out, "generator (apply to any integer vector):");
                let _ = write!(out, "{}", io::write_finite_matrix(&w.generator));
            }
            Format::Structured => {
                let _ = writeln!(out, "status=witness");
                let _ = writeln!(out, "x={}", style.vec(&w.sample));
                emit_matrix(&Matrix::from(w.generator), fmt, out);
            }
        },
        None => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: empty (no integer eigenvector)");
            }
            Format::Structured => {
                let _ = writeln!(out, "status=empty");
            }
        },
    }
    Ok(())
}

fn emit_iip(outcome: &IipOutcome, algorithm: &str, fmt: Format, style: Style, out: &mut String) {
    match outcome {
        IipOutcome::Witness { x, y } => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: witness (algorithm: {algorithm})");
                let _ = writeln!(out, "x: {}", style.vec(x));
                let _ = writeln!(out, "y = A(x)x: {}", style.vec(y));
            }
            Format::Structured => {
                let _ = writeln!(out, "status=witness");
                let _ = writeln!(out, "algorithm={algorithm}");
                let _ = writeln!(out, "x={}", style.vec(x));
                let _ = writeln!(out, "y={}", style.vec(y));
            }
        },
        IipOutcome::Empty { reason } => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: empty (algorithm: {algorithm})");
                let _ = writeln!(out, "reason: {reason}");
            }
            Format::Structured => {
                let _ = writeln!(out, "status=empty");
                let _ = writeln!(out, "algorithm={algorithm}");
                let _ = writeln!(out, "reason={reason}");
            }
        },
    }
}

fn cmd_range(
    a: &[Rational],
    b: Rational,
    c: &[Rational],
    d: Option<&[Rational]>,
    fmt: Format,
    style: Style,
    out: &mut String,
) -> Result<(), CliError> {
    let res = onesided::functional_range(a, b, c, d)?;
    match res.interval.bounds() {
        Some((lo, hi)) => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: nonempty");
                let _ = writeln!(out, "range: [{}, {}]", style.rat(lo), style.rat(hi));
                let _ = writeln!(
                    out,
                    "attained at: {} (lower), {} (upper)",
                    style.vec(res.lo_witness.as_ref().unwrap()),
                    style.vec(res.hi_witness.as_ref().unwrap())
                );
            }
            Format::Structured => {
                let _ = writeln!(out, "status=nonempty");
                let _ = writeln!(out, "lo={}", style.rat(lo));
                let _ = writeln!(out, "hi={}", style.rat(hi));
                let _ = writeln!(
                    out,
                    "lo_witness={}",
                    style.vec(res.lo_witness.as_ref().unwrap())
                );
                let _ = writeln!(
                    out,
                    "hi_witness={}",
                    style.vec(res.hi_witness.as_ref().unwrap())
                );
            }
        },
        None => match fmt {
            Format::Human => {
                let _ = writeln!(out, "status: empty (no solution under the bound)");
            }
            Format::Structured => {
                let _ = writeln!(out, "status=empty");
            }
        },
    }
    Ok(())
}

fn cmd_schedule(
    a: &FiniteMatrix,
    b: &[Rational],
    fmt: Format,
    style: Style,
    out: &mut String,
) -> Result<(), CliError> {
    let sol = onesided::solve_one_sided(a, b)?;
    let completion = a.mp_vec(&sol.xbar)?;
    let status = if sol.solvable { "exact" } else { "infeasible" };
    match fmt {
        Format::Human => {
            let _ = writeln!(
                out,
                "latest start times meeting every deadline: {}",
                style.vec(&sol.xbar)
            );
            let _ = writeln!(out, "completion times: {}", style.vec(&completion));
            if sol.solvable {
                let _ = writeln!(out, "every product completes exactly on time");
            } else {
                for i in 0..a.rows() {
                    if completion[i] != b[i] {
                        let _ = writeln!(
                            out,
                            "product {} completes at {} but is due {} (early by {})",
                            i + 1,
                            style.rat(completion[i]),
                            style.rat(b[i]),
                            style.rat(b[i] - completion[i])
                        );
                    }
                }
                let _ = writeln!(
                    out,
                    "no start times hit every deadline exactly; shown times are the latest that miss none"
                );
            }
        }
        Format::Structured => {
            let _ = writeln!(out, "status={status}");
            let _ = writeln!(out, "x={}", style.vec(&sol.xbar));
            let _ = writeln!(out, "completion={}", style.vec(&completion));
            if !sol.solvable {
                let uncovered: Vec<String> = sol
                    .uncovered_rows(a.rows())
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect();
                let _ = writeln!(out, "uncovered={}", uncovered.join(","));
            }
        }
    }
    debug_assert!(vec_le(&completion, b));
    Ok(())
}

fn cmd_schedule_integer(
    a: &FiniteMatrix,
    budget: u128,
    fmt: Format,
    style: Style,
    out: &mut String,
) -> Result<(), CliError> {
    let opts = SolveOptions {
        budget: OracleBudget::new(budget),
        exceptional_row: None,
    };
    let solved = iip::solve(a, &opts)?;
    match (&solved.outcome, fmt) {
        (IipOutcome::Witness { x, y }, Format::Human) => {
            let _ = writeln!(out, "start times: {}", style.vec(x));
            let _ = writeln!(out, "integer completion times: {}", style.vec(y));
            let _ = writeln!(out, "(algorithm: {})", solved.algorithm);
        }
        (IipOutcome::Empty { reason }, Format::Human) => {
            let _ = writeln!(out, "no start times give integer completion times");
            let _ = writeln!(out, "(algorithm: {}, reason: {reason})", solved.algorithm);
        }
        _ => emit_iip(
            &solved.outcome,
            &solved.algorithm.to_string(),
            fmt,
            style,
            out,
        ),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_cli() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn cycle_rendering_closes_loop() {
        assert_eq!(cycle_display(&[0, 1]), "1->2->1");
        assert_eq!(cycle_display(&[2]), "3->3");
    }

    #[test]
    fn decimal_rendering() {
        let r = Rational::new;
        assert_eq!(decimal_string(r(1, 2)), "0.5");
        assert_eq!(decimal_string(r(-9, 10)), "-0.9");
        assert_eq!(decimal_string(r(7, 1)), "7");
        assert_eq!(decimal_string(r(22, 7)), "~3.142857");
        assert_eq!(decimal_string(r(-22, 7)), "~-3.142857");
        assert_eq!(decimal_string(r(1, 3)), "~0.333333");
        assert_eq!(decimal_string(r(2, 3)), "~0.666667");
    }

    #[test]
    fn exit_codes_are_distinct() {
        let codes = [
            CliError::Io("x".into()).exit_code(),
            CliError::Lib(Error::Parse(maxplus::io::ParseError {
                line: 1,
                col: 1,
                msg: "x".into(),
            }))
            .exit_code(),
            CliError::Lib(Error::shape("x")).exit_code(),
            CliError::Lib(Error::precondition("x")).exit_code(),
            CliError::Lib(Error::UnsupportedInstance).exit_code(),
            CliError::Lib(Error::Budget {
                needed: 2,
                budget: 1,
            })
            .exit_code(),
        ];
        let mut sorted = codes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), codes.len());
    }
}
