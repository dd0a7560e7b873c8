//! Exact max-plus (tropical) linear algebra and integer-image solvers.
//!
//! The semiring carrier is the rationals extended with `-inf`, with
//! addition `max` and multiplication `+`. Everything is computed in exact
//! rational arithmetic: the solvers branch on exact equality of fractional
//! parts and on exact integrality of row maxima, which floating point
//! cannot decide reliably.
//!
//! Modules:
//!
//! - [`rational`], [`scalar`], [`matrix`]: the arithmetic kernel.
//! - [`io`]: the shared matrix/vector text format.
//! - [`spectral`]: maximum cycle mean, Kleene star, definiteness, the
//!   principal eigenproblem and integer eigenvectors.
//! - [`assignment`]: max-algebraic permanent, optimal-permutation
//!   uniqueness and normalization to strongly definite form.
//! - [`onesided`]: one-sided systems `A(x)x = b`, bounded variants and
//!   ranges of max-linear functionals.
//! - [`iip`]: the integer image solvers and their dispatcher.
//! - [`oracle`]: brute-force ground truth for desk-scale instances.

pub mod assignment;
pub mod error;
pub mod iip;
pub mod interval;
pub mod io;
pub mod matrix;
pub mod onesided;
pub mod oracle;
pub mod rational;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use interval::ClosedInterval;
pub use matrix::{FiniteMatrix, GenPermMatrix, Matrix};
pub use rational::Rational;
pub use scalar::Scalar;
