//! Exact rational arithmetic, sparse multivariate polynomials with a fixed
//! canonical form, and exact linear algebra over the rationals.
//!
//! This is the computational substrate for the whole crate. All values are
//! immutable after construction and every operation is a pure function.

mod matrix;
mod monomial;
mod parse;
mod poly;
mod ratfun;
mod rational;

pub use matrix::{normalize_kernel_vector, nullspace, rank, QMatrix};
pub use monomial::{Monomial, VarId};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use rational::{format_rational, parse_rational, rat, rat_int, Rational};

use thiserror::Error;

/// Errors from the polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatPolyError {
    /// A substitution or derivation rule did not cover a variable of the input.
    #[error("no rule for variable {0}")]
    MissingVariable(VarId),
    /// Text that does not match the polynomial grammar.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    /// Zero denominator in a rational literal or rational function.
    #[error("zero denominator")]
    ZeroDenominator,
}
