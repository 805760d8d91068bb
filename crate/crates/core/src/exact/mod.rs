//! Exact scalars, polynomials, rational functions and dense matrices.

mod boolean;
mod matrix;
mod poly;
mod ratfun;
mod rational;
mod recurrence;

pub use boolean::{distinct_rows, join_irreducible_rows, Boolean};
pub use matrix::{Matrix, RowEchelon, Semiring};
pub use poly::Polynomial;
pub use ratfun::{partial_fractions, PartialFractions, PoleTerm, RationalFunction};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use recurrence::{fit_linear_recurrence, series_to_rational_function, Recurrence};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("no linear recurrence of order <= {max_order}")]
    NoRecurrence { max_order: usize },
    #[error("sequence of length {len} too short for order {max_order}")]
    SequenceTooShort { len: usize, max_order: usize },
    #[error("denominator does not split into linear factors over the rationals")]
    NonSplitDenominator,
    #[error("denominator vanishes at T = 0")]
    SingularAtZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
}
