//! Exact arithmetic: sparse multivariate polynomials over big rationals,
//! rational functions, dense matrices with determinants, and seeded random
//! evaluation points.

mod field;
pub mod json;
mod matrix;
mod monomial;
mod poly;
mod ratfunc;
mod sample;
mod scalar;
mod var;

pub use field::Field;
pub use matrix::Matrix;
pub use monomial::Monomial;
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use sample::{random_point, random_point_with, random_rational, rng_for, MAX_RESAMPLE_ROUNDS, SAMPLE_BOUND};
pub use scalar::Scalar;
pub use var::{Var, VarTable};

pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,
    #[error("substitution produced a zero denominator")]
    ZeroDenominator,
    #[error("variable `{0}` has no value")]
    UnboundVariable(Var),
    #[error("variable table mismatch: {0}")]
    VarTableMismatch(String),
    #[error("cannot mix exact and eval scalars")]
    ModeMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("random sampling exhausted after {MAX_RESAMPLE_ROUNDS} rounds")]
    SamplingExhausted,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
