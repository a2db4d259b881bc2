//! Exact-arithmetic engine for an integrable six-vertex model and the four
//! families of deformed Grothendieck symmetric polynomials attached to its
//! wavefunctions.
//!
//! Every computation is generic over [`ring::Field`]. Instantiate with
//! [`ring::RatFunc`] for symbolic results or with [`ring::BigRational`] to
//! evaluate at a rational point.

pub mod dwbp;
pub mod lattice;
pub mod ring;
pub mod sympoly;
pub mod verify;

use thiserror::Error;

pub use ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
    #[error("coincident spectral parameters: {0}")]
    Coincident(String),
    #[error("size mismatch: {0}")]
    Size(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
