use std::fmt;

use num_rational::BigRational;

use super::{RatFunc, RingError};

/// A value tagged with its evaluation mode, for reporting and I/O.
///
/// Internally all computations are generic over [`super::Field`]; this
/// enum is the boundary type where the mode is only known at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(RatFunc),
    Eval(BigRational),
}

impl Scalar {
    pub fn mode(&self) -> &'static str {
        match self {
            Scalar::Exact(_) => "exact",
            Scalar::Eval(_) => "eval",
        }
    }

    fn check_same_mode(&self, other: &Scalar) -> Result<(), RingError> {
        if self.mode() == other.mode() {
            Ok(())
        } else {
            Err(RingError::ModeMismatch)
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.check_same_mode(other)?;
        Ok(match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.add_ref(b)),
            (Scalar::Eval(a), Scalar::Eval(b)) => Scalar::Eval(a + b),
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.check_same_mode(other)?;
        Ok(match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.mul_ref(b)),
            (Scalar::Eval(a), Scalar::Eval(b)) => Scalar::Eval(a * b),
            _ => unreachable!(),
        })
    }

    pub fn try_eq(&self, other: &Scalar) -> Result<bool, RingError> {
        self.check_same_mode(other)?;
        Ok(self == other)
    }

    pub fn to_text(&self) -> String {
        match self {
            Scalar::Exact(r) => r.to_text(),
            Scalar::Eval(q) => q.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<RatFunc> for Scalar {
    fn from(r: RatFunc) -> Self {
        Scalar::Exact(r)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Eval(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    #[test]
    fn mixing_modes_is_an_error() {
        let x = Scalar::Exact(RatFunc::var(Var::T));
        let y = Scalar::Eval(BigRational::from_integer(2.into()));
        assert_eq!(x.try_add(&y), Err(RingError::ModeMismatch));
        assert_eq!(y.try_mul(&x), Err(RingError::ModeMismatch));
        assert!(y.try_add(&y).is_ok());
    }
}
