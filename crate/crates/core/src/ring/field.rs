use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Matrix, RatFunc, RingError};

/// Exact scalar field used by every computation.
///
/// Two implementations exist: [`BigRational`] (evaluation at a rational
/// point) and [`RatFunc`] (symbolic). Code generic over `Field` cannot mix
/// the two.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Result<Self, RingError>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn try_div(&self, other: &Self) -> Result<Self, RingError> {
        Ok(self.clone() * &other.try_inv()?)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    /// Division that is expected to be exact in the polynomial sense.
    /// Symbolic values check the remainder; numeric values just divide.
    fn exact_quotient(&self, divisor: &Self) -> Result<Self, RingError> {
        self.try_div(divisor)
    }

    fn determinant(m: &Matrix<Self>) -> Self {
        m.det_gauss()
    }

    /// Short label for the evaluation mode.
    fn mode_name() -> &'static str;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: BigRational) -> Self {
        q
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_inv(&self) -> Result<Self, RingError> {
        if Zero::is_zero(self) {
            Err(RingError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn mode_name() -> &'static str {
        "eval"
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(q: BigRational) -> Self {
        RatFunc::constant(q)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn try_inv(&self) -> Result<Self, RingError> {
        RatFunc::try_inv(self)
    }
    fn pow(&self, e: u32) -> Self {
        RatFunc::pow(self, e)
    }
    fn exact_quotient(&self, divisor: &Self) -> Result<Self, RingError> {
        RatFunc::exact_quotient(self, divisor)
    }
    fn determinant(m: &Matrix<Self>) -> Self {
        m.det_bareiss()
    }
    fn mode_name() -> &'static str {
        "exact"
    }
}
