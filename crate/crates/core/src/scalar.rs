//! Exact scalar arithmetic.
//!
//! Every coefficient and matrix entry in this crate is a [`Scalar`]: an
//! arbitrary-precision rational. Nothing in the library rounds, so every
//! identity is checked with equality rather than a tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Arbitrary precision, no overflow.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

/// Converts an integer-valued scalar to `i64`, if it fits.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    if !is_integer(s) {
        return None;
    }
    s.numer().to_i64()
}

/// Renders a scalar the way the reports want it: `3`, `-1`, `5/2`.
pub fn display(s: &Scalar) -> String {
    if is_integer(s) {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}
