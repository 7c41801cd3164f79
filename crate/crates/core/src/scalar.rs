//! Scalar fields used throughout the crate.
//!
//! Everything is exact. The linear algebra, Laurent polynomials and truncated
//! series are generic over [`Field`]; the algebra and module code is
//! instantiated at [`Rat`], while the character theory runs over cyclotomic
//! fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational number.
pub type Rat = BigRational;

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn from_rat(r: &Rat) -> Self;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the integer value of `r` if it is integral and fits in an `i64`.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.to_integer()).ok()
}

/// `(numerator, denominator)` as decimal strings, denominator positive.
pub fn rat_parts(r: &Rat) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

pub fn parse_rat(num: &str, den: &str) -> Option<Rat> {
    let n: BigInt = num.trim().parse().ok()?;
    let d: BigInt = den.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Text form used in reports: `3`, `-1/2`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_ops() {
        let a = rat(3, 4);
        assert_eq!(a.inv(), Some(rat(4, 3)));
        assert_eq!(Rat::zero().inv(), None);
        assert_eq!(a.div(&rat(1, 2)), Some(rat(3, 2)));
        assert_eq!(rat_to_i64(&int(-7)), Some(-7));
        assert_eq!(rat_to_i64(&rat(1, 2)), None);
        assert_eq!(fmt_rat(&rat(-2, 4)), "-1/2");
        assert_eq!(parse_rat("6", "-4"), Some(rat(-3, 2)));
        assert_eq!(parse_rat("1", "0"), None);
    }
}
