//! Coefficient domains.
//!
//! Everything downstream is generic over [`Coefficient`], a commutative ring
//! without zero divisors. Two domains ship: [`BigInt`] (the default) and
//! [`BigRational`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with no zero divisors.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    fn is_unit(&self) -> bool;

    /// Multiplicative inverse, when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(value: i64) -> Self;

    /// Serialization used by the JSON wire forms.
    fn to_decimal(&self) -> String;

    fn from_decimal(text: &str) -> Option<Self>;

    /// Whether the value prints with a leading minus sign.
    fn is_negative(&self) -> bool;
}

impl Coefficient for BigInt {
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }

    fn to_decimal(&self) -> String {
        self.to_str_radix(10)
    }

    fn from_decimal(text: &str) -> Option<Self> {
        let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        BigInt::parse_bytes(text.as_bytes(), 10)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Rationals serialize as `p` or `p/q` in lowest terms.
impl Coefficient for BigRational {
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn to_decimal(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_str_radix(10)
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn from_decimal(text: &str) -> Option<Self> {
        match text.split_once('/') {
            None => BigInt::from_decimal(text).map(BigRational::from_integer),
            Some((numer, denom)) => {
                let numer = BigInt::from_decimal(numer)?;
                let denom = BigInt::from_decimal(denom)?;
                (!denom.is_zero()).then(|| BigRational::new(numer, denom))
            }
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}
