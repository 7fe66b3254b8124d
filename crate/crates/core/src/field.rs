//! The coefficient-field abstraction shared by polynomials and dense linear
//! algebra. Implemented for Q(α) and for exact rationals Q.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact field arithmetic by reference.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn quotient(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }
}

/// Exact rationals.
pub type Rational = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

/// Parse `p`, `p/q` or `-p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |e: &dyn fmt::Display| Error::Parse(format!("bad rational {s:?}: {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|e| bad(&e))?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|e| bad(&e))?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|e| bad(&e))?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("5/2").unwrap(),
            BigRational::new(5.into(), 2.into())
        );
        assert_eq!(parse_rational(" -3 ").unwrap(), Rational::from_i64(-3));
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
        assert!(parse_rational("x").is_err());
        assert_eq!(<Rational as Field>::zero().inverse(), Err(Error::DivisionByZero));
    }
}
