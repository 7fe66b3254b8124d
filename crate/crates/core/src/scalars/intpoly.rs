use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in α with arbitrary-precision integer coefficients.
/// `coeffs[k]` is the coefficient of α^k; no trailing zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `a·α + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        IntPoly::from_i64s(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide them exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        if c.is_one() {
            return self.clone();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo-division by zero");
        let lead = divisor.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let rl = r.lead().unwrap().clone();
            let shift = dr - dd;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lead).collect();
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                coeffs[k + shift] -= &rl * dc;
            }
            r = IntPoly::new(coeffs);
        }
        r
    }

    /// Greatest common divisor over Z[α], normalized to a positive leading
    /// coefficient. Uses the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let cont = self.content().gcd(&other.content());
        if self.is_constant() || other.is_constant() {
            return IntPoly::constant(cont);
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cont)
    }

    fn normalized_sign(&self) -> IntPoly {
        if self.lead().is_some_and(|l| l.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact quotient `self / divisor`; the division must leave no remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if divisor.is_one() {
            return self.clone();
        }
        if divisor.is_constant() {
            return self.div_scalar_exact(&divisor.coeffs[0]);
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.lead().unwrap();
        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return IntPoly::zero();
        };
        assert!(dr >= dd, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); dr - dd + 1];
        for shift in (0..=dr - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lead);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[k + shift] -= &qc * dc;
            }
            q[shift] = qc;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        IntPoly::new(q)
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers, e.g. `2α^2-α+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "α")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 1]).add(&p(&[-1, -1])), IntPoly::zero());
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[1, 1]).mul(&p(&[2, 3])).scale(&BigInt::from(6));
        let b = p(&[1, 1]).mul(&p(&[5, 1])).scale(&BigInt::from(4));
        assert_eq!(a.gcd(&b), p(&[2, 2]));
        assert_eq!(a.div_exact(&p(&[1, 1])), p(&[2, 3]).scale(&BigInt::from(6)));
        assert_eq!(p(&[-2, -4]).gcd(&IntPoly::zero()), p(&[2, 4]));
        assert_eq!(p(&[3]).gcd(&p(&[6, 9])), p(&[3]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[3, -1, 2]).to_string(), "2α^2-α+3");
        assert_eq!(p(&[1, 1]).to_string(), "α+1");
        assert_eq!(p(&[0, -1]).to_string(), "-α");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
