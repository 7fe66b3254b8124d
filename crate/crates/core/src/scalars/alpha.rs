use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};

/// An element of Q(α), kept as a reduced quotient of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` over Z[α] (content included), the
/// denominator has a positive leading coefficient, and zero is `0/1`. Two
/// values are equal iff their canonical forms are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaRational {
    num: IntPoly,
    den: IntPoly,
}

impl AlphaRational {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(IntPoly::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        AlphaRational { num, den }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        AlphaRational {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(IntPoly::from_i64s(&[v]))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(v))
    }

    pub fn from_rational(q: &Rational) -> Self {
        Self::reduce(
            IntPoly::constant(q.numer().clone()),
            IntPoly::constant(q.denom().clone()),
        )
    }

    /// The parameter α itself.
    pub fn alpha() -> Self {
        Self::from_poly(IntPoly::linear(1, 0))
    }

    /// `a·α + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(IntPoly::linear(a, b))
    }

    /// The shifted parameter α/(α+1).
    pub fn shifted_alpha() -> Self {
        Self::reduce(IntPoly::linear(1, 0), IntPoly::linear(1, 1))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational constant, if this element does not depend on α.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeffs().first().cloned().unwrap_or_default();
            Some(BigRational::new(n, self.den.coeffs()[0].clone()))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        AlphaRational {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Exact value at α = α₀.
    pub fn eval_at(&self, alpha0: &Rational) -> Result<Rational> {
        let d = self.den.eval(alpha0);
        if Field::is_zero(&d) {
            return Err(Error::Pole(alpha0.to_string()));
        }
        Ok(self.num.eval(alpha0) / d)
    }

    /// Substitute α ↦ `image` and return the canonical result.
    pub fn substitute_alpha(&self, image: &AlphaRational) -> Result<Self> {
        let horner = |p: &IntPoly| {
            let mut acc = AlphaRational::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.times(image).plus(&AlphaRational::from_bigint(c.clone()));
            }
            acc
        };
        let den = horner(&self.den);
        if Field::is_zero(&den) {
            return Err(Error::VanishingDenominator);
        }
        horner(&self.num).quotient(&den)
    }

    /// Shorthand for substituting α ↦ α/(α+1).
    pub fn at_shifted_alpha(&self) -> Self {
        self.substitute_alpha(&Self::shifted_alpha())
            .expect("α/(α+1) never annihilates a nonzero polynomial")
    }
}

impl Field for AlphaRational {
    fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    // Henrici's addition: only gcds against the common denominator part.
    fn plus(&self, other: &Self) -> Self {
        if Field::is_zero(self) {
            return other.clone();
        }
        if Field::is_zero(other) {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            return AlphaRational {
                num: self.num.mul(&other.den).add(&other.num),
                den: other.den.clone(),
            };
        }
        if other.den.is_one() {
            return AlphaRational {
                num: other.num.mul(&self.den).add(&self.num),
                den: self.den.clone(),
            };
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if num.is_zero() {
                return Self::zero();
            }
            return AlphaRational {
                num,
                den: self.den.mul(&other.den),
            };
        }
        let b = self.den.div_exact(&g);
        let d = other.den.div_exact(&g);
        let t = self.num.mul(&d).add(&other.num.mul(&b));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = t.gcd(&g);
        let (num, den) = if g2.is_one() {
            (t, b.mul(&other.den))
        } else {
            (t.div_exact(&g2), b.mul(&other.den.div_exact(&g2)))
        };
        AlphaRational { num, den }
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        if Field::is_zero(self) || Field::is_zero(other) {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1), other.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        AlphaRational { num, den }
    }

    fn negated(&self) -> Self {
        AlphaRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inverse(&self) -> Result<Self> {
        if Field::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(AlphaRational { num, den })
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&AlphaRational> for &AlphaRational {
            type Output = AlphaRational;
            fn $m(self, rhs: &AlphaRational) -> AlphaRational {
                self.$f(rhs)
            }
        }
        impl $tr<AlphaRational> for AlphaRational {
            type Output = AlphaRational;
            fn $m(self, rhs: AlphaRational) -> AlphaRational {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

/// Panics on division by zero; use [`Field::quotient`] for a checked version.
impl Div<&AlphaRational> for &AlphaRational {
    type Output = AlphaRational;
    fn div(self, rhs: &AlphaRational) -> AlphaRational {
        self.quotient(rhs).expect("division by zero in Q(α)")
    }
}

impl Div<AlphaRational> for AlphaRational {
    type Output = AlphaRational;
    fn div(self, rhs: AlphaRational) -> AlphaRational {
        &self / &rhs
    }
}

impl Neg for AlphaRational {
    type Output = AlphaRational;
    fn neg(self) -> AlphaRational {
        self.negated()
    }
}

impl Neg for &AlphaRational {
    type Output = AlphaRational;
    fn neg(self) -> AlphaRational {
        self.negated()
    }
}

impl fmt::Display for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let bare_den = self.den.is_constant()
            || (self.den.term_count() == 1 && self.den.lead().is_some_and(|l| l == &BigInt::from(1)));
        if bare_den {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl FromStr for AlphaRational {
    type Err = Error;

    /// Parses expressions in α such as `(2α+1)/α`, `2*a^2 - 3`, `1/(α+1)`.
    /// `a` and `alpha` are accepted for α; juxtaposition means multiplication.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser {
            chars: s.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in {s:?}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<AlphaRational> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.negated()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.plus(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.minus(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AlphaRational> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.times(&self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.quotient(&d)?;
                }
                Some(c) if c.is_ascii_digit() || c == '(' || c == 'α' || c == 'a' => {
                    acc = acc.times(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<AlphaRational> {
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.err("bad integer"))
    }

    fn primary(&mut self) -> Result<AlphaRational> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('α') => {
                self.pos += 1;
                Ok(AlphaRational::alpha())
            }
            Some('a') => {
                let rest: String = self.chars[self.pos..].iter().take(5).collect();
                self.pos += if rest == "alpha" { 5 } else { 1 };
                Ok(AlphaRational::alpha())
            }
            Some(c) if c.is_ascii_digit() => Ok(AlphaRational::from_bigint(self.integer()?)),
            _ => Err(self.err("expected a number, α or '('")),
        }
    }
}

/// JSON shape `{"num": [...], "den": [...]}` with index = power of α.
#[derive(Serialize, Deserialize)]
struct AlphaRepr {
    num: Vec<serde_json::Number>,
    den: Vec<serde_json::Number>,
}

fn to_numbers(p: &IntPoly) -> Vec<serde_json::Number> {
    p.coeffs()
        .iter()
        .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal"))
        .collect()
}

fn from_numbers(v: &[serde_json::Number]) -> std::result::Result<IntPoly, String> {
    v.iter()
        .map(|n| n.to_string().parse::<BigInt>().map_err(|e| format!("{n}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(IntPoly::new)
}

impl Serialize for AlphaRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlphaRepr {
            num: to_numbers(&self.num),
            den: to_numbers(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = AlphaRepr::deserialize(d)?;
        let num = from_numbers(&repr.num).map_err(D::Error::custom)?;
        let den = from_numbers(&repr.den).map_err(D::Error::custom)?;
        AlphaRational::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> AlphaRational {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn field_examples() {
        assert_eq!(q("α/(1+α)") + q("1/(1+α)"), AlphaRational::one());
        assert_eq!(q("(α+2)/(α+1)") * q("α+1"), q("α+2"));
        assert_eq!(AlphaRational::zero().inverse(), Err(Error::DivisionByZero));
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("(2α+2)/(4α+4)"), q("1/2"));
        assert_eq!(q("1/(-α)"), q("-1/α"));
        assert_eq!(q("-1/α").denom(), &IntPoly::linear(1, 0));
    }

    #[test]
    fn henrici_paths_agree_with_naive() {
        let xs = [
            "1/(α+1)",
            "α/(α+2)",
            "(α+3)/((α+1)(α+2))",
            "2α",
            "1/(2α+2)",
            "-3/7",
        ];
        for a in xs {
            for b in xs {
                let (x, y) = (q(a), q(b));
                let naive_sum = AlphaRational::new(
                    x.numer().mul(y.denom()).add(&y.numer().mul(x.denom())),
                    x.denom().mul(y.denom()),
                )
                .unwrap();
                assert_eq!(&x + &y, naive_sum, "{a} + {b}");
                let naive_prod =
                    AlphaRational::new(x.numer().mul(y.numer()), x.denom().mul(y.denom())).unwrap();
                assert_eq!(&x * &y, naive_prod, "{a} * {b}");
            }
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(q("α/(α+1)").eval_at(&rat(1, 1)).unwrap(), rat(1, 2));
        assert_eq!(q("α+2").eval_at(&rat(1, 3)).unwrap(), rat(7, 3));
        assert!(matches!(q("1/(α-1)").eval_at(&rat(1, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn substitution() {
        let s = AlphaRational::shifted_alpha();
        assert_eq!(q("α").substitute_alpha(&s).unwrap(), q("α/(α+1)"));
        assert_eq!(q("1/α").substitute_alpha(&s).unwrap(), q("(α+1)/α"));
        // (α+1)/α at α/(α+1): (α/(α+1) + 1)·(α+1)/α = (2α+1)/α
        assert_eq!(q("(α+1)/α").substitute_alpha(&s).unwrap(), q("(2α+1)/α"));
        assert_eq!(
            q("1/α").substitute_alpha(&AlphaRational::zero()),
            Err(Error::VanishingDenominator)
        );
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "α+1",
            "2/(α+1)",
            "(α+2)/(α+1)",
            "α/(α+1)",
            "1/(2α)",
            "-3/2",
            "2α^2-α+3",
            "1/α^2",
        ] {
            let x = q(s);
            assert_eq!(x.to_string(), s);
            assert_eq!(q(&x.to_string()), x);
        }
        assert_eq!(q("alpha^2 + 2*a + 1"), q("(α+1)^2"));
        assert!("α+".parse::<AlphaRational>().is_err());
        assert!("1/(α-α)".parse::<AlphaRational>().is_err());
    }

    #[test]
    fn json_shape() {
        let x = q("α/(α+1)");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"num":[0,1],"den":[1,1]}"#);
        let back: AlphaRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        let unreduced: AlphaRational = serde_json::from_str(r#"{"num":[2,2],"den":[4]}"#).unwrap();
        assert_eq!(unreduced, q("(α+1)/2"));
        assert!(serde_json::from_str::<AlphaRational>(r#"{"num":[1],"den":[]}"#).is_err());
        let big: AlphaRational =
            serde_json::from_str(r#"{"num":[123456789012345678901234567890],"den":[1]}"#).unwrap();
        assert_eq!(big.to_string(), "123456789012345678901234567890");
    }
}
