//! Sparse multivariate polynomials over an exact field and the operators
//! acting on them.

mod operators;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::scalars::AlphaRational;

pub use operators::*;
pub use series::*;

/// Exponent vector of a monomial; its length is the ambient variable count.
pub type Exponents = Vec<u32>;

/// A polynomial in `z_1 … z_N` stored as a lexicographically ordered term map.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C> {
    n: usize,
    terms: BTreeMap<Exponents, C>,
}

/// Polynomials with coefficients in Q(α).
pub type MultiPoly = Poly<AlphaRational>;
/// Polynomials with exact rational coefficients (α specialized).
pub type QPoly = Poly<Rational>;

impl<C: Field> Poly<C> {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn monomial(exps: Exponents, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The variable `z_i` (1-based).
    pub fn variable(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Ok(Self::monomial(e, C::one()))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponents, C)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "monomial length must equal the ambient N");
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    pub fn coeff_or_zero(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Accumulate `c · z^exps`, pruning a cancelled coefficient.
    pub fn add_term(&mut self, exps: Exponents, c: C) {
        debug_assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.times(s))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Apply a fallible coefficient map (e.g. specialization of α).
    pub fn try_map_coeffs<D: Field>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Poly<D>> {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        self.try_map_coeffs(|c| Ok(f(c))).expect("infallible map")
    }

    /// Value with every variable set to one.
    pub fn eval_at_ones(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc.plus(c))
    }

    pub fn eval(&self, point: &[C]) -> Result<C> {
        if point.len() != self.n {
            return Err(Error::AmbientMismatch(self.n, point.len()));
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t.times(x);
                }
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// Total degree of the highest term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &C)> {
        self.terms.iter().next_back()
    }

    /// Rename variables: variable `k` becomes variable `perm[k]` (0-based).
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.n];
            for (k, &x) in e.iter().enumerate() {
                ne[perm[k]] = x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Set the last variable to zero and drop it from the ambient space.
    pub fn drop_last_variable(&self) -> Self {
        assert!(self.n >= 1);
        let mut out = Self::zero(self.n - 1);
        for (e, c) in &self.terms {
            if e[self.n - 1] == 0 {
                out.add_term(e[..self.n - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// Append `extra` variables that do not occur.
    pub fn extend_variables(&self, extra: usize) -> Self {
        let mut out = Self::zero(self.n + extra);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.resize(self.n + extra, 0);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Ratio `c` with `self = c · other`, if one exists. Both zero gives `None`.
    pub fn proportionality(&self, other: &Self) -> Option<C> {
        if self.n != other.n || self.len() != other.len() {
            return None;
        }
        let (e0, c0) = other.terms.iter().next()?;
        let ratio = self.coeff(e0)?.quotient(c0).ok()?;
        if *self == other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    /// Render with a variable prefix, largest monomial first.
    pub fn display_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("{var}{}", i + 1)
                    } else {
                        format!("{var}{}^{k}", i + 1)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (negative, mag) = split_sign(c);
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format_term(&mag, &mono));
        }
        out
    }
}

/// Split a coefficient into a sign and a magnitude whose rendering does not
/// start with `-`.
pub(crate) fn split_sign<C: Field>(c: &C) -> (bool, C) {
    let s = c.to_string();
    let neg = c.negated();
    if s.starts_with('-') && !neg.to_string().starts_with('-') {
        (true, neg)
    } else {
        (false, c.clone())
    }
}

/// `coeff mono` with the coefficient elided when it is one and wrapped in
/// parentheses unless it is a bare integer.
pub(crate) fn format_term<C: Field>(coeff: &C, mono: &str) -> String {
    let cs = coeff.to_string();
    let bare = cs.chars().all(|ch| ch.is_ascii_digit());
    match (mono.is_empty(), coeff.is_one()) {
        (true, _) => cs,
        (false, true) => mono.to_string(),
        (false, false) if bare => format!("{cs} {mono}"),
        (false, false) => format!("({cs}) {mono}"),
    }
}

impl<C: Field> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("z"))
    }
}

impl<C: Field> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.checked_add(rhs).expect("ambient mismatch")
    }
}

impl<C: Field> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.checked_sub(rhs).expect("ambient mismatch")
    }
}

impl<C: Field> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.checked_mul(rhs).expect("ambient mismatch")
    }
}

impl<C: Field> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.negated()
    }
}

impl MultiPoly {
    /// Specialize α to an exact rational.
    pub fn eval_alpha(&self, alpha0: &Rational) -> Result<QPoly> {
        self.try_map_coeffs(|c| c.eval_at(alpha0))
    }

    /// Substitute α ↦ α/(α+1) in every coefficient.
    pub fn at_shifted_alpha(&self) -> MultiPoly {
        self.map_coeffs(|c| c.at_shifted_alpha())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    exp: Exponents,
    coeff: C,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr<C> {
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<TermRepr<C>>,
}

impl<C: Field + Serialize> Serialize for Poly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Field + Deserialize<'de>> Deserialize<'de> for Poly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::<C>::deserialize(d)?;
        let mut p = Poly::zero(repr.n);
        for t in repr.terms {
            if t.exp.len() != repr.n {
                return Err(D::Error::custom(format!(
                    "monomial {:?} does not have length {}",
                    t.exp, repr.n
                )));
            }
            p.add_term(t.exp, t.coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(n, i).unwrap()
    }

    #[test]
    fn ring_examples() {
        let (z1, z2) = (z(2, 1), z(2, 2));
        let prod = &(&z1 + &z2) * &(&z1 - &z2);
        assert_eq!(prod, &(&z1 * &z1) - &(&z2 * &z2));
        let f = &z1 + &z2;
        assert!((&f + &f.negated()).is_zero());
        let s = z1.scale(&AlphaRational::alpha());
        assert_eq!(s.coeff(&[1, 0]), Some(&AlphaRational::alpha()));
        assert_eq!(z(3, 1).checked_add(&z1), Err(Error::AmbientMismatch(3, 2)));
        assert!(MultiPoly::variable(2, 3).is_err());
    }

    #[test]
    fn display_and_json() {
        let e = MultiPoly::from_terms(
            2,
            [
                (vec![1, 0], AlphaRational::one()),
                (vec![0, 1], "1/(α+1)".parse().unwrap()),
            ],
        );
        assert_eq!(e.to_string(), "z1 + (1/(α+1)) z2");
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"N":2,"terms":[{"exp":[0,1],"coeff":{"num":[1],"den":[1,1]}},{"exp":[1,0],"coeff":{"num":[1],"den":[1]}}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<MultiPoly>(
            r#"{"N":2,"terms":[{"exp":[1],"coeff":{"num":[1],"den":[1]}}]}"#
        )
        .is_err());
        let neg = &z(2, 1) - &z(2, 2).scale(&AlphaRational::from_int(2));
        assert_eq!(neg.to_string(), "z1 - 2 z2");
        assert_eq!(MultiPoly::one(2).to_string(), "1");
    }

    #[test]
    fn proportionality_and_specialization() {
        let f = &z(2, 1) + &z(2, 2).scale(&"1/(α+1)".parse().unwrap());
        let g = f.scale(&"α^2".parse().unwrap());
        assert_eq!(g.proportionality(&f), Some("α^2".parse().unwrap()));
        assert_eq!(f.proportionality(&z(2, 1)), None);
        let at_two = f.eval_alpha(&Rational::from_i64(2)).unwrap();
        assert_eq!(at_two.coeff(&[0, 1]), Some(&Rational::new(1.into(), 3.into())));
        assert_eq!(f.eval_at_ones(), "(α+2)/(α+1)".parse().unwrap());
    }
}
