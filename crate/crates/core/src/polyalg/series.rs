use std::fmt;

use serde::{Serialize, Serializer};

use super::operators::antisymmetrize;
use super::{format_term, split_sign, Exponents, Poly};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalars::AlphaRational;

/// Coefficients of `(1 − t)^{−c}` through `t^D`: `c(c+1)…(c+n−1)/n!`.
pub fn binomial_series<C: Field>(c: &C, degree: u32) -> Vec<C> {
    let mut out = Vec::with_capacity(degree as usize + 1);
    let mut cur = C::one();
    out.push(cur.clone());
    for n in 1..=degree {
        let step = c
            .plus(&C::from_i64(n as i64 - 1))
            .quotient(&C::from_i64(n as i64))
            .expect("n is nonzero");
        cur = cur.times(&step);
        out.push(cur.clone());
    }
    out
}

/// A polynomial in `x_1 … x_{Nx}, y_1 … y_{Ny}` truncated to x-degree `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<C> {
    nx: usize,
    ny: usize,
    degree_bound: u32,
    poly: Poly<C>,
}

pub type AlphaBiPoly = BiPoly<AlphaRational>;

impl<C: Field> BiPoly<C> {
    pub fn zero(nx: usize, ny: usize, degree_bound: u32) -> Self {
        BiPoly {
            nx,
            ny,
            degree_bound,
            poly: Poly::zero(nx + ny),
        }
    }

    pub fn one(nx: usize, ny: usize, degree_bound: u32) -> Self {
        BiPoly {
            nx,
            ny,
            degree_bound,
            poly: Poly::one(nx + ny),
        }
    }

    /// Wrap a polynomial in the joint variables, dropping terms above the bound.
    pub fn from_poly(nx: usize, ny: usize, degree_bound: u32, poly: &Poly<C>) -> Result<Self> {
        if poly.n() != nx + ny {
            return Err(Error::AmbientMismatch(poly.n(), nx + ny));
        }
        let mut out = Self::zero(nx, ny, degree_bound);
        for (e, c) in poly.terms() {
            if out.x_degree(e) <= degree_bound {
                out.poly.add_term(e.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// `f(x) g(y)`, truncated.
    pub fn tensor(f: &Poly<C>, g: &Poly<C>, degree_bound: u32) -> Self {
        let (nx, ny) = (f.n(), g.n());
        let mut out = Self::zero(nx, ny, degree_bound);
        for (ex, cx) in f.terms() {
            if ex.iter().sum::<u32>() > degree_bound {
                continue;
            }
            for (ey, cy) in g.terms() {
                let mut e = ex.clone();
                e.extend_from_slice(ey);
                out.poly.add_term(e, cx.times(cy));
            }
        }
        out
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn poly(&self) -> &Poly<C> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn x_degree(&self, e: &[u32]) -> u32 {
        e[..self.nx].iter().sum()
    }

    /// Coefficient of `x^a y^b`.
    pub fn coeff(&self, a: &[u32], b: &[u32]) -> C {
        let mut e = a.to_vec();
        e.extend_from_slice(b);
        self.poly.coeff_or_zero(&e)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.nx != other.nx {
            return Err(Error::AmbientMismatch(self.nx, other.nx));
        }
        if self.ny != other.ny {
            return Err(Error::AmbientMismatch(self.ny, other.ny));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let bound = self.degree_bound.min(other.degree_bound);
        Self::from_poly(self.nx, self.ny, bound, &self.poly.checked_add(&other.poly)?)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    /// Truncated product; terms whose x-degree exceeds the bound are never formed.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = Self::zero(self.nx, self.ny, bound);
        for (ea, ca) in self.poly.terms() {
            let da = self.x_degree(ea);
            for (eb, cb) in other.poly.terms() {
                if da + self.x_degree(eb) > bound {
                    continue;
                }
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.poly.add_term(e, ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        BiPoly {
            poly: self.poly.negated(),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        BiPoly {
            poly: self.poly.scale(s),
            ..self.clone()
        }
    }

    /// Lower the truncation bound.
    pub fn truncate(&self, degree_bound: u32) -> Self {
        Self::from_poly(self.nx, self.ny, degree_bound.min(self.degree_bound), &self.poly)
            .expect("shape unchanged")
    }

    /// The x-polynomial multiplying `y^b`.
    pub fn extract_y(&self, b: &[u32]) -> Result<Poly<C>> {
        if b.len() != self.ny {
            return Err(Error::AmbientMismatch(b.len(), self.ny));
        }
        let mut out = Poly::zero(self.nx);
        for (e, c) in self.poly.terms() {
            if e[self.nx..] == *b {
                out.add_term(e[..self.nx].to_vec(), c.clone());
            }
        }
        Ok(out)
    }

    /// Antisymmetrize in the x variables only.
    pub fn asym_x(&self) -> Self {
        // Fold y into the coefficients by treating each y-slice separately.
        let mut out = Self::zero(self.nx, self.ny, self.degree_bound);
        let mut slices: std::collections::BTreeMap<Exponents, Poly<C>> = Default::default();
        for (e, c) in self.poly.terms() {
            slices
                .entry(e[self.nx..].to_vec())
                .or_insert_with(|| Poly::zero(self.nx))
                .add_term(e[..self.nx].to_vec(), c.clone());
        }
        for (ey, fx) in slices {
            for (ex, c) in antisymmetrize(&fx).terms() {
                let mut e = ex.clone();
                e.extend_from_slice(&ey);
                out.poly.add_term(e, c.clone());
            }
        }
        out
    }

    /// Terms in descending lexicographic order of the joint exponent.
    pub fn display_text(&self) -> String {
        if self.poly.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.poly.terms().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = if i < self.nx {
                        format!("x{}", i + 1)
                    } else {
                        format!("y{}", i - self.nx + 1)
                    };
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            let (negative, mag) = split_sign(c);
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&format_term(&mag, &mono.join("*")));
        }
        out
    }
}

impl<C: Field> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_text())
    }
}

#[derive(Serialize)]
struct BiTerm<'a, C> {
    x: &'a [u32],
    y: &'a [u32],
    coeff: &'a C,
}

impl<C: Field + Serialize> Serialize for BiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, C> {
            #[serde(rename = "Nx")]
            nx: usize,
            #[serde(rename = "Ny")]
            ny: usize,
            #[serde(rename = "D")]
            degree_bound: u32,
            terms: Vec<BiTerm<'a, C>>,
        }
        Repr {
            nx: self.nx,
            ny: self.ny,
            degree_bound: self.degree_bound,
            terms: self
                .poly
                .terms()
                .map(|(e, c)| BiTerm {
                    x: &e[..self.nx],
                    y: &e[self.nx..],
                    coeff: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// `Σ_n coeffs[n] (x_j y_k)^n` as a truncated series.
fn bilinear_factor<C: Field>(
    nx: usize,
    ny: usize,
    j: usize,
    k: usize,
    coeffs: &[C],
    degree_bound: u32,
) -> BiPoly<C> {
    let mut out = BiPoly::zero(nx, ny, degree_bound);
    for (n, c) in coeffs.iter().enumerate() {
        let mut e = vec![0; nx + ny];
        e[j] = n as u32;
        e[nx + k] = n as u32;
        out.poly.add_term(e, c.clone());
    }
    out
}

/// `∏_{j,k} (1 − x_j y_k)^{−1/param}` through x-degree `D`.
pub fn pi_truncated<C: Field>(param: &C, nx: usize, ny: usize, degree_bound: u32) -> Result<BiPoly<C>> {
    let c = C::one().quotient(param)?;
    let coeffs = binomial_series(&c, degree_bound);
    let mut out = BiPoly::one(nx, ny, degree_bound);
    for j in 0..nx {
        for k in 0..ny {
            out = out.checked_mul(&bilinear_factor(nx, ny, j, k, &coeffs, degree_bound))?;
        }
    }
    Ok(out)
}

/// `∏_j (1 − x_j y_j)^{−1}`, truncated.
pub fn diagonal_geometric<C: Field>(n: usize, degree_bound: u32) -> BiPoly<C> {
    let coeffs = binomial_series(&C::one(), degree_bound);
    let mut out = BiPoly::one(n, n, degree_bound);
    for j in 0..n {
        out = out
            .checked_mul(&bilinear_factor(n, n, j, j, &coeffs, degree_bound))
            .expect("same shape");
    }
    out
}

/// `Ω(x, y) = ∏_j (1 − x_j y_j)^{−1} · ∏_{j,k} (1 − x_j y_k)^{−1/α}`, truncated.
pub fn omega_truncated(n: usize, degree_bound: u32) -> AlphaBiPoly {
    let pi = pi_truncated(&AlphaRational::alpha(), n, n, degree_bound).expect("α is nonzero");
    diagonal_geometric(n, degree_bound)
        .checked_mul(&pi)
        .expect("same shape")
}

/// `q_η(x)`: the coefficient of `y^η` in Ω.
pub fn extract_q_eta(omega: &AlphaBiPoly, eta: &Composition) -> Result<Poly<AlphaRational>> {
    if eta.modulus() > omega.degree_bound() {
        return Err(Error::DegreeOutOfRange {
            degree: eta.modulus(),
            bound: omega.degree_bound(),
        });
    }
    omega.extract_y(eta.parts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{vandermonde, MultiPoly};

    fn q(s: &str) -> AlphaRational {
        s.parse().unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn binomial_coefficients() {
        let ones = binomial_series(&AlphaRational::one(), 4);
        assert!(ones.iter().all(|c| c.is_one()));
        let c = q("1/α");
        assert_eq!(binomial_series(&c, 2)[2], q("(1/α)*(1/α+1)/2"));
        let zero = binomial_series(&AlphaRational::zero(), 3);
        assert!(zero[0].is_one() && zero[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn omega_low_degree() {
        let om = omega_truncated(2, 1);
        assert!(om.coeff(&[0, 0], &[0, 0]).is_one());
        assert_eq!(om.coeff(&[1, 0], &[1, 0]), q("1+1/α"));
        assert_eq!(om.coeff(&[1, 0], &[0, 1]), q("1/α"));
        assert_eq!(om.poly().len(), 5);
        assert_eq!(
            extract_q_eta(&om, &comp(&[1, 0])).unwrap().coeff_or_zero(&[0, 1]),
            q("1/α")
        );
        assert_eq!(extract_q_eta(&om, &comp(&[0, 0])).unwrap(), MultiPoly::one(2));
        assert!(extract_q_eta(&om, &comp(&[2, 0])).is_err());
    }

    #[test]
    fn pi_low_degree() {
        let pi = pi_truncated(&AlphaRational::alpha(), 2, 2, 1).unwrap();
        for a in [[1, 0], [0, 1]] {
            for b in [[1, 0], [0, 1]] {
                assert_eq!(pi.coeff(&a, &b), q("1/α"));
            }
        }
    }

    #[test]
    fn cauchy_alternant() {
        for n in 2..=3usize {
            let d = 4;
            let lhs = diagonal_geometric::<AlphaRational>(n, d).asym_x();
            let dd = BiPoly::tensor(&vandermonde(n), &vandermonde(n), d);
            let rhs = dd
                .checked_mul(&pi_truncated(&AlphaRational::one(), n, n, d).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tensor_and_extract() {
        let f = &MultiPoly::variable(2, 1).unwrap() + &MultiPoly::one(2);
        let g = MultiPoly::variable(1, 1).unwrap();
        let t = BiPoly::tensor(&f, &g, 0);
        assert_eq!(t.poly().len(), 1);
        assert_eq!(t.extract_y(&[1]).unwrap(), MultiPoly::one(2));
        assert_eq!(BiPoly::tensor(&f, &g, 1).to_string(), "x1*y1 + y1");
    }
}
