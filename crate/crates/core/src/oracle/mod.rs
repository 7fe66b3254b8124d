//! Brute-force constructions used to cross-check the main build.
//!
//! The torus inner product with weight `|Δ|^{2/α}` is evaluated exactly at
//! integer `k = 1/α` as the constant term of `f(z^{-1}) g(z) W_k(z)`, where
//! `W_k = ∏_{j≠l} (1 − z_j/z_l)^k`.

mod construct;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::check::Mismatch;
use crate::combinatorics::Composition;
use crate::field::Rational;
use crate::jack::{u_from_kernel, PolySource};
use crate::polyalg::QPoly;
use crate::scalars::AlphaRational;

pub use construct::*;

/// A Laurent polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n], Rational::one());
        LaurentPoly { n, terms }
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

    pub fn coeff(&self, e: &[i64]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.n])
    }

    /// True when every exponent vector sums to `degree`.
    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<i64>() == degree)
    }
}

/// `∏_{j≠l} (1 − z_j/z_l)^k`, fully expanded.
pub fn weight_expand(n: usize, k: u32) -> LaurentPoly {
    let mut out = LaurentPoly::one(n);
    for j in 0..n {
        for l in 0..n {
            if j == l {
                continue;
            }
            let mut factor = LaurentPoly::one(n);
            let mut e = vec![0; n];
            e[j] = 1;
            e[l] = -1;
            factor.add_term(e, -Rational::one());
            for _ in 0..k {
                out = out.mul(&factor);
            }
        }
    }
    out
}

/// Constant-term pairing at a fixed `(N, k)`, holding the expanded weight.
#[derive(Clone, Debug)]
pub struct CtPairing {
    k: u32,
    weight: LaurentPoly,
}

impl CtPairing {
    pub fn new(n: usize, k: u32) -> Self {
        CtPairing {
            k,
            weight: weight_expand(n, k),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `α₀ = 1/k`.
    pub fn alpha(&self) -> Rational {
        Rational::new(1.into(), self.k.into())
    }

    pub fn weight(&self) -> &LaurentPoly {
        &self.weight
    }

    /// `CT[f(z^{-1}) g(z) W(z)] = Σ_{a,b} f_a g_b W_{a−b}`.
    pub fn inner(&self, f: &QPoly, g: &QPoly) -> Rational {
        let mut acc = Rational::zero();
        let mut diff = vec![0i64; self.weight.n];
        for (a, fa) in f.terms() {
            for (b, gb) in g.terms() {
                for (slot, (x, y)) in diff.iter_mut().zip(a.iter().zip(b)) {
                    *slot = *x as i64 - *y as i64;
                }
                if let Some(w) = self.weight.terms.get(&diff) {
                    acc += fa * gb * w;
                }
            }
        }
        acc
    }
}

/// One-shot constant-term inner product at `α₀ = 1/k`.
pub fn ct_inner_product(f: &QPoly, g: &QPoly, k: u32) -> Rational {
    CtPairing::new(f.n(), k).inner(f, g)
}

/// `u_η` extracted from the truncated `Ω` by exact linear algebra over Q(α).
pub fn u_from_series(
    src: &dyn PolySource,
    eta: &Composition,
    degree: u32,
) -> Result<AlphaRational, Mismatch> {
    let table = u_from_kernel(src, eta.n(), degree)?;
    table.get(eta).cloned().ok_or_else(|| Mismatch {
        what: format!("u{eta} from Ω"),
        left: format!("|η| = {} exceeds the truncation", eta.modulus()),
        right: format!("D = {degree}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{parse_rational, Field};
    use crate::jack::JackCache;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn qp(n: usize, terms: &[(&[u32], i64)]) -> QPoly {
        QPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), Rational::from_i64(*c))))
    }

    #[test]
    fn weights() {
        let w = weight_expand(2, 1);
        assert_eq!(w.len(), 3);
        assert_eq!(w.coeff(&[0, 0]), r("2"));
        assert_eq!(w.coeff(&[1, -1]), r("-1"));
        assert_eq!(w.coeff(&[-1, 1]), r("-1"));
        assert_eq!(weight_expand(1, 5), LaurentPoly::one(1));
        let w2 = weight_expand(2, 2);
        assert_eq!(w2.coeff(&[0, 0]), r("6"));
        assert_eq!(w2.coeff(&[1, -1]), r("-4"));
        assert_eq!(w2.coeff(&[-2, 2]), r("1"));
        assert_eq!(w2.len(), 5);
        assert!(weight_expand(3, 2).is_homogeneous_of(0));
    }

    #[test]
    fn inner_products() {
        let one = qp(2, &[(&[0, 0], 1)]);
        let z2 = qp(2, &[(&[0, 1], 1)]);
        let p1 = qp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(ct_inner_product(&one, &one, 1), r("2"));
        assert_eq!(ct_inner_product(&z2, &z2, 1), r("2"));
        assert_eq!(ct_inner_product(&p1, &p1, 1), r("2"));
        let f = qp(2, &[(&[2, 0], 3), (&[1, 1], -1)]);
        let g = qp(2, &[(&[0, 2], 1), (&[1, 1], 5)]);
        assert_eq!(ct_inner_product(&f, &g, 2), ct_inner_product(&g, &f, 2));
    }

    #[test]
    fn u_from_series_examples() {
        let cache = JackCache::new();
        let c = |v: &[u32]| Composition::new(v.to_vec());
        assert!(u_from_series(&cache, &c(&[0, 0]), 1).unwrap().is_one());
        assert_eq!(
            u_from_series(&cache, &c(&[1, 0]), 1).unwrap(),
            "α/(α+1)".parse().unwrap()
        );
        assert!(u_from_series(&cache, &c(&[2, 0]), 1).is_err());
    }
}
