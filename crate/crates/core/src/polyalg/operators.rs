use std::collections::BTreeMap;

use super::{format_term, split_sign, Exponents, Poly};
use crate::combinatorics::{signed_permutations, Partition};
use crate::error::{Error, Result};
use crate::field::Field;

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

fn check_pair(i: usize, p: usize, n: usize) -> Result<()> {
    check_index(i, n)?;
    check_index(p, n)?;
    if i == p {
        return Err(Error::IndexOutOfRange { index: p, n });
    }
    Ok(())
}

/// `s_{ip}`: swap variables `i` and `p` (1-based).
pub fn apply_transposition<C: Field>(f: &Poly<C>, i: usize, p: usize) -> Result<Poly<C>> {
    check_pair(i, p, f.n())?;
    let mut out = Poly::zero(f.n());
    for (e, c) in f.terms() {
        let mut ne = e.clone();
        ne.swap(i - 1, p - 1);
        out.add_term(ne, c.clone());
    }
    Ok(out)
}

/// `Φ f(z_1,…,z_N) = z_N f(z_N, z_1, …, z_{N−1})`.
pub fn apply_phi<C: Field>(f: &Poly<C>) -> Poly<C> {
    let n = f.n();
    let mut out = Poly::zero(n);
    for (e, c) in f.terms() {
        let mut ne: Exponents = e[1..].to_vec();
        ne.push(e[0] + 1);
        out.add_term(ne, c.clone());
    }
    out
}

/// Terms of `(z_i^a z_p^b − z_i^b z_p^a)/(z_i − z_p)` for one monomial, as
/// (exponent vector, ±1) pairs; `i`, `p` are 0-based.
fn monomial_divided_difference(e: &[u32], i: usize, p: usize) -> Vec<(Exponents, i64)> {
    let (a, b) = (e[i], e[p]);
    let (lo, hi, sign) = match a.cmp(&b) {
        std::cmp::Ordering::Equal => return Vec::new(),
        std::cmp::Ordering::Greater => (b, a, 1),
        std::cmp::Ordering::Less => (a, b, -1),
    };
    (0..hi - lo)
        .map(|t| {
            let mut ne = e.to_vec();
            ne[i] = lo + t;
            ne[p] = hi - 1 - t;
            (ne, sign)
        })
        .collect()
}

/// `(f − s_{ip} f)/(z_i − z_p)`, computed monomial by monomial.
pub fn divided_difference<C: Field>(f: &Poly<C>, i: usize, p: usize) -> Result<Poly<C>> {
    check_pair(i, p, f.n())?;
    let mut out = Poly::zero(f.n());
    for (e, c) in f.terms() {
        for (ne, sign) in monomial_divided_difference(e, i - 1, p - 1) {
            out.add_term(ne, if sign > 0 { c.clone() } else { c.negated() });
        }
    }
    Ok(out)
}

/// Accumulates integer multiples of coefficients per monomial before any
/// field multiplication happens.
struct Accumulator<C> {
    terms: BTreeMap<Exponents, C>,
}

impl<C: Field> Accumulator<C> {
    fn new() -> Self {
        Accumulator {
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, e: Exponents, c: C) {
        match self.terms.get_mut(&e) {
            Some(v) => *v = v.plus(&c),
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn finish(self, n: usize) -> Poly<C> {
        Poly::from_terms(n, self.terms)
    }
}

/// The Cherednik operator
/// `ξ_i = α z_i ∂_i + Σ_{p<i} z_i/(z_i−z_p)(1−s_{ip}) + Σ_{p>i} z_p/(z_i−z_p)(1−s_{ip}) + 1 − i`.
pub fn cherednik_apply<C: Field>(f: &Poly<C>, i: usize, alpha: &C) -> Result<Poly<C>> {
    let n = f.n();
    check_index(i, n)?;
    let iz = i - 1;
    let mut acc = Accumulator::new();
    let shift = C::from_i64(1 - i as i64);
    for (e, c) in f.terms() {
        let diag = alpha.times(&C::from_i64(e[iz] as i64)).plus(&shift);
        acc.add(e.clone(), c.times(&diag));
        for pz in (0..n).filter(|&pz| pz != iz) {
            let weight_var = if pz < iz { iz } else { pz };
            for (mut ne, sign) in monomial_divided_difference(e, iz, pz) {
                ne[weight_var] += 1;
                acc.add(ne, if sign > 0 { c.clone() } else { c.negated() });
            }
        }
    }
    Ok(acc.finish(n))
}

pub fn is_symmetric<C: Field>(f: &Poly<C>) -> bool {
    (1..f.n()).all(|i| apply_transposition(f, i, i + 1).is_ok_and(|g| g == *f))
}

pub fn is_antisymmetric<C: Field>(f: &Poly<C>) -> bool {
    (1..f.n()).all(|i| apply_transposition(f, i, i + 1).is_ok_and(|g| g == f.negated()))
}

/// `D₂ = Σ_j z_j² ∂_j² + (2/α) Σ_{j≠k} z_j²/(z_j − z_k) ∂_j` on a symmetric
/// polynomial. Each unordered pair contributes the divided difference of
/// `z_j² ∂_j f`, which is polynomial because `f` is symmetric.
pub fn d2_apply<C: Field>(f: &Poly<C>, alpha: &C) -> Result<Poly<C>> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let n = f.n();
    let two_over_alpha = C::from_i64(2).quotient(alpha)?;
    let mut out = Poly::zero(n);
    for (e, c) in f.terms() {
        for &k in e.iter() {
            if k >= 2 {
                out.add_term(e.clone(), c.times(&C::from_i64((k * (k - 1)) as i64)));
            }
        }
    }
    for j in 0..n {
        // g = z_j² ∂_j f
        let mut g = Poly::zero(n);
        for (e, c) in f.terms() {
            if e[j] > 0 {
                let mut ne = e.clone();
                ne[j] += 1;
                g.add_term(ne, c.times(&C::from_i64(e[j] as i64)));
            }
        }
        for k in j + 1..n {
            let dd = divided_difference(&g, j + 1, k + 1)?;
            out = out.checked_add(&dd.scale(&two_over_alpha))?;
        }
    }
    Ok(out)
}

fn signed_sum<C: Field>(f: &Poly<C>, signed: bool) -> Poly<C> {
    let n = f.n();
    let mut acc = Accumulator::new();
    for (perm, sign) in signed_permutations(n) {
        let neg = signed && sign < 0;
        for (e, c) in f.terms() {
            // f(x_{σ(1)}, …, x_{σ(N)}): the k-th slot carries x_{σ(k)}.
            let mut ne = vec![0; n];
            for (k, &x) in e.iter().enumerate() {
                ne[perm[k]] = x;
            }
            acc.add(ne, if neg { c.negated() } else { c.clone() });
        }
    }
    acc.finish(n)
}

/// `Sym f = Σ_σ f(x_{σ(1)}, …, x_{σ(N)})`.
pub fn symmetrize<C: Field>(f: &Poly<C>) -> Poly<C> {
    signed_sum(f, false)
}

/// `Asym f = Σ_σ (−1)^{ℓ(σ)} f(x_{σ(1)}, …, x_{σ(N)})`, `ℓ` the inversion count.
pub fn antisymmetrize<C: Field>(f: &Poly<C>) -> Poly<C> {
    signed_sum(f, true)
}

/// `Δ(x) = ∏_{j<k} (x_j − x_k)`.
pub fn vandermonde<C: Field>(n: usize) -> Poly<C> {
    let mut out = Poly::one(n);
    for j in 1..=n {
        for k in j + 1..=n {
            let xj = Poly::<C>::variable(n, j).expect("in range");
            let xk = Poly::<C>::variable(n, k).expect("in range");
            out = &out * &(&xj - &xk);
        }
    }
    out
}

/// `m_κ`: the sum of all distinct rearrangements of `z^κ`.
pub fn monomial_symmetric<C: Field>(kappa: &Partition, n: usize) -> Result<Poly<C>> {
    let padded = kappa.padded(n)?;
    let mut out = Poly::zero(n);
    for r in padded.as_composition().rearrangements() {
        out.add_term(r.parts().to_vec(), C::one());
    }
    Ok(out)
}

/// A symmetric polynomial in the monomial symmetric basis, e.g.
/// `m[2] + (2/(α+1)) m[1,1]`, largest partition first.
pub fn m_basis_text<C: Field>(f: &Poly<C>) -> Result<String> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let mut out = String::new();
    let leading = f
        .terms()
        .rev()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]));
    for (idx, (e, c)) in leading.enumerate() {
        let parts: Vec<String> = e.iter().filter(|&&k| k > 0).map(u32::to_string).collect();
        let mono = if parts.is_empty() {
            String::new()
        } else {
            format!("m[{}]", parts.join(","))
        };
        let (negative, mag) = split_sign(c);
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&format_term(&mag, &mono));
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::polyalg::MultiPoly;
    use crate::scalars::AlphaRational;

    fn q(s: &str) -> AlphaRational {
        s.parse().unwrap()
    }

    fn mono(e: &[u32]) -> MultiPoly {
        MultiPoly::monomial(e.to_vec(), AlphaRational::one())
    }

    #[test]
    fn transpositions() {
        assert_eq!(apply_transposition(&mono(&[2, 1]), 1, 2).unwrap(), mono(&[1, 2]));
        assert_eq!(apply_transposition(&mono(&[1, 1]), 1, 2).unwrap(), mono(&[1, 1]));
        assert_eq!(
            apply_transposition(&mono(&[1, 0, 0]), 1, 3).unwrap(),
            mono(&[0, 0, 1])
        );
        assert!(apply_transposition(&mono(&[1, 0]), 1, 3).is_err());
    }

    #[test]
    fn phi() {
        assert_eq!(apply_phi(&MultiPoly::one(2)), mono(&[0, 1]));
        assert_eq!(apply_phi(&mono(&[0, 1])), mono(&[1, 1]));
        assert_eq!(apply_phi(&mono(&[0, 0, 1])), mono(&[0, 1, 1]));
    }

    #[test]
    fn divided_differences() {
        assert_eq!(
            divided_difference(&mono(&[1, 0]), 1, 2).unwrap(),
            MultiPoly::one(2)
        );
        assert!(divided_difference(&mono(&[1, 1]), 1, 2).unwrap().is_zero());
        assert_eq!(
            divided_difference(&mono(&[2, 0]), 1, 2).unwrap(),
            &mono(&[1, 0]) + &mono(&[0, 1])
        );
        assert_eq!(
            divided_difference(&mono(&[0, 1]), 1, 2).unwrap(),
            MultiPoly::one(2).negated()
        );
    }

    #[test]
    fn cherednik_examples() {
        let alpha = AlphaRational::alpha();
        let e10 = &mono(&[1, 0]) + &mono(&[0, 1]).scale(&q("1/(1+α)"));
        assert_eq!(cherednik_apply(&e10, 1, &alpha).unwrap(), e10.scale(&alpha));
        for j in 1..=3 {
            assert_eq!(
                cherednik_apply(&MultiPoly::one(3), j, &alpha).unwrap(),
                MultiPoly::one(3).scale(&AlphaRational::from_int(1 - j as i64))
            );
        }
        assert_eq!(
            cherednik_apply(&mono(&[0, 1]), 2, &alpha).unwrap(),
            mono(&[0, 1]).scale(&alpha)
        );
        assert!(cherednik_apply(&mono(&[0, 1]), 3, &alpha).is_err());
    }

    #[test]
    fn d2_examples() {
        let alpha = AlphaRational::alpha();
        assert!(d2_apply(&MultiPoly::one(2), &alpha).unwrap().is_zero());
        let p1 = &mono(&[1, 0]) + &mono(&[0, 1]);
        assert_eq!(d2_apply(&p1, &alpha).unwrap(), p1.scale(&q("2/α")));
        assert_eq!(d2_apply(&mono(&[1, 0]), &alpha), Err(Error::NotSymmetric));
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(antisymmetrize(&mono(&[1, 0])), &mono(&[1, 0]) - &mono(&[0, 1]));
        assert_eq!(symmetrize(&mono(&[0, 1])), &mono(&[1, 0]) + &mono(&[0, 1]));
        assert!(antisymmetrize(&mono(&[1, 1])).is_zero());
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde::<AlphaRational>(2), &mono(&[1, 0]) - &mono(&[0, 1]));
        assert_eq!(vandermonde::<AlphaRational>(1), MultiPoly::one(1));
        let v3 = vandermonde::<AlphaRational>(3);
        assert_eq!(v3.len(), 6);
        assert_eq!(v3, antisymmetrize(&mono(&[2, 1, 0])));
    }

    #[test]
    fn monomial_symmetric_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(
            monomial_symmetric::<AlphaRational>(&p(&[1]), 2).unwrap(),
            &mono(&[1, 0]) + &mono(&[0, 1])
        );
        assert_eq!(
            monomial_symmetric::<AlphaRational>(&p(&[1, 1]), 2).unwrap(),
            mono(&[1, 1])
        );
        assert_eq!(
            monomial_symmetric::<AlphaRational>(&p(&[2, 1]), 2).unwrap(),
            &mono(&[2, 1]) + &mono(&[1, 2])
        );
        assert!(monomial_symmetric::<AlphaRational>(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn m_basis_rendering() {
        let p = crate::jack::build_p(
            &Partition::new(vec![2, 0]).unwrap(),
            crate::jack::ParamForm::Alpha,
        );
        assert_eq!(m_basis_text(&p).unwrap(), "m[2] + (2/(α+1)) m[1,1]");
        assert_eq!(m_basis_text(&Poly::<Rational>::one(2)).unwrap(), "1");
        assert_eq!(m_basis_text(&Poly::<Rational>::zero(2)).unwrap(), "0");
        let z1 = Poly::<Rational>::monomial(vec![1, 0], Rational::one());
        assert!(m_basis_text(&z1).is_err());
    }
}
