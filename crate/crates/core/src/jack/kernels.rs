use std::collections::BTreeMap;

use super::checks::{poly_eq, PolySource};
use super::ParamForm;
use crate::check::{expect, expect_eq, from_error, CheckResult, Mismatch};
use crate::combinatorics::{compositions, partitions, sort_to_partition, Composition, Partition};
use crate::field::{Field, Rational};
use crate::linalg::Matrix;
use crate::polyalg::{
    binomial_series, omega_truncated, pi_truncated, AlphaBiPoly, BiPoly, Exponents, MultiPoly,
};
use crate::scalars::{d, gen_factorial, h, u_eta, v_kappa, AlphaRational};

/// `Σ_{|η|≤D} E_η(x) E_η(y) / u_η`, truncated.
pub fn omega_from_e(src: &dyn PolySource, n: usize, degree: u32) -> AlphaBiPoly {
    let mut out = BiPoly::zero(n, n, degree);
    for m in 0..=degree {
        for eta in compositions(m, n) {
            let e = src.e(&eta);
            let w = u_eta(&eta).inverse().expect("u is nonzero");
            out = out
                .checked_add(&BiPoly::tensor(&e, &e, degree).scale(&w))
                .expect("same shape");
        }
    }
    out
}

/// `Σ_{|κ|≤D} P_κ(x) P_κ(y) / v_κ`, truncated.
pub fn pi_from_p(src: &dyn PolySource, n: usize, degree: u32) -> AlphaBiPoly {
    let mut out = BiPoly::zero(n, n, degree);
    for m in 0..=degree {
        for kappa in partitions(m, n) {
            let p = src.p(&kappa, ParamForm::Alpha);
            let w = v_kappa(&kappa).inverse().expect("v is nonzero");
            out = out
                .checked_add(&BiPoly::tensor(&p, &p, degree).scale(&w))
                .expect("same shape");
        }
    }
    out
}

fn bipoly_eq(what: &str, left: &AlphaBiPoly, right: &AlphaBiPoly) -> CheckResult {
    poly_eq(what, left.poly(), right.poly())
}

/// Coordinates `C` of a kernel `K(x, y) = Σ_{a,b} C_{ab} f_a(x) f_b(y)` in a
/// basis `f` of one homogeneous component. `coords` lists monomials on which
/// the basis is read; it must make the basis matrix square and invertible.
pub fn kernel_coordinates(
    kernel: &AlphaBiPoly,
    basis: &[MultiPoly],
    coords: &[Exponents],
) -> crate::error::Result<Matrix<AlphaRational>> {
    let k = basis.len();
    let mut t = Matrix::zeros(k, coords.len());
    for (i, f) in basis.iter().enumerate() {
        for (c, mono) in coords.iter().enumerate() {
            t.set(i, c, f.coeff_or_zero(mono));
        }
    }
    let mut g = Matrix::zeros(coords.len(), coords.len());
    for (a, ma) in coords.iter().enumerate() {
        for (b, mb) in coords.iter().enumerate() {
            g.set(a, b, kernel.coeff(ma, mb));
        }
    }
    let t_inv = t.inverse()?;
    t_inv.transpose().mul(&g)?.mul(&t_inv)
}

/// Reads the diagonal of `kernel_coordinates`, requiring every off-diagonal
/// entry to vanish, and returns the reciprocals (the pairing norms).
fn diagonal_norms(
    kernel: &AlphaBiPoly,
    basis: &[MultiPoly],
    coords: &[Exponents],
    labels: &[String],
) -> std::result::Result<Vec<AlphaRational>, Mismatch> {
    let c = kernel_coordinates(kernel, basis, coords).map_err(|e| from_error("kernel coordinates", e))?;
    let mut out = Vec::with_capacity(basis.len());
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            if a != b {
                expect(
                    format!("pairing of {} with {} vanishes", labels[a], labels[b]),
                    c.get(a, b).is_zero(),
                    c.get(a, b),
                )?;
            }
        }
        let norm = c
            .get(a, a)
            .inverse()
            .map_err(|e| from_error(format!("diagonal at {}", labels[a]), e))?;
        out.push(norm);
    }
    Ok(out)
}

/// `u_η` for every `|η| ≤ D` read off the truncated `Ω` in the basis
/// `E_η(x) E_ν(y)`, with off-diagonal vanishing asserted.
pub fn u_from_kernel(
    src: &dyn PolySource,
    n: usize,
    degree: u32,
) -> std::result::Result<BTreeMap<Composition, AlphaRational>, Mismatch> {
    let omega = omega_truncated(n, degree);
    let mut out = BTreeMap::new();
    for m in 0..=degree {
        let etas = compositions(m, n);
        let basis: Vec<MultiPoly> = etas.iter().map(|eta| src.e(eta).as_ref().clone()).collect();
        let coords: Vec<Exponents> = etas.iter().map(|eta| eta.parts().to_vec()).collect();
        let labels: Vec<String> = etas.iter().map(|eta| format!("E{eta}")).collect();
        let norms = diagonal_norms(&omega, &basis, &coords, &labels)?;
        out.extend(etas.into_iter().zip(norms));
    }
    Ok(out)
}

/// `v_κ` for every `|κ| ≤ D`, `ℓ(κ) ≤ N`, read off the truncated `Π` in the
/// basis `P_κ(x) P_μ(y)`; keys drop trailing zeros so values at different
/// `N` compare directly.
pub fn v_from_kernel(
    src: &dyn PolySource,
    n: usize,
    degree: u32,
) -> std::result::Result<BTreeMap<Vec<u32>, AlphaRational>, Mismatch> {
    let pi = pi_truncated(&AlphaRational::alpha(), n, n, degree).map_err(|e| from_error("Π", e))?;
    let mut out = BTreeMap::new();
    for m in 0..=degree {
        let kappas = partitions(m, n);
        let basis: Vec<MultiPoly> = kappas
            .iter()
            .map(|k| src.p(k, ParamForm::Alpha).as_ref().clone())
            .collect();
        let coords: Vec<Exponents> = kappas.iter().map(|k| k.parts().to_vec()).collect();
        let labels: Vec<String> = kappas.iter().map(|k| format!("P{k}")).collect();
        let norms = diagonal_norms(&pi, &basis, &coords, &labels)?;
        for (k, v) in kappas.iter().zip(norms) {
            out.insert(k.parts()[..k.length()].to_vec(), v);
        }
    }
    Ok(out)
}

/// `Ω = Σ E⊗E/u_η` with `u_η = d′_η/d_η`, the pairing orthogonal and its
/// diagonal equal to `u_η`.
pub fn check_omega_decomposition(src: &dyn PolySource, n: usize, degree: u32) -> CheckResult {
    check_omega_sum(src, n, degree)?;
    check_u_from_omega(src, n, degree)
}

/// `Ω = Σ_{|η|≤D} E_η(x) E_η(y) / u_η` through degree `D`.
pub fn check_omega_sum(src: &dyn PolySource, n: usize, degree: u32) -> CheckResult {
    let what = format!("Ω truncated at N={n}, D={degree}");
    bipoly_eq(&what, &omega_truncated(n, degree), &omega_from_e(src, n, degree))
}

/// The pairing read off `Ω` is diagonal in `E_η` with diagonal `u_η`.
pub fn check_u_from_omega(src: &dyn PolySource, n: usize, degree: u32) -> CheckResult {
    for (eta, u) in u_from_kernel(src, n, degree)? {
        expect_eq(format!("u{eta} from Ω"), &u, &u_eta(&eta))?;
    }
    Ok(())
}

/// `Π = Σ P⊗P/v_κ` with `v_κ = d′_κ/h_κ`, the pairing orthogonal, and `v_κ`
/// read at `N` and `N + 1` identical.
pub fn check_pi_decomposition(src: &dyn PolySource, n: usize, degree: u32) -> CheckResult {
    check_pi_sum(src, n, degree)?;
    check_v_from_pi(src, n, degree)
}

/// `Π = Σ_{|κ|≤D} P_κ(x) P_κ(y) / v_κ` through degree `D`.
pub fn check_pi_sum(src: &dyn PolySource, n: usize, degree: u32) -> CheckResult {
    let what = format!("Π truncated at N={n}, D={degree}");
    let pi = pi_truncated(&AlphaRational::alpha(), n, n, degree).map_err(|e| from_error(&what, e))?;
    bipoly_eq(&what, &pi, &pi_from_p(src, n, degree))
}

/// The pairing read off `Π` is diagonal in `P_κ` with diagonal `v_κ`, the
/// same at `N` and `N + 1`.
pub fn check_v_from_pi(src: &dyn PolySource, n: usize, degree: u32) -> CheckResult {
    let here = v_from_kernel(src, n, degree)?;
    for (key, v) in &here {
        let mut parts = key.clone();
        parts.resize(n, 0);
        let kappa = Partition::new(parts).map_err(|e| from_error("v", e))?;
        expect_eq(format!("v{kappa} from Π"), v, &v_kappa(&kappa))?;
    }
    let there = v_from_kernel(src, n + 1, degree)?;
    for (key, v) in &here {
        let other = there.get(key).cloned().unwrap_or_else(AlphaRational::zero);
        expect_eq(format!("v{key:?} at N={n} vs N={}", n + 1), v, &other)?;
    }
    Ok(())
}

/// The two binomial expansions of `∏_j (1 − x_j)^{−r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialForm {
    /// In `E_η` with coefficients `α^{|η|} [r]_{η⁺} / (u_η d_η)`.
    NonSymmetric,
    /// In `P_κ` with coefficients `α^{|κ|} [r]_κ / (v_κ h_κ)`.
    Symmetric,
}

/// `∏_j (1 − x_j)^{−r}` through total degree `D`.
pub fn binomial_product(r: &Rational, n: usize, degree: u32) -> MultiPoly {
    let coeffs = binomial_series(&AlphaRational::from_rational(r), degree);
    let mut out = MultiPoly::one(n);
    for j in 0..n {
        let mut next = MultiPoly::zero(n);
        for (e, c) in out.terms() {
            let used: u32 = e.iter().sum();
            for (k, b) in coeffs.iter().enumerate().take((degree - used) as usize + 1) {
                let mut ne = e.clone();
                ne[j] += k as u32;
                next.add_term(ne, c.times(b));
            }
        }
        out = next;
    }
    out
}

/// The right-hand side of the requested expansion through degree `D`.
pub fn binomial_expansion(
    src: &dyn PolySource,
    r: &Rational,
    n: usize,
    degree: u32,
    form: BinomialForm,
) -> MultiPoly {
    let u = AlphaRational::from_rational(r);
    let mut out = MultiPoly::zero(n);
    for m in 0..=degree {
        let alpha_pow = AlphaRational::alpha().pow(m);
        match form {
            BinomialForm::NonSymmetric => {
                for eta in compositions(m, n) {
                    let top = alpha_pow.times(&gen_factorial(&u, &sort_to_partition(&eta)));
                    let coeff = top.quotient(&u_eta(&eta).times(&d(&eta))).expect("nonzero");
                    out = &out + &src.e(&eta).scale(&coeff);
                }
            }
            BinomialForm::Symmetric => {
                for kappa in partitions(m, n) {
                    let top = alpha_pow.times(&gen_factorial(&u, &kappa));
                    let coeff = top.quotient(&v_kappa(&kappa).times(&h(&kappa))).expect("nonzero");
                    out = &out + &src.p(&kappa, ParamForm::Alpha).scale(&coeff);
                }
            }
        }
    }
    out
}

pub fn check_binomial(
    src: &dyn PolySource,
    r: &Rational,
    n: usize,
    degree: u32,
    form: BinomialForm,
) -> CheckResult {
    poly_eq(
        format!("∏(1-x_j)^(-{r}) {form:?} expansion at N={n}, D={degree}"),
        &binomial_product(r, n, degree),
        &binomial_expansion(src, r, n, degree, form),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::JackCache;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn omega_n2() {
        let cache = JackCache::new();
        for d in 0..=3 {
            check_omega_decomposition(&cache, 2, d).unwrap();
        }
        let u = u_from_kernel(&cache, 2, 1).unwrap();
        assert_eq!(u[&comp(&[1, 0])], "α/(α+1)".parse().unwrap());
        assert_eq!(u[&comp(&[0, 1])], "(α+1)/(α+2)".parse().unwrap());
    }

    #[test]
    fn pi_n2() {
        let cache = JackCache::new();
        for d in 0..=3 {
            check_pi_decomposition(&cache, 2, d).unwrap();
        }
        let v = v_from_kernel(&cache, 2, 2).unwrap();
        assert_eq!(v[&vec![1]], AlphaRational::alpha());
        assert_eq!(v[&vec![2]], "2α^2/(α+1)".parse().unwrap());
    }

    #[test]
    fn binomials() {
        let cache = JackCache::new();
        for r in ["0", "1", "2", "3", "5/2"] {
            let r = crate::field::parse_rational(r).unwrap();
            for form in [BinomialForm::NonSymmetric, BinomialForm::Symmetric] {
                check_binomial(&cache, &r, 2, 3, form).unwrap();
            }
        }
        let r = Rational::from_i64(0);
        assert_eq!(binomial_product(&r, 2, 3), MultiPoly::one(2));
    }
}
