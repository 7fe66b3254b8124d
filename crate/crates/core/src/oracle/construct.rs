use num_traits::Signed;

use super::CtPairing;
use crate::combinatorics::{
    composition_lt, compositions, dominance_leq, eigenvalue_parts, partitions, Composition, Partition,
};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::linalg::Matrix;
use crate::polyalg::{cherednik_apply, monomial_symmetric, QPoly};

/// Fallback points tried in order when a requested `α₀` causes an
/// eigenvalue collision.
pub fn alpha_sequence() -> Vec<Rational> {
    [(2, 1), (3, 1), (5, 1), (7, 2), (11, 3), (13, 5), (17, 7)]
        .iter()
        .map(|&(p, q)| Rational::new(p.into(), q.into()))
        .collect()
}

fn eigenvalues_at(eta: &Composition, alpha0: &Rational) -> Vec<Rational> {
    eigenvalue_parts(eta)
        .into_iter()
        .map(|(a, b)| alpha0 * Rational::from_i64(a) + Rational::from_i64(b))
        .collect()
}

/// `E_η` at `α = α₀` from the triangular ansatz `z^η + Σ_{ν<η} a_ν z^ν`,
/// solving the stacked eigen-equations `(ξ_i − η̄_i(α₀)) E = 0`.
pub fn solve_e_linear(eta: &Composition, alpha0: &Rational) -> Result<QPoly> {
    let n = eta.n();
    let target = eigenvalues_at(eta, alpha0);
    let lower: Vec<Composition> = compositions(eta.modulus(), n)
        .into_iter()
        .filter(|nu| composition_lt(nu, eta).unwrap_or(false))
        .collect();
    if let Some(nu) = lower.iter().find(|nu| eigenvalues_at(nu, alpha0) == target) {
        return Err(Error::EigenvalueCollision(format!(
            "{eta} and {nu} share eigenvalues at α = {alpha0}"
        )));
    }
    let monomials: Vec<Vec<u32>> = compositions(eta.modulus(), n)
        .into_iter()
        .map(|c| c.parts().to_vec())
        .collect();
    let row_of = |e: &[u32]| monomials.iter().position(|m| m == e).expect("degree preserved");
    let apply = |i: usize, e: &[u32]| -> Result<QPoly> {
        let z = QPoly::monomial(e.to_vec(), Rational::one());
        let xi = cherednik_apply(&z, i, alpha0)?;
        xi.checked_sub(&z.scale(&target[i - 1]))
    };
    let rows = n * monomials.len();
    let mut a = Matrix::zeros(rows, lower.len());
    let mut rhs = vec![Rational::zero(); rows];
    for i in 1..=n {
        let offset = (i - 1) * monomials.len();
        for (col, nu) in lower.iter().enumerate() {
            for (e, c) in apply(i, nu.parts())?.terms() {
                let r = offset + row_of(e);
                let v = a.get(r, col) + c;
                a.set(r, col, v);
            }
        }
        for (e, c) in apply(i, eta.parts())?.terms() {
            rhs[offset + row_of(e)] -= c;
        }
    }
    let coeffs = if lower.is_empty() {
        if rhs.iter().any(|v| !v.is_zero()) {
            return Err(Error::Singular);
        }
        Vec::new()
    } else {
        a.solve(&rhs)?
    };
    let mut out = QPoly::monomial(eta.parts().to_vec(), Rational::one());
    for (nu, c) in lower.iter().zip(coeffs) {
        out.add_term(nu.parts().to_vec(), c);
    }
    Ok(out)
}

/// Tries `α₀`, then the fallback sequence, returning the point used.
pub fn solve_e_linear_avoiding_collisions(eta: &Composition, alpha0: &Rational) -> Result<(Rational, QPoly)> {
    let mut last = None;
    for a in std::iter::once(alpha0.clone()).chain(alpha_sequence()) {
        match solve_e_linear(eta, &a) {
            Ok(p) => return Ok((a, p)),
            Err(e @ Error::EigenvalueCollision(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("sequence is nonempty"))
}

/// `P_κ` at `α = 1/k` by Gram–Schmidt of `{m_μ : μ ≤ κ}` under the
/// constant-term inner product, monic in `m_κ`.
pub fn gram_schmidt_p(kappa: &Partition, k: u32) -> Result<QPoly> {
    gram_schmidt_p_with(kappa, &CtPairing::new(kappa.n(), k))
}

/// As [`gram_schmidt_p`] with a prepared pairing.
pub fn gram_schmidt_p_with(kappa: &Partition, pairing: &CtPairing) -> Result<QPoly> {
    let n = kappa.n();
    let mut below: Vec<Partition> = partitions(kappa.modulus(), n)
        .into_iter()
        .filter(|mu| dominance_leq(mu, kappa).unwrap_or(false))
        .collect();
    below.sort();
    let mut done: Vec<(QPoly, Rational)> = Vec::with_capacity(below.len());
    for mu in &below {
        let m = monomial_symmetric::<Rational>(mu, n)?;
        let mut b = m.clone();
        for (prev, norm) in &done {
            let proj = pairing.inner(prev, &m) / norm;
            b = b.checked_sub(&prev.scale(&proj))?;
        }
        let norm = pairing.inner(&b, &b);
        if !norm.is_positive() {
            return Err(Error::Singular);
        }
        done.push((b, norm));
    }
    Ok(done.pop().expect("κ itself is in its down-set").0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_rational;
    use crate::jack::{build_e, build_p, ParamForm};

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn linear_e_examples() {
        let e = solve_e_linear(&comp(&[1, 0]), &r("2")).unwrap();
        assert_eq!(e.coeff_or_zero(&[1, 0]), r("1"));
        assert_eq!(e.coeff_or_zero(&[0, 1]), r("1/3"));
        let e = solve_e_linear(&comp(&[0, 1]), &r("5/2")).unwrap();
        assert_eq!(e, QPoly::monomial(vec![0, 1], r("1")));
    }

    #[test]
    fn linear_e_matches_recursion() {
        for n in 2..=3 {
            for eta in crate::combinatorics::compositions_up_to(3, n) {
                let built = build_e(&eta);
                for a0 in ["2", "3", "7/2"] {
                    let (used, lin) = solve_e_linear_avoiding_collisions(&eta, &r(a0)).unwrap();
                    assert_eq!(lin, built.eval_alpha(&used).unwrap(), "{eta} at {used}");
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let g = gram_schmidt_p(&p(&[2, 0]), 1).unwrap();
        assert_eq!(g.coeff_or_zero(&[1, 1]), r("1"));
        assert_eq!(g.coeff_or_zero(&[2, 0]), r("1"));
        for kappa in crate::combinatorics::partitions_up_to(3, 3) {
            for k in 1..=2u32 {
                let built = build_p(&kappa, ParamForm::Alpha);
                let alpha0 = Rational::new(1.into(), k.into());
                assert_eq!(
                    gram_schmidt_p(&kappa, k).unwrap(),
                    built.eval_alpha(&alpha0).unwrap()
                );
            }
        }
    }
}
