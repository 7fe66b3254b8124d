//! Non-symmetric, symmetric and anti-symmetric Jack polynomials with
//! coefficients in Q(α), built by exact recursion and memoized per label.

mod checks;
mod kernels;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::combinatorics::{
    eigenvalue_vector, has_distinct_parts, reverse_partition, staircase, Composition, Partition,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyalg::{apply_phi, apply_transposition, symmetrize, vandermonde, MultiPoly};
use crate::scalars::{d_prime, frequency_factorials, AlphaRational};

pub use checks::*;
pub use kernels::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    P,
    S,
}

/// Which parameter the coefficients carry: `α` itself or `α/(α+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamForm {
    Alpha,
    Shifted,
}

/// How `P_κ` is assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PRoute {
    /// `d′_κ Σ_{η⁺=κ} E_η / d′_η`
    EExpansion,
    /// `Sym E_{κ^R} / ∏ f_j!`
    Symmetrized,
}

/// Identifies one cached polynomial. The ambient `N` is the index length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JackLabel {
    pub family: Family,
    pub index: Composition,
    pub param: ParamForm,
}

impl JackLabel {
    pub fn e(eta: &Composition) -> Self {
        JackLabel {
            family: Family::E,
            index: eta.clone(),
            param: ParamForm::Alpha,
        }
    }

    pub fn p(kappa: &Partition, param: ParamForm) -> Self {
        JackLabel {
            family: Family::P,
            index: kappa.as_composition(),
            param,
        }
    }

    pub fn s(rho_plus: &Partition) -> Result<Self> {
        validate_s_index(rho_plus)?;
        Ok(JackLabel {
            family: Family::S,
            index: rho_plus.as_composition(),
            param: ParamForm::Alpha,
        })
    }

    pub fn n(&self) -> usize {
        self.index.n()
    }
}

impl fmt::Display for JackLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::E => "E",
            Family::P => "P",
            Family::S => "S",
        };
        write!(f, "{fam}{}", self.index)?;
        if self.param == ParamForm::Shifted {
            f.write_str("[α/(α+1)]")?;
        }
        Ok(())
    }
}

fn validate_s_index(rho_plus: &Partition) -> Result<()> {
    if rho_plus.parts().windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::NotStrictlyDecreasing(rho_plus.to_string()));
    }
    Ok(())
}

/// Insert-only memo table shared across threads. A polynomial, once stored,
/// is never replaced.
#[derive(Default)]
pub struct JackCache {
    table: RwLock<HashMap<JackLabel, Arc<MultiPoly>>>,
}

impl JackCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, label: &JackLabel) -> Option<Arc<MultiPoly>> {
        self.table.read().expect("cache lock").get(label).cloned()
    }

    fn insert(&self, label: JackLabel, poly: MultiPoly) -> Arc<MultiPoly> {
        let mut table = self.table.write().expect("cache lock");
        table.entry(label).or_insert_with(|| Arc::new(poly)).clone()
    }

    fn get_or_build(
        &self,
        label: JackLabel,
        build: impl FnOnce() -> Result<MultiPoly>,
    ) -> Result<Arc<MultiPoly>> {
        if let Some(p) = self.get(&label) {
            return Ok(p);
        }
        let poly = build()?;
        Ok(self.insert(label, poly))
    }

    /// `E_η(z; α)`.
    pub fn e(&self, eta: &Composition) -> Arc<MultiPoly> {
        self.get_or_build(JackLabel::e(eta), || Ok(self.build_e_step(eta)))
            .expect("the E recursion cannot fail")
    }

    fn build_e_step(&self, eta: &Composition) -> MultiPoly {
        let n = eta.n();
        let parts = eta.parts();
        if eta.is_zero() {
            return MultiPoly::one(n);
        }
        match parts.windows(2).position(|w| w[0] > w[1]) {
            None => {
                let mut nu = Vec::with_capacity(n);
                nu.push(parts[n - 1] - 1);
                nu.extend_from_slice(&parts[..n - 1]);
                apply_phi(&self.e(&Composition::new(nu)))
            }
            Some(i) => {
                // η_i > η_{i+1}: E_η = s_i E_μ − E_μ/δ_{i,μ} with μ = s_i η.
                let mu = eta.swap_parts(i + 1, i + 2).expect("adjacent indices");
                let e_mu = self.e(&mu);
                let ev = eigenvalue_vector(&mu);
                let delta = ev[i].minus(&ev[i + 1]);
                let inv = delta.inverse().expect("eigenvalues of distinct parts differ");
                let swapped = apply_transposition(&e_mu, i + 1, i + 2).expect("in range");
                &swapped - &e_mu.scale(&inv)
            }
        }
    }

    /// `P_κ` at the requested parameter, via the E-expansion.
    pub fn p(&self, kappa: &Partition, param: ParamForm) -> Arc<MultiPoly> {
        self.get_or_build(JackLabel::p(kappa, param), || {
            Ok(match param {
                ParamForm::Alpha => self.p_by_route(kappa, PRoute::EExpansion),
                ParamForm::Shifted => self.p(kappa, ParamForm::Alpha).at_shifted_alpha(),
            })
        })
        .expect("P construction cannot fail")
    }

    /// `P_κ(z; α)` assembled along one route, bypassing the cache for the
    /// result itself.
    pub fn p_by_route(&self, kappa: &Partition, route: PRoute) -> MultiPoly {
        let kc = kappa.as_composition();
        match route {
            PRoute::EExpansion => {
                let top = d_prime(&kc);
                let mut out = MultiPoly::zero(kappa.n());
                for eta in kc.rearrangements() {
                    let coeff = top.quotient(&d_prime(&eta)).expect("d′ is nonzero");
                    out = &out + &self.e(&eta).scale(&coeff);
                }
                out
            }
            PRoute::Symmetrized => {
                let sym = symmetrize(&self.e(&reverse_partition(&kc)));
                let f = AlphaRational::from_bigint(frequency_factorials(kappa));
                sym.scale(&f.inverse().expect("factorials are nonzero"))
            }
        }
    }

    /// `S_{ρ⁺} = Δ(x) P_{η⁺}^{(α/(α+1))}(x)` with `η⁺ = ρ⁺ − δ`.
    pub fn s(&self, rho_plus: &Partition) -> Result<Arc<MultiPoly>> {
        let label = JackLabel::s(rho_plus)?;
        self.get_or_build(label, || {
            let n = rho_plus.n();
            let eta_plus = Partition::new(
                rho_plus
                    .parts()
                    .iter()
                    .zip(staircase(n).parts())
                    .map(|(r, d)| r - d)
                    .collect(),
            )?;
            Ok(&vandermonde(n) * &self.p(&eta_plus, ParamForm::Shifted))
        })
    }
}

/// `E_η(z; α)` with a private cache.
pub fn build_e(eta: &Composition) -> MultiPoly {
    JackCache::new().e(eta).as_ref().clone()
}

/// `P_κ` at the requested parameter with a private cache.
pub fn build_p(kappa: &Partition, param: ParamForm) -> MultiPoly {
    JackCache::new().p(kappa, param).as_ref().clone()
}

/// `S_{ρ⁺}` with a private cache.
pub fn build_s(rho_plus: &Partition) -> Result<MultiPoly> {
    Ok(JackCache::new().s(rho_plus)?.as_ref().clone())
}

/// Partition `ρ⁺` as an index for `S`, validated.
pub fn s_index(rho: &Composition) -> Result<Partition> {
    if !has_distinct_parts(rho) {
        return Err(Error::NonDistinctParts(rho.to_string()));
    }
    let p = crate::combinatorics::sort_to_partition(rho);
    validate_s_index(&p)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_up_to;

    fn q(s: &str) -> AlphaRational {
        s.parse().unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn z(e: &[u32], c: AlphaRational) -> MultiPoly {
        MultiPoly::monomial(e.to_vec(), c)
    }

    #[test]
    fn small_e() {
        assert_eq!(build_e(&comp(&[0, 1])), z(&[0, 1], q("1")));
        assert_eq!(
            build_e(&comp(&[1, 0])),
            &z(&[1, 0], q("1")) + &z(&[0, 1], q("1/(1+α)"))
        );
        assert_eq!(build_e(&comp(&[1, 1])), z(&[1, 1], q("1")));
        assert_eq!(build_e(&comp(&[0, 0, 0])), MultiPoly::one(3));
    }

    #[test]
    fn e_is_monic_with_expected_leading_term() {
        let cache = JackCache::new();
        for eta in compositions_up_to(4, 3) {
            let e = cache.e(&eta);
            assert!(e.coeff(eta.parts()).is_some_and(|c| c.is_one()), "{eta}");
        }
        assert!(!cache.is_empty());
    }

    #[test]
    fn small_p() {
        let p2 = build_p(&part(&[2, 0]), ParamForm::Alpha);
        assert_eq!(
            p2,
            MultiPoly::from_terms(
                2,
                [
                    (vec![2, 0], q("1")),
                    (vec![1, 1], q("2/(α+1)")),
                    (vec![0, 2], q("1"))
                ]
            )
        );
        assert_eq!(build_p(&part(&[1, 1]), ParamForm::Alpha), z(&[1, 1], q("1")));
        let cache = JackCache::new();
        assert_eq!(cache.p_by_route(&part(&[2, 0]), PRoute::Symmetrized), p2);
        assert_eq!(
            build_p(&part(&[2, 0]), ParamForm::Shifted).coeff_or_zero(&[1, 1]),
            q("2(α+1)/(2α+1)")
        );
    }

    #[test]
    fn small_s() {
        assert_eq!(build_s(&part(&[1, 0])).unwrap(), vandermonde(2));
        assert_eq!(
            build_s(&part(&[2, 0])).unwrap(),
            &z(&[2, 0], q("1")) - &z(&[0, 2], q("1"))
        );
        assert_eq!(
            build_s(&part(&[1, 1])),
            Err(Error::NotStrictlyDecreasing("(1,1)".into()))
        );
    }

    #[test]
    fn label_display() {
        assert_eq!(JackLabel::e(&comp(&[1, 0])).to_string(), "E(1,0)");
        assert_eq!(
            JackLabel::p(&part(&[2, 0]), ParamForm::Shifted).to_string(),
            "P(2,0)[α/(α+1)]"
        );
    }
}
