//! Diagram products and the closed-form evaluations, norms and expansion
//! coefficients expressed through them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{AlphaRational, IntPoly};
use crate::check::{expect_eq, CheckResult};
use crate::combinatorics::{
    frequencies, has_distinct_parts, reverse_partition, sort_to_partition, staircase, Composition,
    DiagramNode, Partition,
};
use crate::error::{Error, Result};
use crate::field::Field;

/// The six node products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstantKind {
    /// `∏ (α(a+1) + l + 1)`
    D,
    /// `∏ (α(a+1) + l)`
    DPrime,
    /// `∏ (α(a′+1) + N − l′)`
    E,
    /// `∏ (α(a′+1) + N − 1 − l′)`
    EPrime,
    /// `∏ (α a′ + N − l′)`
    B,
    /// `∏ (α a + l + 1)`, partitions only
    H,
}

impl ConstantKind {
    pub const ALL: [ConstantKind; 6] = [
        ConstantKind::D,
        ConstantKind::DPrime,
        ConstantKind::E,
        ConstantKind::EPrime,
        ConstantKind::B,
        ConstantKind::H,
    ];

    fn factor(self, s: &DiagramNode, n: usize) -> IntPoly {
        let (a, ac, l, lc, n) = (
            s.arm as i64,
            s.arm_colength as i64,
            s.leg as i64,
            s.leg_colength as i64,
            n as i64,
        );
        match self {
            ConstantKind::D => IntPoly::linear(a + 1, l + 1),
            ConstantKind::DPrime => IntPoly::linear(a + 1, l),
            ConstantKind::E => IntPoly::linear(ac + 1, n - lc),
            ConstantKind::EPrime => IntPoly::linear(ac + 1, n - 1 - lc),
            ConstantKind::B => IntPoly::linear(ac, n - lc),
            ConstantKind::H => IntPoly::linear(a, l + 1),
        }
    }
}

impl fmt::Display for ConstantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstantKind::D => "d",
            ConstantKind::DPrime => "d'",
            ConstantKind::E => "e",
            ConstantKind::EPrime => "e'",
            ConstantKind::B => "b",
            ConstantKind::H => "h",
        })
    }
}

/// Product of the node factors of `kind` over the diagram of `eta`.
pub fn constant(kind: ConstantKind, eta: &Composition) -> Result<AlphaRational> {
    if kind == ConstantKind::H && !eta.is_partition() {
        return Err(Error::NotAPartition(eta.to_string()));
    }
    let n = eta.n();
    let prod = eta
        .nodes()
        .fold(IntPoly::one(), |acc, s| acc.mul(&kind.factor(&s, n)));
    Ok(AlphaRational::from_poly(prod))
}

fn k(kind: ConstantKind, eta: &Composition) -> AlphaRational {
    constant(kind, eta).expect("kind is valid for this composition")
}

pub fn d(eta: &Composition) -> AlphaRational {
    k(ConstantKind::D, eta)
}

pub fn d_prime(eta: &Composition) -> AlphaRational {
    k(ConstantKind::DPrime, eta)
}

pub fn e(eta: &Composition) -> AlphaRational {
    k(ConstantKind::E, eta)
}

pub fn e_prime(eta: &Composition) -> AlphaRational {
    k(ConstantKind::EPrime, eta)
}

pub fn b(eta: &Composition) -> AlphaRational {
    k(ConstantKind::B, eta)
}

pub fn h(kappa: &Partition) -> AlphaRational {
    k(ConstantKind::H, &kappa.as_composition())
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn factorial_q(n: u64) -> AlphaRational {
    AlphaRational::from_bigint(factorial(n))
}

/// `∏_j f_j!` over the multiplicities of every part value, zero included:
/// the order of the stabilizer of `κ` in `S_N`.
pub fn frequency_factorials(kappa: &Partition) -> BigInt {
    let zeros = kappa.n() - kappa.length();
    frequencies(kappa)
        .values()
        .fold(factorial(zeros as u64), |acc, &f| acc * factorial(f as u64))
}

/// Generalized factorial as a finite rising product:
/// `∏_{j=1}^{N} ∏_{i=0}^{κ_j−1} (u − (j−1)/α + i)`.
pub fn gen_factorial(u: &AlphaRational, kappa: &Partition) -> AlphaRational {
    let inv_alpha = AlphaRational::alpha().inverse().expect("α ≠ 0");
    let mut acc = AlphaRational::one();
    for (j, &part) in kappa.parts().iter().enumerate() {
        let shift = u.minus(&inv_alpha.times(&AlphaRational::from_int(j as i64)));
        for i in 0..part {
            acc = acc.times(&shift.plus(&AlphaRational::from_int(i as i64)));
        }
    }
    acc
}

/// `∏_{j=1}^{N} (α κ_j + N − j + 1)`.
pub fn row_end_product(kappa: &Partition) -> AlphaRational {
    let n = kappa.n() as i64;
    let prod = kappa
        .parts()
        .iter()
        .enumerate()
        .fold(IntPoly::one(), |acc, (j, &p)| {
            acc.mul(&IntPoly::linear(p as i64, n - j as i64))
        });
    AlphaRational::from_poly(prod)
}

/// `E_η(1^N) = e_η / d_η`.
pub fn eval_e_at_ones(eta: &Composition) -> AlphaRational {
    &e(eta) / &d(eta)
}

/// `N_η / N_0 = d′_η e_η / (d_η e′_η)` for the torus inner product.
pub fn norm_ratio_e(eta: &Composition) -> AlphaRational {
    &(&d_prime(eta) * &e(eta)) / &(&d(eta) * &e_prime(eta))
}

/// `u_η = d′_η / d_η`.
pub fn u_eta(eta: &Composition) -> AlphaRational {
    &d_prime(eta) / &d(eta)
}

/// `P_κ(1^N) = b_κ / h_κ`.
pub fn eval_p_at_ones(kappa: &Partition) -> AlphaRational {
    let kc = kappa.as_composition();
    &b(&kc) / &h(kappa)
}

/// `P_κ(1^N)` in the form `N!/∏f_j! · e_{κ^R}/d_{κ^R}`.
pub fn eval_p_at_ones_via_reverse(kappa: &Partition) -> AlphaRational {
    let rev = reverse_partition(&kappa.as_composition());
    let mult = AlphaRational::from_bigint(factorial(kappa.n() as u64))
        .quotient(&AlphaRational::from_bigint(frequency_factorials(kappa)))
        .expect("nonzero factorial");
    &mult * &(&e(&rev) / &d(&rev))
}

/// `N_κ / N_0 = b_κ d′_κ / (e′_κ h_κ)` for the torus inner product.
pub fn norm_ratio_p(kappa: &Partition) -> AlphaRational {
    let kc = kappa.as_composition();
    &(&b(&kc) * &d_prime(&kc)) / &(&e_prime(&kc) * &h(kappa))
}

/// `N_κ / N_0` in the form `N!/∏f_j! · d′_κ e_{κ^R} / (d_{κ^R} e′_{κ^R})`.
pub fn norm_ratio_p_via_reverse(kappa: &Partition) -> AlphaRational {
    let kc = kappa.as_composition();
    let rev = reverse_partition(&kc);
    let mult = AlphaRational::from_bigint(factorial(kappa.n() as u64))
        .quotient(&AlphaRational::from_bigint(frequency_factorials(kappa)))
        .expect("nonzero factorial");
    &mult * &(&(&d_prime(&kc) * &e(&rev)) / &(&d(&rev) * &e_prime(&rev)))
}

/// `v_κ = d′_κ / h_κ`.
pub fn v_kappa(kappa: &Partition) -> AlphaRational {
    &d_prime(&kappa.as_composition()) / &h(kappa)
}

/// Which closed form to use for the antisymmetrization constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CRhoForm {
    /// `(−1)^{N(N−1)/2} d′_ρ/d_{ρ⁺} · h_{η⁺}(α/(α+1)) / d′_{η⁺}(α/(α+1))`
    HookForm,
    /// `(−1)^{N(N−1)/2} d′_ρ / d′_{ρ^R}`
    Simplified,
}

fn staircase_sign(n: usize) -> AlphaRational {
    AlphaRational::from_int(if (n * (n - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    })
}

/// `η⁺ = ρ⁺ − δ` for a composition with distinct parts.
pub fn shape_below_staircase(rho: &Composition) -> Result<Partition> {
    if !has_distinct_parts(rho) {
        return Err(Error::NonDistinctParts(rho.to_string()));
    }
    let plus = sort_to_partition(rho);
    let delta = staircase(rho.n());
    Partition::new(
        plus.parts()
            .iter()
            .zip(delta.parts())
            .map(|(r, d)| r - d)
            .collect(),
    )
}

/// `ρ⁺ = η⁺ + δ`.
pub fn add_staircase(eta_plus: &Partition) -> Partition {
    let delta = staircase(eta_plus.n());
    Partition::new(
        eta_plus
            .parts()
            .iter()
            .zip(delta.parts())
            .map(|(a, b)| a + b)
            .collect(),
    )
    .expect("sum of partitions is a partition")
}

/// The closed forms for `c_ρ` exactly as stated, including the
/// `(−1)^{N(N−1)/2}` prefactor.
pub fn c_rho(rho: &Composition, form: CRhoForm) -> Result<AlphaRational> {
    let eta_plus = shape_below_staircase(rho)?;
    let n = rho.n();
    let sign = staircase_sign(n);
    let value = match form {
        CRhoForm::HookForm => {
            let rho_plus = sort_to_partition(rho).as_composition();
            let ep = eta_plus.as_composition();
            let shifted = (&h(&eta_plus) / &d_prime(&ep)).at_shifted_alpha();
            &(&d_prime(rho) / &d(&rho_plus)) * &shifted
        }
        CRhoForm::Simplified => &d_prime(rho) / &d_prime(&reverse_partition(rho)),
    };
    Ok(&sign * &value)
}

/// `(−1)^{#inversions of ρ}`: the sign relating the stated closed form for
/// `c_ρ` to the constant actually produced by [`crate::polyalg::antisymmetrize`]
/// with `Δ = ∏_{j<k}(x_j − x_k)` and `ℓ(σ)` the inversion count.
pub fn asym_sign(rho: &Composition) -> i64 {
    if rho.inversions().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `c_ρ` under the library's conventions: `asym_sign(ρ) · (−1)^{N(N−1)/2} d′_ρ/d′_{ρ^R}`.
pub fn c_rho_signed(rho: &Composition) -> Result<AlphaRational> {
    Ok(&AlphaRational::from_int(asym_sign(rho)) * &c_rho(rho, CRhoForm::Simplified)?)
}

/// One side-by-side statement of an exact identity in Q(α).
#[derive(Clone, Debug, PartialEq)]
pub struct Identity {
    pub what: String,
    pub left: AlphaRational,
    pub right: AlphaRational,
}

impl Identity {
    pub fn new(what: impl Into<String>, left: AlphaRational, right: AlphaRational) -> Self {
        Identity {
            what: what.into(),
            left,
            right,
        }
    }

    pub fn check(&self) -> CheckResult {
        expect_eq(self.what.clone(), &self.left, &self.right)
    }
}

pub fn check_all(identities: &[Identity]) -> CheckResult {
    identities.iter().try_for_each(Identity::check)
}

/// `e_η/b_η = (1/N!) ∏_j (α η⁺_j + N − j + 1)` together with
/// `h_{η⁺}/∏f_i! = d_{η^R} / ∏_j (α η⁺_j + N − j + 1)`.
pub fn hook_identities(eta: &Composition) -> Vec<Identity> {
    let plus = sort_to_partition(eta);
    let rev = reverse_partition(eta);
    let rows = row_end_product(&plus);
    let nfact = factorial_q(eta.n() as u64);
    let ffact = AlphaRational::from_bigint(frequency_factorials(&plus));
    vec![
        Identity::new(format!("e/b at {eta}"), &e(eta) / &b(eta), &rows / &nfact),
        Identity::new(
            format!("h/prod f! vs d(reverse)/row ends at {eta}"),
            &h(&plus) / &ffact,
            &d(&rev) / &rows,
        ),
    ]
}

pub fn check_hook_identity(eta: &Composition) -> CheckResult {
    check_all(&hook_identities(eta))
}

/// `e`, `e′`, `b` as `α^{|η|}` times generalized factorials of `η⁺`.
pub fn gen_factorial_identities(eta: &Composition) -> Vec<Identity> {
    let plus = sort_to_partition(eta);
    let n = eta.n() as i64;
    let inv_alpha = AlphaRational::alpha().inverse().expect("α ≠ 0");
    let alpha_pow = AlphaRational::alpha().pow(eta.modulus());
    let arg = |shift: i64, scale: i64| {
        &AlphaRational::from_int(shift) + &(&AlphaRational::from_int(scale) * &inv_alpha)
    };
    vec![
        Identity::new(
            format!("e = α^|η| [1+N/α] at {eta}"),
            e(eta),
            &alpha_pow * &gen_factorial(&arg(1, n), &plus),
        ),
        Identity::new(
            format!("e' = α^|η| [1+(N-1)/α] at {eta}"),
            e_prime(eta),
            &alpha_pow * &gen_factorial(&arg(1, n - 1), &plus),
        ),
        Identity::new(
            format!("b = α^|η| [N/α] at {eta}"),
            b(eta),
            &alpha_pow * &gen_factorial(&arg(0, n), &plus),
        ),
    ]
}

/// Identities relating the diagram of `ρ⁺ = η⁺ + δ` to that of `η⁺` at the
/// shifted parameter α/(α+1).
pub fn society_identities(eta_plus: &Partition) -> Vec<Identity> {
    let n = eta_plus.n();
    let ep = eta_plus.as_composition();
    let rho_plus = add_staircase(eta_plus).as_composition();
    let rho_rev = reverse_partition(&rho_plus);
    let delta = staircase(n).as_composition();
    let one_plus_alpha = AlphaRational::linear(1, 1);
    let lift = one_plus_alpha.pow(eta_plus.modulus());

    // Node-by-node forms of the two lifted products.
    let b_lift = ep.nodes().fold(IntPoly::one(), |acc, s| {
        let (ac, lc, n) = (s.arm_colength as i64, s.leg_colength as i64, n as i64);
        acc.mul(&IntPoly::linear(n + ac - lc, n - lc))
    });
    let h_lift = ep.nodes().fold(IntPoly::one(), |acc, s| {
        let (a, l) = (s.arm as i64, s.leg as i64);
        acc.mul(&IntPoly::linear(a + l + 1, l + 1))
    });

    let ed_ratio = &e(&delta) / &e_prime(&delta);
    let nfact = factorial_q(n as u64);
    let cauchy_side = (1..=n as i64).fold(AlphaRational::one(), |acc, j| {
        &acc * &AlphaRational::linear(j, n as i64)
    });
    vec![
        Identity::new(
            format!("(1+α)^|η| b(α/(α+1)) node product at {eta_plus}"),
            &lift * &b(&ep).at_shifted_alpha(),
            AlphaRational::from_poly(b_lift),
        ),
        Identity::new(
            format!("(1+α)^|η| h(α/(α+1)) node product at {eta_plus}"),
            &lift * &h(eta_plus).at_shifted_alpha(),
            AlphaRational::from_poly(h_lift),
        ),
        Identity::new(
            format!("e(ρ⁺) = e(δ)(1+α)^|η| b(α/(α+1)) at {eta_plus}"),
            e(&rho_plus),
            &(&e(&delta) * &lift) * &b(&ep).at_shifted_alpha(),
        ),
        Identity::new(
            format!("e'(ρ⁺) = e'(δ)(1+α)^|η| e'(α/(α+1)) at {eta_plus}"),
            e_prime(&rho_plus),
            &(&e_prime(&delta) * &lift) * &e_prime(&ep).at_shifted_alpha(),
        ),
        Identity::new(
            format!("(i) e/e'(ρ⁺) at {eta_plus}"),
            &e(&rho_plus) / &e_prime(&rho_plus),
            &ed_ratio * &(&b(&ep) / &e_prime(&ep)).at_shifted_alpha(),
        ),
        Identity::new(
            format!("(ii) d(ρ⁺)/d'(ρ^R) at {eta_plus}"),
            &d(&rho_plus) / &d_prime(&rho_rev),
            (&h(eta_plus) / &d_prime(&ep)).at_shifted_alpha(),
        ),
        Identity::new(
            format!("(iii) e(δ)/e'(δ) at N={n}"),
            ed_ratio,
            &(&cauchy_side / &nfact) / &one_plus_alpha.pow(n as u32),
        ),
    ]
}

pub fn check_society_identities(eta_plus: &Partition) -> CheckResult {
    check_all(&society_identities(eta_plus))
}

/// The anti-symmetric norm ratio `⟨S,S⟩/N₀(α)` computed two ways: from the
/// symmetric norm at α/(α+1) (with the `N₀` ratio replaced by `N!·e_δ/e′_δ`),
/// and directly from the diagram of `ρ⁺`.
pub fn norm_reconciliation(eta_plus: &Partition) -> Identity {
    let n = eta_plus.n();
    let ep = eta_plus.as_composition();
    let delta = staircase(n).as_composition();
    let nfact = factorial_q(n as u64);
    let shifted_norm = (&(&b(&ep) * &d_prime(&ep)) / &(&e_prime(&ep) * &h(eta_plus))).at_shifted_alpha();
    let black = &(&shifted_norm * &nfact) * &(&e(&delta) / &e_prime(&delta));
    Identity::new(
        format!("norm of S via P(α/(α+1)) vs ρ diagram at {eta_plus}"),
        black,
        norm_ratio_s(eta_plus),
    )
}

/// `⟨S_{ρ⁺}, S_{ρ⁺}⟩ / N₀(α) = N! d′_{ρ^R} e_{ρ⁺} / (d_{ρ⁺} e′_{ρ⁺})`.
pub fn norm_ratio_s(eta_plus: &Partition) -> AlphaRational {
    let rho_plus = add_staircase(eta_plus).as_composition();
    let rho_rev = reverse_partition(&rho_plus);
    &factorial_q(eta_plus.n() as u64)
        * &(&(&d_prime(&rho_rev) * &e(&rho_plus)) / &(&d(&rho_plus) * &e_prime(&rho_plus)))
}

pub fn check_norm_reconciliation(eta_plus: &Partition) -> CheckResult {
    norm_reconciliation(eta_plus).check()
}

/// `P_κ(1^N)` and `N_κ/N_0` in both of their closed forms.
pub fn p_formula_identities(kappa: &Partition) -> Vec<Identity> {
    vec![
        Identity::new(
            format!("P(1^N) b/h vs N!/f! e/d at {kappa}"),
            eval_p_at_ones(kappa),
            eval_p_at_ones_via_reverse(kappa),
        ),
        Identity::new(
            format!("norm ratio of P, both forms, at {kappa}"),
            norm_ratio_p(kappa),
            norm_ratio_p_via_reverse(kappa),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compositions_up_to, partitions_up_to};

    fn q(s: &str) -> AlphaRational {
        s.parse().unwrap()
    }

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec())
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn single_node_constants() {
        for n in 1..=5usize {
            let mut parts = vec![0; n];
            parts[n - 1] = 1;
            let eta = c(&parts);
            let expect = AlphaRational::linear(1, n as i64);
            assert_eq!(d(&eta), expect);
            assert_eq!(e(&eta), expect);
            assert_eq!(eval_e_at_ones(&eta), AlphaRational::one());
            assert_eq!(norm_ratio_e(&eta), AlphaRational::one());
        }
        assert_eq!(d_prime(&c(&[1, 0])), q("α"));
        assert_eq!(d_prime(&c(&[0, 1])), q("α+1"));
        assert_eq!(eval_e_at_ones(&c(&[1, 0, 0])), q("(α+3)/(α+1)"));
        assert_eq!(u_eta(&c(&[1, 0])), q("α/(α+1)"));
        assert_eq!(u_eta(&c(&[0, 1])), q("(α+1)/(α+2)"));
    }

    #[test]
    fn empty_diagram_is_one() {
        for kind in ConstantKind::ALL {
            assert_eq!(constant(kind, &c(&[0, 0, 0])).unwrap(), AlphaRational::one());
        }
        assert_eq!(eval_e_at_ones(&c(&[0, 0])), AlphaRational::one());
        assert_eq!(u_eta(&c(&[0, 0])), AlphaRational::one());
        assert_eq!(v_kappa(&part(&[0, 0])), AlphaRational::one());
        assert_eq!(norm_ratio_p(&part(&[0, 0])), AlphaRational::one());
        assert_eq!(gen_factorial(&q("α+7"), &part(&[0, 0])), AlphaRational::one());
    }

    #[test]
    fn h_requires_partition() {
        assert_eq!(
            constant(ConstantKind::H, &c(&[0, 1])),
            Err(Error::NotAPartition("(0,1)".into()))
        );
    }

    #[test]
    fn symmetric_values() {
        assert_eq!(eval_p_at_ones(&part(&[1, 0, 0])), q("3"));
        assert_eq!(eval_p_at_ones(&part(&[2, 0])), q("2(α+2)/(α+1)"));
        assert_eq!(eval_p_at_ones(&part(&[1, 1])), AlphaRational::one());
        for n in 2..=4 {
            let mut parts = vec![0; n];
            parts[0] = 1;
            assert_eq!(norm_ratio_p(&part(&parts)), q(&format!("{n}α/(α+{})", n - 1)));
            assert_eq!(v_kappa(&part(&parts)), q("α"));
        }
        assert_eq!(v_kappa(&part(&[2, 0])), q("2α^2/(α+1)"));
    }

    #[test]
    fn composition_dependence_witness() {
        assert_ne!(d_prime(&c(&[1, 0])), d_prime(&c(&[0, 1])));
        for n in 1..=4 {
            for eta in compositions_up_to(5, n) {
                let rev = reverse_partition(&eta);
                assert_eq!(e(&eta), e(&rev));
                assert_eq!(e_prime(&eta), e_prime(&rev));
                assert_eq!(b(&eta), b(&rev));
            }
        }
    }

    #[test]
    fn generalized_factorial_sweep() {
        for n in 1..=4 {
            for eta in compositions_up_to(5, n) {
                check_all(&gen_factorial_identities(&eta)).unwrap();
            }
        }
    }

    #[test]
    fn c_rho_values() {
        // Weakly increasing ρ: the simplified form reduces to the staircase sign.
        assert_eq!(c_rho(&c(&[0, 1]), CRhoForm::Simplified).unwrap(), q("-1"));
        assert_eq!(c_rho(&c(&[0, 1, 2]), CRhoForm::Simplified).unwrap(), q("-1"));
        assert_eq!(c_rho(&c(&[0, 1, 2, 3]), CRhoForm::Simplified).unwrap(), q("1"));
        assert_eq!(c_rho(&c(&[1, 0]), CRhoForm::Simplified).unwrap(), q("-α/(α+1)"));
        assert_eq!(c_rho_signed(&c(&[1, 0])).unwrap(), q("α/(α+1)"));
        assert!(matches!(
            c_rho(&c(&[1, 1]), CRhoForm::HookForm),
            Err(Error::NonDistinctParts(_))
        ));
        for n in 1..=3 {
            for rho in compositions_up_to(6, n).into_iter().filter(has_distinct_parts) {
                assert_eq!(
                    c_rho(&rho, CRhoForm::HookForm).unwrap(),
                    c_rho(&rho, CRhoForm::Simplified).unwrap(),
                    "{rho}"
                );
            }
        }
    }

    #[test]
    fn hook_identity_examples() {
        check_hook_identity(&c(&[1, 0])).unwrap();
        check_hook_identity(&c(&[1, 1])).unwrap();
        check_hook_identity(&c(&[8, 7, 7, 4, 3, 3, 2, 1, 0])).unwrap();
        for n in 1..=4 {
            for k in partitions_up_to(6, n) {
                check_hook_identity(&k.as_composition()).unwrap();
                check_all(&p_formula_identities(&k)).unwrap();
            }
        }
    }

    #[test]
    fn society_and_reconciliation() {
        for n in 1..=4 {
            for k in partitions_up_to(5, n) {
                check_society_identities(&k).unwrap();
                check_norm_reconciliation(&k).unwrap();
            }
        }
    }

    #[test]
    fn corrupted_identity_is_caught() {
        let mut ids = society_identities(&part(&[1, 0]));
        ids[5].left = &ids[5].left + &AlphaRational::one();
        assert!(check_all(&ids).is_err());
    }
}
