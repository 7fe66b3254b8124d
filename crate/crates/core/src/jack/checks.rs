use std::sync::Arc;

use super::{JackCache, PRoute, ParamForm};
use crate::check::{expect, expect_eq, from_error, CheckResult, Mismatch};
use crate::combinatorics::{
    composition_lt, dominance_leq, eigenvalue_vector, has_distinct_parts, signed_permutations,
    sort_to_partition, Composition, Partition,
};
use crate::error::Result;
use crate::field::Field;
use crate::polyalg::{
    antisymmetrize, apply_transposition, cherednik_apply, d2_apply, is_antisymmetric, is_symmetric,
    symmetrize, MultiPoly,
};
use crate::scalars::{
    add_staircase, c_rho, c_rho_signed, d, eval_e_at_ones, eval_p_at_ones, eval_p_at_ones_via_reverse,
    AlphaRational, CRhoForm,
};

/// Where the checks obtain their polynomials. The cache is the canonical
/// source; the verification harness wraps it to inject perturbations.
pub trait PolySource: Sync {
    fn e(&self, eta: &Composition) -> Arc<MultiPoly>;
    fn p(&self, kappa: &Partition, param: ParamForm) -> Arc<MultiPoly>;
    fn s(&self, rho_plus: &Partition) -> Result<Arc<MultiPoly>>;
    fn p_by_route(&self, kappa: &Partition, route: PRoute) -> MultiPoly;
}

impl PolySource for JackCache {
    fn e(&self, eta: &Composition) -> Arc<MultiPoly> {
        JackCache::e(self, eta)
    }
    fn p(&self, kappa: &Partition, param: ParamForm) -> Arc<MultiPoly> {
        JackCache::p(self, kappa, param)
    }
    fn s(&self, rho_plus: &Partition) -> Result<Arc<MultiPoly>> {
        JackCache::s(self, rho_plus)
    }
    fn p_by_route(&self, kappa: &Partition, route: PRoute) -> MultiPoly {
        JackCache::p_by_route(self, kappa, route)
    }
}

const WITNESS_LIMIT: usize = 240;

fn clip(s: String) -> String {
    if s.chars().count() <= WITNESS_LIMIT {
        s
    } else {
        let head: String = s.chars().take(WITNESS_LIMIT).collect();
        format!("{head}…")
    }
}

/// Exact polynomial equality; the witness shows the difference.
pub fn poly_eq(what: impl Into<String>, left: &MultiPoly, right: &MultiPoly) -> CheckResult {
    if left == right {
        return Ok(());
    }
    let diff = left
        .checked_sub(right)
        .map(|p| p.to_string())
        .unwrap_or_else(|e| e.to_string());
    Err(Mismatch {
        what: what.into(),
        left: clip(left.to_string()),
        right: clip(format!("{right}  [difference: {diff}]")),
    })
}

/// `ξ_i E_η = η̄_i E_η` for every `i`.
pub fn check_e_eigen(e: &MultiPoly, eta: &Composition) -> CheckResult {
    let alpha = AlphaRational::alpha();
    for (idx, ev) in eigenvalue_vector(eta).iter().enumerate() {
        let lhs = cherednik_apply(e, idx + 1, &alpha).map_err(|err| from_error("ξ", err))?;
        poly_eq(format!("ξ_{} E{eta}", idx + 1), &lhs, &e.scale(ev))?;
    }
    Ok(())
}

/// Leading coefficient one at `z^η`; every other monomial lies below `η`.
pub fn check_e_triangular(e: &MultiPoly, eta: &Composition) -> CheckResult {
    expect_eq(
        format!("coefficient of z^{eta} in E{eta}"),
        &e.coeff_or_zero(eta.parts()),
        &AlphaRational::one(),
    )?;
    for (exp, _) in e.terms() {
        let nu = Composition::new(exp.clone());
        if nu == *eta {
            continue;
        }
        let below = composition_lt(&nu, eta).unwrap_or(false);
        expect(
            format!("E{eta} triangular"),
            below,
            format!("monomial z^{nu} is not below {eta}"),
        )?;
    }
    Ok(())
}

/// `E_η(1^N) = e_η/d_η`.
pub fn check_e_at_ones(e: &MultiPoly, eta: &Composition) -> CheckResult {
    expect_eq(format!("E{eta}(1^N)"), &e.eval_at_ones(), &eval_e_at_ones(eta))
}

/// The three-case action of `s_i` on `E_η`, with `E_{s_i η}` built
/// independently. `i` is 1-based.
pub fn check_s_i_action(
    e_eta: &MultiPoly,
    e_swapped: &MultiPoly,
    eta: &Composition,
    i: usize,
) -> CheckResult {
    let lhs = apply_transposition(e_eta, i, i + 1).map_err(|err| from_error("s_i", err))?;
    let (a, b) = (eta.parts()[i - 1], eta.parts()[i]);
    let ev = eigenvalue_vector(eta);
    let delta = ev[i - 1].minus(&ev[i]);
    let what = format!("s_{i} E{eta}");
    if a == b {
        return poly_eq(what, &lhs, e_eta);
    }
    let inv = delta.inverse().map_err(|err| from_error(&what, err))?;
    let mix = if a > b {
        AlphaRational::one().minus(&inv.times(&inv))
    } else {
        AlphaRational::one()
    };
    let rhs = &e_eta.scale(&inv) + &e_swapped.scale(&mix);
    poly_eq(what, &lhs, &rhs)
}

/// The eigenvalue `λ` with `D₂ f = λ f`, if `f` is a D₂-eigenfunction.
pub fn d2_eigenvalue(f: &MultiPoly) -> Option<AlphaRational> {
    let g = d2_apply(f, &AlphaRational::alpha()).ok()?;
    if g.is_zero() {
        return Some(AlphaRational::zero());
    }
    g.proportionality(f)
}

/// Symmetric, monic in `m_κ`, a D₂-eigenfunction, and supported on `m_μ`
/// with `μ ≤ κ` in dominance.
pub fn check_p_symmetric_eigen(p: &MultiPoly, kappa: &Partition) -> CheckResult {
    expect(format!("P{kappa} symmetric"), is_symmetric(p), p)?;
    expect_eq(
        format!("coefficient of z^{kappa} in P{kappa}"),
        &p.coeff_or_zero(kappa.parts()),
        &AlphaRational::one(),
    )?;
    expect(
        format!("D₂ P{kappa} proportional to P{kappa}"),
        d2_eigenvalue(p).is_some(),
        clip(p.to_string()),
    )?;
    for (exp, _) in p.terms() {
        let mu = sort_to_partition(&Composition::new(exp.clone()));
        let ok = dominance_leq(&mu, kappa).unwrap_or(false);
        expect(format!("P{kappa} dominance support"), ok, format!("m{mu} occurs"))?;
    }
    Ok(())
}

/// Both constructions of `P_κ` agree with `p`, and `P_κ(1^N)` matches both
/// closed forms.
pub fn check_pe_vs_sym(src: &dyn PolySource, p: &MultiPoly, kappa: &Partition) -> CheckResult {
    let sym = src.p_by_route(kappa, PRoute::Symmetrized);
    poly_eq(format!("P{kappa}: E-expansion vs Sym E_(κ^R)"), p, &sym)?;
    expect_eq(
        format!("P{kappa}(1^N) vs b/h"),
        &p.eval_at_ones(),
        &eval_p_at_ones(kappa),
    )?;
    expect_eq(
        format!("P{kappa}(1^N) vs N!/∏f! e/d"),
        &p.eval_at_ones(),
        &eval_p_at_ones_via_reverse(kappa),
    )
}

/// `P_κ(z_1, …, z_{N−1}, 0) = P_κ(z_1, …, z_{N−1})`.
pub fn check_p_stability(p_big: &MultiPoly, p_small: &MultiPoly, kappa: &Partition) -> CheckResult {
    poly_eq(
        format!("P{kappa} with z_N = 0"),
        &p_big.drop_last_variable(),
        p_small,
    )
}

/// `S_{ρ⁺}` is anti-symmetric with leading monomial `z^{ρ⁺}`.
pub fn check_s_shape(s: &MultiPoly, rho_plus: &Partition) -> CheckResult {
    expect(
        format!("S{rho_plus} anti-symmetric"),
        is_antisymmetric(s),
        clip(s.to_string()),
    )?;
    expect_eq(
        format!("leading coefficient of S{rho_plus}"),
        &s.coeff_or_zero(rho_plus.parts()),
        &AlphaRational::one(),
    )
}

/// `Asym E_ρ = c_ρ S_{ρ⁺}`. Returns the measured `c_ρ`, or `None` when `ρ`
/// has a repeated part (and `Asym E_ρ` vanishes).
pub fn check_asym_formula(
    e_rho: &MultiPoly,
    s: Option<&MultiPoly>,
    rho: &Composition,
) -> std::result::Result<Option<AlphaRational>, Mismatch> {
    let asym = antisymmetrize(e_rho);
    if !has_distinct_parts(rho) {
        expect(format!("Asym E{rho} = 0"), asym.is_zero(), clip(asym.to_string()))?;
        return Ok(None);
    }
    let s = s.ok_or_else(|| from_error(format!("Asym E{rho}"), "missing S"))?;
    let c = asym.proportionality(s).ok_or_else(|| Mismatch {
        what: format!("Asym E{rho} proportional to S"),
        left: clip(asym.to_string()),
        right: clip(s.to_string()),
    })?;
    let simplified = c_rho(rho, CRhoForm::Simplified).map_err(|e| from_error("c_ρ", e))?;
    let hook = c_rho(rho, CRhoForm::HookForm).map_err(|e| from_error("c_ρ", e))?;
    expect_eq(format!("c_ρ closed forms agree at {rho}"), &hook, &simplified)?;
    expect(
        format!("|c_ρ| = d′_ρ/d′_(ρ^R) at {rho}"),
        c == simplified || c == simplified.negated(),
        format!("measured {c}, closed form ±({simplified})"),
    )?;
    let signed = c_rho_signed(rho).map_err(|e| from_error("c_ρ", e))?;
    expect_eq(format!("measured c_ρ at {rho}"), &c, &signed)?;
    Ok(Some(c))
}

/// `(−1)^{N(N−1)/2}`.
pub fn staircase_sign(n: usize) -> i64 {
    if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The expansion of `Δ P_{η⁺}^{(α/(α+1))}` in `E_{σ(ρ)}`, `ρ = η⁺ + δ`, taken
/// literally with its `(−1)^{N(N−1)/2}` prefactor, `σ(ρ)_j = ρ_{σ(j)}` and
/// `ℓ(σ)` the inversion count.
pub fn du_expansion_literal(src: &dyn PolySource, eta_plus: &Partition) -> MultiPoly {
    let n = eta_plus.n();
    let rho = add_staircase(eta_plus).as_composition();
    let mut out = MultiPoly::zero(n);
    for (perm, sign) in signed_permutations(n) {
        let sr = Composition::new(perm.iter().map(|&k| rho.parts()[k]).collect());
        let coeff = d(&sr).times(&AlphaRational::from_int(sign as i64));
        out = &out + &src.e(&sr).scale(&coeff);
    }
    let pref = AlphaRational::from_int(staircase_sign(n));
    out.scale(&pref.quotient(&d(&rho)).expect("d is nonzero"))
}

/// Compares `S_{ρ⁺}` with the literal expansion and returns the measured
/// sign `S / literal`. The check requires the sign to be
/// `(−1)^{N(N−1)/2}`, i.e. the expansion holds without its prefactor.
pub fn check_du_expansion(src: &dyn PolySource, eta_plus: &Partition) -> std::result::Result<i64, Mismatch> {
    let rho_plus = add_staircase(eta_plus);
    let s = src.s(&rho_plus).map_err(|e| from_error("S", e))?;
    let literal = du_expansion_literal(src, eta_plus);
    let what = format!("Δ P{eta_plus}[α/(α+1)] in E_σ(ρ)");
    let expected = staircase_sign(eta_plus.n());
    poly_eq(
        what.clone(),
        &s,
        &literal.scale(&AlphaRational::from_int(expected)),
    )?;
    Ok(expected)
}

/// `c̃_η` with `Sym E_η = c̃_η P_{η⁺}`.
pub fn sym_constant(src: &dyn PolySource, eta: &Composition) -> std::result::Result<AlphaRational, Mismatch> {
    let sym = symmetrize(&src.e(eta));
    let kappa = sort_to_partition(eta);
    let p = src.p(&kappa, ParamForm::Alpha);
    sym.proportionality(&p).ok_or_else(|| Mismatch {
        what: format!("Sym E{eta} proportional to P{kappa}"),
        left: clip(sym.to_string()),
        right: clip(p.to_string()),
    })
}
