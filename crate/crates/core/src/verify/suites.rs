use std::collections::BTreeMap;

use itertools::Itertools;

use super::{run_cases, Bound, Ctx, SuiteOutcome};
use crate::check::{expect, expect_eq, from_error, CheckResult, Mismatch};
use crate::combinatorics::{
    compositions, compositions_up_to, has_distinct_parts, partitions_up_to, sort_to_partition, staircase,
    Composition, Partition,
};
use crate::field::{Field, Rational};
use crate::jack::{
    check_asym_formula, check_binomial, check_du_expansion, check_e_at_ones, check_e_eigen,
    check_e_triangular, check_omega_sum, check_p_stability, check_p_symmetric_eigen, check_pe_vs_sym,
    check_pi_sum, check_s_i_action, check_s_shape, check_u_from_omega, check_v_from_pi, s_index,
    staircase_sign, sym_constant, BinomialForm, ParamForm, PolySource,
};
use crate::oracle::{gram_schmidt_p_with, solve_e_linear_avoiding_collisions, CtPairing};
use crate::parallel::par_map;
use crate::polyalg::{MultiPoly, QPoly};
use crate::scalars::{
    eval_e_at_ones, eval_p_at_ones, factorial, gen_factorial_identities, hook_identities, norm_ratio_e,
    norm_ratio_p, norm_ratio_s, norm_reconciliation, p_formula_identities, society_identities, AlphaRational,
    Identity,
};

/// A named verification suite.
pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    pub run: fn(&Ctx) -> SuiteOutcome,
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "binomial.bi2",
        summary: "∏(1−x_j)^(−r) expanded in E_η",
        run: binomial_e,
    },
    Suite {
        name: "binomial.bi3",
        summary: "∏(1−x_j)^(−r) expanded in P_κ",
        run: binomial_p,
    },
    Suite {
        name: "d2.P",
        summary: "P_κ symmetric, monic, D₂-eigenfunction, dominance support",
        run: d2_p,
    },
    Suite {
        name: "eigen.E",
        summary: "ξ_i E_η = η̄_i E_η and the triangular monic form",
        run: eigen_e,
    },
    Suite {
        name: "oracle.E-linear",
        summary: "E_η at α₀ by solving the eigen-equations",
        run: oracle_e_linear,
    },
    Suite {
        name: "oracle.P-gram",
        summary: "P_κ at 1/k by Gram–Schmidt under the constant term",
        run: oracle_p_gram,
    },
    Suite {
        name: "prop2.1",
        summary: "E_η pairwise orthogonal under the torus inner product",
        run: e_orthogonal,
    },
    Suite {
        name: "prop2.2",
        summary: "truncated Ω equals Σ E⊗E/u",
        run: omega_sum,
    },
    Suite {
        name: "prop2.3",
        summary: "E_η(1^N) = e_η/d_η",
        run: e_at_ones,
    },
    Suite {
        name: "prop2.4",
        summary: "⟨E_η,E_η⟩/⟨1,1⟩ by constant term",
        run: e_norms,
    },
    Suite {
        name: "prop2.5",
        summary: "u_η read off Ω",
        run: u_from_omega,
    },
    Suite {
        name: "prop3.1",
        summary: "P_κ pairwise orthogonal under the torus inner product",
        run: p_orthogonal,
    },
    Suite {
        name: "prop3.2",
        summary: "truncated Π equals Σ P⊗P/v",
        run: pi_sum,
    },
    Suite {
        name: "prop3.3",
        summary: "P_κ(1^N) and the norm of P in both closed forms",
        run: p_evaluation,
    },
    Suite {
        name: "prop3.4",
        summary: "⟨P_κ,P_κ⟩/⟨1,1⟩ by constant term",
        run: p_norms,
    },
    Suite {
        name: "prop3.5",
        summary: "v_κ read off Π at N and N+1",
        run: v_from_pi,
    },
    Suite {
        name: "prop3.6",
        summary: "Asym E_ρ = c_ρ S_ρ⁺ with the closed-form c_ρ",
        run: asym,
    },
    Suite {
        name: "prop3.6.du",
        summary: "S_ρ⁺ expanded in E_σ(ρ)",
        run: du_expansion,
    },
    Suite {
        name: "s-action",
        summary: "three-case action of s_i on E_η",
        run: s_action,
    },
    Suite {
        name: "scalars.gen-factorial",
        summary: "e, e′, b as generalized factorials",
        run: gen_factorials,
    },
    Suite {
        name: "society",
        summary: "diagram identities linking ρ⁺ and η⁺ at α/(α+1)",
        run: society,
    },
    Suite {
        name: "society.ct",
        summary: "norm of S by constant term at α = 1",
        run: society_ct,
    },
    Suite {
        name: "stability.P",
        summary: "P_κ with z_N = 0 equals P_κ in N−1 variables",
        run: stability_p,
    },
    Suite {
        name: "sym.c-tilde",
        summary: "Sym E_η proportional to P_η⁺",
        run: sym_c_tilde,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

fn describe(sweep: &[Bound]) -> String {
    sweep
        .iter()
        .map(|b| format!("N={} deg≤{}", b.n, b.degree))
        .join(", ")
}

fn sweep_compositions(sweep: &[Bound]) -> Vec<Composition> {
    sweep
        .iter()
        .flat_map(|b| compositions_up_to(b.degree, b.n))
        .collect()
}

fn sweep_partitions(sweep: &[Bound]) -> Vec<Partition> {
    sweep
        .iter()
        .flat_map(|b| partitions_up_to(b.degree, b.n))
        .collect()
}

fn ks_text(ks: &[u32]) -> String {
    format!("k∈{{{}}}", ks.iter().join(","))
}

fn inv_k(k: u32) -> Rational {
    Rational::new(1.into(), k.into())
}

fn specialize(p: &MultiPoly, alpha0: &Rational, what: &str) -> Result<QPoly, Mismatch> {
    p.eval_alpha(alpha0)
        .map_err(|e| from_error(format!("{what} at α = {alpha0}"), e))
}

fn eval_scalar(x: &AlphaRational, alpha0: &Rational, what: &str) -> Result<Rational, Mismatch> {
    x.eval_at(alpha0)
        .map_err(|e| from_error(format!("{what} at α = {alpha0}"), e))
}

/// Identities whose left side is the implementation value under test.
fn check_identities(ctx: &Ctx, ids: Vec<Identity>) -> CheckResult {
    for id in ids {
        let left = ctx.tamper_scalar(id.left);
        expect_eq(id.what, &left, &id.right)?;
    }
    Ok(())
}

/// One pairing per `(N, k)` occurring in the sweep.
fn pairings(sweep: &[Bound], ks: &[u32]) -> BTreeMap<(usize, u32), CtPairing> {
    let keys: Vec<(usize, u32)> = sweep
        .iter()
        .map(|b| b.n)
        .unique()
        .cartesian_product(ks.iter().copied())
        .collect();
    keys.iter()
        .copied()
        .zip(par_map(&keys, |&(n, k)| CtPairing::new(n, k)))
        .collect()
}

fn eigen_e(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.e_sweep;
    let cases = run_cases(
        &sweep_compositions(sweep),
        |eta| format!("E{eta}"),
        |eta| {
            let e = ctx.e(eta);
            check_e_eigen(&e, eta)?;
            check_e_triangular(&e, eta)
        },
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn e_at_ones(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.e_sweep;
    let cases = run_cases(
        &sweep_compositions(sweep),
        |eta| format!("E{eta}"),
        |eta| check_e_at_ones(&ctx.e(eta), eta),
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn s_action(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.e_sweep;
    let items: Vec<(Composition, usize)> = sweep_compositions(sweep)
        .into_iter()
        .flat_map(|eta| (1..eta.n()).map(move |i| (eta.clone(), i)))
        .collect();
    let cases = run_cases(
        &items,
        |(eta, i)| format!("s_{i} E{eta}"),
        |(eta, i)| {
            let swapped = eta.swap_parts(*i, *i + 1).map_err(|e| from_error("s_i η", e))?;
            check_s_i_action(&ctx.e(eta), &ctx.e(&swapped), eta, *i)
        },
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn sym_c_tilde(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.e_sweep;
    let items = sweep_compositions(sweep);
    let measured = par_map(&items, |eta| {
        let c = sym_constant(ctx, eta)?;
        let kappa = sort_to_partition(eta);
        let nfact = AlphaRational::from_bigint(factorial(eta.n() as u64));
        let expected = &(&nfact * &eval_e_at_ones(eta)) / &eval_p_at_ones(&kappa);
        expect_eq(format!("c̃{eta} vs N! E(1^N)/P(1^N)"), &c, &expected)?;
        Ok(c)
    });
    let notes = items
        .iter()
        .zip(&measured)
        .filter(|(eta, c)| c.is_ok() && !eta.is_partition() && eta.n() <= 3 && eta.modulus() <= 2)
        .map(|(eta, c)| format!("c̃{eta} = {}", c.as_ref().expect("filtered")))
        .collect();
    let cases = items
        .iter()
        .zip(measured)
        .map(|(eta, c)| (format!("Sym E{eta}"), c.map(|_| ())))
        .collect();
    SuiteOutcome::new(describe(sweep), cases).with_notes(notes)
}

fn e_orthogonal(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.ct_sweep;
    let pairings = pairings(sweep, &ctx.config.ks);
    let items: Vec<(usize, u32, u32)> = sweep
        .iter()
        .flat_map(|b| (0..=b.degree).map(move |m| (b.n, m)))
        .cartesian_product(ctx.config.ks.iter().copied())
        .map(|((n, m), k)| (n, m, k))
        .unique()
        .collect();
    let cases = run_cases(
        &items,
        |(n, m, k)| format!("N={n} |η|={m} k={k}"),
        |&(n, m, k)| {
            let pairing = &pairings[&(n, k)];
            expect(
                "weight homogeneous of degree 0",
                pairing.weight().is_homogeneous_of(0),
                "weight",
            )?;
            let alpha0 = inv_k(k);
            let etas = compositions(m, n);
            let specialized = etas
                .iter()
                .map(|eta| specialize(&ctx.e(eta), &alpha0, &format!("E{eta}")))
                .collect::<Result<Vec<_>, _>>()?;
            for (a, b) in (0..etas.len()).tuple_combinations() {
                let ip = pairing.inner(&specialized[a], &specialized[b]);
                expect_eq(
                    format!("⟨E{}, E{}⟩ at k={k}", etas[a], etas[b]),
                    &ip,
                    &<Rational as Field>::zero(),
                )?;
            }
            Ok(())
        },
    );
    SuiteOutcome::new(format!("{} {}", describe(sweep), ks_text(&ctx.config.ks)), cases)
}

fn e_norms(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.ct_sweep;
    let pairings = pairings(sweep, &ctx.config.ks);
    let items: Vec<(Composition, u32)> = sweep_compositions(sweep)
        .into_iter()
        .cartesian_product(ctx.config.ks.iter().copied())
        .collect();
    let cases = run_cases(
        &items,
        |(eta, k)| format!("E{eta} k={k}"),
        |(eta, k)| {
            let pairing = &pairings[&(eta.n(), *k)];
            let alpha0 = inv_k(*k);
            let e = specialize(&ctx.e(eta), &alpha0, "E")?;
            let base = pairing.inner(&QPoly::one(eta.n()), &QPoly::one(eta.n()));
            let ratio = pairing.inner(&e, &e) / base;
            let expected = eval_scalar(&norm_ratio_e(eta), &alpha0, "norm ratio of E")?;
            expect_eq(format!("⟨E{eta},E{eta}⟩/⟨1,1⟩ at k={k}"), &ratio, &expected)
        },
    );
    SuiteOutcome::new(format!("{} {}", describe(sweep), ks_text(&ctx.config.ks)), cases)
}

fn p_orthogonal(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.ct_sweep;
    let pairings = pairings(sweep, &ctx.config.ks);
    let items: Vec<(usize, u32, u32)> = sweep
        .iter()
        .flat_map(|b| (0..=b.degree).map(move |m| (b.n, m)))
        .cartesian_product(ctx.config.ks.iter().copied())
        .map(|((n, m), k)| (n, m, k))
        .unique()
        .collect();
    let cases = run_cases(
        &items,
        |(n, m, k)| format!("N={n} |κ|={m} k={k}"),
        |&(n, m, k)| {
            let pairing = &pairings[&(n, k)];
            let alpha0 = inv_k(k);
            let kappas = crate::combinatorics::partitions(m, n);
            let specialized = kappas
                .iter()
                .map(|kappa| specialize(&ctx.p(kappa, ParamForm::Alpha), &alpha0, &format!("P{kappa}")))
                .collect::<Result<Vec<_>, _>>()?;
            for (a, b) in (0..kappas.len()).tuple_combinations() {
                let ip = pairing.inner(&specialized[a], &specialized[b]);
                expect_eq(
                    format!("⟨P{}, P{}⟩ at k={k}", kappas[a], kappas[b]),
                    &ip,
                    &<Rational as Field>::zero(),
                )?;
            }
            Ok(())
        },
    );
    SuiteOutcome::new(format!("{} {}", describe(sweep), ks_text(&ctx.config.ks)), cases)
}

fn p_norms(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.ct_sweep;
    let pairings = pairings(sweep, &ctx.config.ks);
    let items: Vec<(Partition, u32)> = sweep_partitions(sweep)
        .into_iter()
        .cartesian_product(ctx.config.ks.iter().copied())
        .collect();
    let cases = run_cases(
        &items,
        |(kappa, k)| format!("P{kappa} k={k}"),
        |(kappa, k)| {
            let pairing = &pairings[&(kappa.n(), *k)];
            let alpha0 = inv_k(*k);
            let p = specialize(&ctx.p(kappa, ParamForm::Alpha), &alpha0, "P")?;
            let base = pairing.inner(&QPoly::one(kappa.n()), &QPoly::one(kappa.n()));
            let ratio = pairing.inner(&p, &p) / base;
            let expected = eval_scalar(&norm_ratio_p(kappa), &alpha0, "norm ratio of P")?;
            expect_eq(format!("⟨P{kappa},P{kappa}⟩/⟨1,1⟩ at k={k}"), &ratio, &expected)
        },
    );
    SuiteOutcome::new(format!("{} {}", describe(sweep), ks_text(&ctx.config.ks)), cases)
}

fn kernel_suite(ctx: &Ctx, check: fn(&dyn PolySource, usize, u32) -> CheckResult) -> SuiteOutcome {
    let sweep = &ctx.config.kernel_sweep;
    let cases = run_cases(
        sweep,
        |b| format!("N={} D={}", b.n, b.degree),
        |b| check(ctx, b.n, b.degree),
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn omega_sum(ctx: &Ctx) -> SuiteOutcome {
    kernel_suite(ctx, check_omega_sum)
}

fn u_from_omega(ctx: &Ctx) -> SuiteOutcome {
    kernel_suite(ctx, check_u_from_omega)
}

fn pi_sum(ctx: &Ctx) -> SuiteOutcome {
    kernel_suite(ctx, check_pi_sum)
}

fn v_from_pi(ctx: &Ctx) -> SuiteOutcome {
    kernel_suite(ctx, check_v_from_pi)
}

fn binomial(ctx: &Ctx, form: BinomialForm) -> SuiteOutcome {
    let sweep = &ctx.config.binomial_sweep;
    let rs = &ctx.config.rs;
    let items: Vec<(Bound, Rational)> = sweep
        .iter()
        .copied()
        .cartesian_product(rs.iter().cloned())
        .collect();
    let cases = run_cases(
        &items,
        |(b, r)| format!("N={} D={} r={r}", b.n, b.degree),
        |(b, r)| check_binomial(ctx, r, b.n, b.degree, form),
    );
    let distinct = rs.iter().unique().count();
    let notes = sweep
        .iter()
        .map(|b| b.degree)
        .unique()
        .filter(|&d| distinct < d as usize + 1)
        .map(|d| format!("{distinct} points in r do not determine a degree-{d} polynomial in r"))
        .collect();
    let params = format!("{} r∈{{{}}}", describe(sweep), rs.iter().join(","));
    SuiteOutcome::new(params, cases).with_notes(notes)
}

fn binomial_e(ctx: &Ctx) -> SuiteOutcome {
    binomial(ctx, BinomialForm::NonSymmetric)
}

fn binomial_p(ctx: &Ctx) -> SuiteOutcome {
    binomial(ctx, BinomialForm::Symmetric)
}

fn p_evaluation(ctx: &Ctx) -> SuiteOutcome {
    let scalar_sweep = &ctx.config.scalar_sweep;
    let p_sweep = &ctx.config.p_sweep;
    let mut cases = run_cases(
        &sweep_compositions(scalar_sweep),
        |eta| format!("hook identity at {eta}"),
        |eta| {
            let mut ids = hook_identities(eta);
            if eta.is_partition() {
                ids.extend(p_formula_identities(&sort_to_partition(eta)));
            }
            check_identities(ctx, ids)
        },
    );
    cases.extend(run_cases(
        &ctx.config.shapes,
        |kappa| format!("shape {kappa}"),
        |kappa| {
            let mut ids = hook_identities(&kappa.as_composition());
            ids.extend(p_formula_identities(kappa));
            check_identities(ctx, ids)
        },
    ));
    cases.extend(run_cases(
        &sweep_partitions(p_sweep),
        |kappa| format!("P{kappa}"),
        |kappa| check_pe_vs_sym(ctx, &ctx.p(kappa, ParamForm::Alpha), kappa),
    ));
    let params = format!(
        "scalars {}; polynomials {}; shapes {}",
        describe(scalar_sweep),
        describe(p_sweep),
        ctx.config.shapes.iter().join(" ")
    );
    SuiteOutcome::new(params, cases)
}

fn gen_factorials(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.scalar_sweep;
    let mut items = sweep_compositions(sweep);
    items.extend(ctx.config.shapes.iter().map(Partition::as_composition));
    let cases = run_cases(
        &items,
        |eta| format!("{eta}"),
        |eta| check_identities(ctx, gen_factorial_identities(eta)),
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn d2_p(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.p_sweep;
    let cases = run_cases(
        &sweep_partitions(sweep),
        |kappa| format!("P{kappa}"),
        |kappa| check_p_symmetric_eigen(&ctx.p(kappa, ParamForm::Alpha), kappa),
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn stability_p(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.p_sweep;
    let ns: Vec<usize> = sweep.iter().map(|b| b.n).collect();
    let items: Vec<Partition> = sweep
        .iter()
        .filter(|b| ns.contains(&(b.n + 1)))
        .flat_map(|b| partitions_up_to(b.degree, b.n))
        .collect();
    let cases = run_cases(
        &items,
        |kappa| format!("P{kappa} from N={}", kappa.n() + 1),
        |kappa| {
            let big = kappa.padded(kappa.n() + 1).map_err(|e| from_error("pad", e))?;
            check_p_stability(
                &ctx.p(&big, ParamForm::Alpha),
                &ctx.p(kappa, ParamForm::Alpha),
                kappa,
            )
        },
    );
    SuiteOutcome::new(describe(sweep), cases)
}

fn asym(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.asym_sweep;
    let items = sweep_compositions(sweep);
    let results = par_map(&items, |rho| -> Result<Option<AlphaRational>, Mismatch> {
        let s = if has_distinct_parts(rho) {
            let rho_plus = s_index(rho).map_err(|e| from_error("ρ⁺", e))?;
            let s = ctx.s(&rho_plus).map_err(|e| from_error("S", e))?;
            check_s_shape(&s, &rho_plus)?;
            Some(s)
        } else {
            None
        };
        check_asym_formula(&ctx.e(rho), s.as_deref(), rho)
    });
    let measured = results.iter().filter(|r| matches!(r, Ok(Some(_)))).count();
    let vanishing = results.iter().filter(|r| matches!(r, Ok(None))).count();
    let notes = vec![format!(
        "c_ρ = (−1)^inv(ρ) (−1)^(N(N−1)/2) d′_ρ/d′_(ρ^R) on {measured} distinct-part ρ; Asym E_ρ = 0 on {vanishing} others"
    )];
    let cases = items
        .iter()
        .zip(results)
        .map(|(rho, r)| (format!("Asym E{rho}"), r.map(|_| ())))
        .collect();
    SuiteOutcome::new(describe(sweep), cases).with_notes(notes)
}

fn du_expansion(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.asym_sweep;
    let items: Vec<Partition> = sweep
        .iter()
        .filter_map(|b| {
            let lift = staircase(b.n).modulus();
            (b.degree >= lift).then(|| partitions_up_to(b.degree - lift, b.n))
        })
        .flatten()
        .collect();
    let cases = run_cases(
        &items,
        |eta| format!("η⁺ = {eta}"),
        |eta| check_du_expansion(ctx, eta).map(|_| ()),
    );
    let notes = sweep
        .iter()
        .map(|b| b.n)
        .unique()
        .map(|n| format!("N={n}: S = {} × the literal expansion", staircase_sign(n)))
        .collect();
    SuiteOutcome::new(describe(sweep), cases).with_notes(notes)
}

fn society(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.society_sweep;
    let cases = run_cases(
        &sweep_partitions(sweep),
        |eta| format!("η⁺ = {eta}"),
        |eta| {
            let mut ids = society_identities(eta);
            ids.push(norm_reconciliation(eta));
            check_identities(ctx, ids)
        },
    );
    SuiteOutcome::new(describe(sweep), cases)
}

/// `⟨S,S⟩` at `k = 1` against the `P` norm at `α = 1/2`, `k = 2`, and against
/// both closed-form norm ratios.
fn society_ct(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.society_sweep;
    let ns: Vec<usize> = sweep.iter().map(|b| b.n).unique().collect();
    let items: Vec<Partition> = ns
        .iter()
        .flat_map(|&n| {
            let mut single = vec![0; n];
            single[0] = 1;
            [Partition::zero(n), Partition::new(single).expect("partition")]
        })
        .collect();
    let cases = run_cases(
        &items,
        |eta| format!("η⁺ = {eta}"),
        |eta| {
            let n = eta.n();
            let one = Rational::from_i64(1);
            let half = Rational::new(1.into(), 2.into());
            let (w1, w2) = (CtPairing::new(n, 1), CtPairing::new(n, 2));
            let rho_plus = crate::scalars::add_staircase(eta);
            let s = specialize(&*ctx.s(&rho_plus).map_err(|e| from_error("S", e))?, &one, "S")?;
            let p = specialize(&ctx.p(eta, ParamForm::Alpha), &half, "P")?;
            let unit = QPoly::one(n);
            let s_norm = w1.inner(&s, &s);
            expect_eq(
                format!("⟨S{rho_plus}⟩ at k=1 vs ⟨P{eta}⟩ at k=2"),
                &s_norm,
                &w2.inner(&p, &p),
            )?;
            let via_p = eval_scalar(&norm_ratio_p(eta), &half, "norm ratio of P")? * w2.inner(&unit, &unit);
            expect_eq(
                format!("⟨S{rho_plus}⟩ vs symmetric norm formula"),
                &s_norm,
                &via_p,
            )?;
            let via_s = eval_scalar(&norm_ratio_s(eta), &one, "norm ratio of S")? * w1.inner(&unit, &unit);
            expect_eq(
                format!("⟨S{rho_plus}⟩ vs anti-symmetric norm formula"),
                &s_norm,
                &via_s,
            )
        },
    );
    SuiteOutcome::new(format!("N∈{{{}}} η⁺∈{{0,(1,0,…)}}", ns.iter().join(",")), cases)
}

fn oracle_e_linear(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.e_sweep;
    let items: Vec<(Composition, Rational)> = sweep_compositions(sweep)
        .into_iter()
        .cartesian_product(ctx.config.alphas.iter().cloned())
        .collect();
    let results = par_map(&items, |(eta, a0)| -> Result<Rational, Mismatch> {
        let (used, lin) = solve_e_linear_avoiding_collisions(eta, a0)
            .map_err(|e| from_error(format!("linear solve for E{eta}"), e))?;
        let built = specialize(&ctx.e(eta), &used, "E")?;
        if lin != built {
            return Err(Mismatch {
                what: format!("E{eta} at α = {used}: recursion vs linear solve"),
                left: built.to_string(),
                right: lin.to_string(),
            });
        }
        Ok(used)
    });
    let notes = items
        .iter()
        .zip(&results)
        .filter_map(|((eta, a0), r)| match r {
            Ok(used) if used != a0 => Some(format!("E{eta}: α₀ = {a0} collides, used {used}")),
            _ => None,
        })
        .collect();
    let cases = items
        .iter()
        .zip(results)
        .map(|((eta, a0), r)| (format!("E{eta} α₀={a0}"), r.map(|_| ())))
        .collect();
    let params = format!(
        "{} α₀∈{{{}}}",
        describe(sweep),
        ctx.config.alphas.iter().join(",")
    );
    SuiteOutcome::new(params, cases).with_notes(notes)
}

fn oracle_p_gram(ctx: &Ctx) -> SuiteOutcome {
    let sweep = &ctx.config.ct_sweep;
    let pairings = pairings(sweep, &ctx.config.ks);
    let items: Vec<(Partition, u32)> = sweep_partitions(sweep)
        .into_iter()
        .cartesian_product(ctx.config.ks.iter().copied())
        .collect();
    let cases = run_cases(
        &items,
        |(kappa, k)| format!("P{kappa} k={k}"),
        |(kappa, k)| {
            let gram = gram_schmidt_p_with(kappa, &pairings[&(kappa.n(), *k)])
                .map_err(|e| from_error(format!("Gram–Schmidt for P{kappa}"), e))?;
            let built = specialize(&ctx.p(kappa, ParamForm::Alpha), &inv_k(*k), "P")?;
            if gram == built {
                Ok(())
            } else {
                Err(Mismatch {
                    what: format!("P{kappa} at k={k}: build vs Gram–Schmidt"),
                    left: built.to_string(),
                    right: gram.to_string(),
                })
            }
        },
    );
    SuiteOutcome::new(format!("{} {}", describe(sweep), ks_text(&ctx.config.ks)), cases)
}
