//! Registry of verification suites, run over configurable bounds and
//! collected into a deterministic report.

mod suites;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::check::{CheckResult, Mismatch};
use crate::combinatorics::{Composition, Partition};
use crate::error::Result;
use crate::field::{parse_rational, Field, Rational};
use crate::jack::{JackCache, PRoute, ParamForm, PolySource};
use crate::parallel::{par_map, with_jobs};
use crate::polyalg::{MultiPoly, Poly};
use crate::scalars::AlphaRational;

pub use suites::{suite_names, SUITES};

/// One cell of a sweep: ambient `N` and the largest modulus (or degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    #[serde(rename = "N")]
    pub n: usize,
    pub degree: u32,
}

impl Bound {
    pub const fn new(n: usize, degree: u32) -> Self {
        Bound { n, degree }
    }
}

fn upto(n_max: usize, degree: u32) -> Vec<Bound> {
    (1..=n_max).map(|n| Bound::new(n, degree)).collect()
}

/// Bounds for every suite plus the parameter lists they sweep.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Eigen-equations, `E(1^N)`, `s_i` action, `Sym E`, and the linear-algebra oracle.
    pub e_sweep: Vec<Bound>,
    /// Constant-term orthogonality and norm ratios.
    pub ct_sweep: Vec<Bound>,
    /// Truncated `Ω` and `Π` decompositions and the Gram–Schmidt oracle.
    pub kernel_sweep: Vec<Bound>,
    pub binomial_sweep: Vec<Bound>,
    /// Polynomial-side checks of `P_κ`.
    pub p_sweep: Vec<Bound>,
    /// Scalar identities among the diagram constants.
    pub scalar_sweep: Vec<Bound>,
    /// Antisymmetrization and the expansion of `Δ P` in `E`.
    pub asym_sweep: Vec<Bound>,
    pub society_sweep: Vec<Bound>,
    /// Single large shapes checked by the scalar suites only.
    pub shapes: Vec<Partition>,
    /// Integer `k = 1/α` for the constant-term oracle.
    pub ks: Vec<u32>,
    /// Points `r` for the binomial expansions.
    pub rs: Vec<Rational>,
    /// Points `α₀` for the linear-algebra construction of `E_η`.
    pub alphas: Vec<Rational>,
    /// Suite name prefixes; empty runs everything.
    pub filter: Vec<String>,
    /// Perturb every implementation-side polynomial and scalar.
    pub mutate: bool,
    /// Worker count; `None` uses the default pool.
    pub jobs: Option<usize>,
}

fn rationals(values: &[&str]) -> Vec<Rational> {
    values
        .iter()
        .map(|v| parse_rational(v).expect("literal"))
        .collect()
}

impl VerifyConfig {
    /// The same `N ≤ n_max`, degree `≤ degree` bound for every suite.
    pub fn uniform(n_max: usize, degree: u32, ks: Vec<u32>, rs: Vec<Rational>) -> Self {
        VerifyConfig {
            e_sweep: upto(n_max, degree),
            ct_sweep: upto(n_max, degree),
            kernel_sweep: upto(n_max, degree),
            binomial_sweep: upto(n_max, degree),
            p_sweep: upto(n_max, degree),
            scalar_sweep: upto(n_max, degree),
            asym_sweep: upto(n_max, degree),
            society_sweep: upto(n_max, degree),
            shapes: Vec::new(),
            ks,
            rs,
            alphas: rationals(&["2", "3", "7/2"]),
            filter: Vec::new(),
            mutate: false,
            jobs: None,
        }
    }

    /// The bounds of the acceptance criteria.
    pub fn acceptance() -> Self {
        let mut e_sweep = upto(3, 5);
        e_sweep.push(Bound::new(4, 3));
        VerifyConfig {
            e_sweep,
            ct_sweep: upto(3, 4),
            kernel_sweep: vec![Bound::new(2, 3), Bound::new(3, 3)],
            binomial_sweep: vec![Bound::new(2, 3), Bound::new(3, 3)],
            p_sweep: upto(4, 6),
            scalar_sweep: upto(4, 6),
            asym_sweep: upto(3, 6),
            society_sweep: upto(3, 4),
            shapes: vec![Partition::new(vec![8, 7, 7, 4, 3, 3, 2, 1, 0]).expect("literal")],
            ks: vec![1, 2],
            rs: rationals(&["1", "2", "3", "5/2"]),
            alphas: rationals(&["2", "3", "7/2"]),
            filter: Vec::new(),
            mutate: false,
            jobs: None,
        }
    }

    pub fn with_filter(mut self, filter: &[&str]) -> Self {
        self.filter = filter.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_mutation(mut self, mutate: bool) -> Self {
        self.mutate = mutate;
        self
    }

    pub fn selects(&self, name: &str) -> bool {
        self.filter.is_empty() || self.filter.iter().any(|f| name.starts_with(f.as_str()))
    }
}

/// Shared state of one run: the configuration and a memo table of built
/// polynomials. With mutation on, every polynomial and scalar handed to a
/// suite as the implementation side is perturbed.
pub struct Ctx {
    pub config: VerifyConfig,
    cache: JackCache,
}

impl Ctx {
    pub fn new(config: VerifyConfig) -> Self {
        Ctx {
            config,
            cache: JackCache::new(),
        }
    }

    pub fn mutate(&self) -> bool {
        self.config.mutate
    }

    /// The untouched cache, for reference sides.
    pub fn reference(&self) -> &JackCache {
        &self.cache
    }

    /// Add one to the coefficient of the smallest monomial.
    pub fn tamper<C: Field>(&self, p: Poly<C>) -> Poly<C> {
        if !self.mutate() {
            return p;
        }
        let mut out = p;
        let first = out
            .terms()
            .next()
            .map(|(e, _)| e.clone())
            .unwrap_or_else(|| vec![0; out.n()]);
        out.add_term(first, C::one());
        out
    }

    pub fn tamper_scalar(&self, x: AlphaRational) -> AlphaRational {
        if self.mutate() {
            &x + &AlphaRational::one()
        } else {
            x
        }
    }

    fn tamper_arc(&self, p: Arc<MultiPoly>) -> Arc<MultiPoly> {
        if self.mutate() {
            Arc::new(self.tamper(p.as_ref().clone()))
        } else {
            p
        }
    }
}

impl PolySource for Ctx {
    fn e(&self, eta: &Composition) -> Arc<MultiPoly> {
        self.tamper_arc(self.cache.e(eta))
    }
    fn p(&self, kappa: &Partition, param: ParamForm) -> Arc<MultiPoly> {
        self.tamper_arc(self.cache.p(kappa, param))
    }
    fn s(&self, rho_plus: &Partition) -> Result<Arc<MultiPoly>> {
        Ok(self.tamper_arc(self.cache.s(rho_plus)?))
    }
    fn p_by_route(&self, kappa: &Partition, route: PRoute) -> MultiPoly {
        self.cache.p_by_route(kappa, route)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub case: String,
    pub what: String,
    pub left: String,
    pub right: String,
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub parameters: String,
    pub status: Status,
    pub cases: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub mutate: bool,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
    pub millis: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<24} {:<7} {:>6} cases {:>4} failed {:>8} ms  {}\n",
                c.name, c.status, c.cases, c.failures, c.millis, c.parameters
            ));
            for w in &c.witnesses {
                out.push_str(&format!(
                    "    [{}] {}: {} != {}\n",
                    w.case, w.what, w.left, w.right
                ));
            }
            for n in &c.notes {
                out.push_str(&format!("    note: {n}\n"));
            }
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed, {} skipped ({} ms)\n",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.millis
        ));
        out
    }
}

/// What a suite hands back before timing and status are attached.
pub struct SuiteOutcome {
    pub parameters: String,
    pub cases: Vec<(String, CheckResult)>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn new(parameters: impl Into<String>, cases: Vec<(String, CheckResult)>) -> Self {
        SuiteOutcome {
            parameters: parameters.into(),
            cases,
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

/// Run each item in parallel, labelling results.
pub fn run_cases<T: Sync>(
    items: &[T],
    label: impl Fn(&T) -> String + Sync + Send,
    check: impl Fn(&T) -> CheckResult + Sync + Send,
) -> Vec<(String, CheckResult)> {
    par_map(items, |item| (label(item), check(item)))
}

const MAX_WITNESSES: usize = 5;

fn finish(name: &str, outcome: SuiteOutcome, millis: u128) -> CheckEntry {
    let failures: Vec<(String, Mismatch)> = outcome
        .cases
        .iter()
        .filter_map(|(case, r)| r.as_ref().err().map(|m| (case.clone(), m.clone())))
        .collect();
    let status = if outcome.cases.is_empty() {
        Status::Skipped
    } else if failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    CheckEntry {
        name: name.to_string(),
        parameters: outcome.parameters,
        status,
        cases: outcome.cases.len(),
        failures: failures.len(),
        witnesses: failures
            .into_iter()
            .take(MAX_WITNESSES)
            .map(|(case, m)| Witness {
                case,
                what: m.what,
                left: m.left,
                right: m.right,
            })
            .collect(),
        notes: outcome.notes,
        millis,
    }
}

/// Run every selected suite and assemble the report, sorted by suite name.
pub fn run(config: VerifyConfig) -> VerifyReport {
    let jobs = config.jobs;
    with_jobs(jobs, move || run_in_pool(config))
}

fn run_in_pool(config: VerifyConfig) -> VerifyReport {
    let start = Instant::now();
    let mutate = config.mutate;
    let ctx = Ctx::new(config);
    let selected: Vec<_> = SUITES.iter().filter(|s| ctx.config.selects(s.name)).collect();
    let mut checks: Vec<CheckEntry> = selected
        .iter()
        .map(|suite| {
            let t = Instant::now();
            let outcome = (suite.run)(&ctx);
            finish(suite.name, outcome, t.elapsed().as_millis())
        })
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    VerifyReport {
        mutate,
        checks,
        summary,
        millis: start.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig::uniform(2, 2, vec![1, 2], rationals(&["1", "2", "3"]))
    }

    #[test]
    fn small_run_passes() {
        let report = run(small());
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.checks.len(), SUITES.len());
        let names: Vec<_> = report.checks.iter().map(|c| c.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn filter_selects_by_prefix() {
        let report = run(small().with_filter(&["prop2.3"]));
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].name, "prop2.3");
    }

    #[test]
    fn every_suite_fails_under_mutation() {
        let report = run(small().with_mutation(true));
        for c in &report.checks {
            assert_eq!(c.status, Status::Fail, "{} survived mutation", c.name);
            assert!(!c.witnesses.is_empty());
        }
    }

    #[test]
    fn tamper_is_identity_without_mutation() {
        let ctx = Ctx::new(small());
        let p = MultiPoly::one(2);
        assert_eq!(ctx.tamper(p.clone()), p);
    }
}
