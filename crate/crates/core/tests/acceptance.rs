//! The acceptance criteria, each mapped to the verification suites that
//! decide it. Prints one line per criterion and exits non-zero on failure.

use std::process::ExitCode;
use std::time::Instant;

use jack_core::verify::{run, Status, VerifyConfig, VerifyReport, SUITES};

const CRITERIA: &[(&str, &[&str])] = &[
    ("eigenfunctions and triangular form", &["eigen.E", "s-action"]),
    ("E(1^N) = e/d", &["prop2.3"]),
    (
        "constant-term norms and orthogonality of E and P",
        &["prop2.1", "prop2.4", "prop3.1", "prop3.4"],
    ),
    ("Ω decomposition and u", &["prop2.2", "prop2.5"]),
    ("Π decomposition and v, stable in N", &["prop3.2", "prop3.5"]),
    (
        "binomial expansions in E and P",
        &["binomial.bi2", "binomial.bi3"],
    ),
    (
        "P(1^N), norm of P and hook identity, with the 9-part shape",
        &["prop3.3", "d2.P", "stability.P"],
    ),
    (
        "antisymmetrization and expansion of S in E",
        &["prop3.6", "prop3.6.du", "sym.c-tilde"],
    ),
    (
        "society identities and the norm of S",
        &["society", "society.ct", "scalars.gen-factorial"],
    ),
    (
        "oracle equivalence for E and P",
        &["oracle.E-linear", "oracle.P-gram"],
    ),
];

fn criterion_status(report: &VerifyReport, suites: &[&str]) -> (bool, String) {
    let mut cases = 0;
    let mut failing = Vec::new();
    for name in suites {
        match report.entry(name) {
            Some(e) => {
                cases += e.cases;
                if e.status != Status::Pass {
                    failing.push(format!(
                        "{name}: {} ({} of {} cases)",
                        e.status, e.failures, e.cases
                    ));
                }
            }
            None => failing.push(format!("{name}: missing")),
        }
    }
    if failing.is_empty() {
        (true, format!("{cases} cases"))
    } else {
        (false, failing.join("; "))
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = run(VerifyConfig::acceptance());
    let mutated = run(VerifyConfig::acceptance().with_mutation(true));
    let mut all = true;
    for (i, (title, suites)) in CRITERIA.iter().enumerate() {
        let (ok, detail) = criterion_status(&report, suites);
        all &= ok;
        println!(
            "criterion {:>2} {}  {title}  [{detail}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    let survivors: Vec<&str> = mutated
        .checks
        .iter()
        .filter(|c| c.status != Status::Fail || c.witnesses.is_empty())
        .map(|c| c.name.as_str())
        .collect();
    let negative_ok = survivors.is_empty() && mutated.checks.len() == SUITES.len();
    all &= negative_ok;
    println!(
        "criterion 11 {}  negative controls  [{} of {} suites fail under perturbation{}]",
        if negative_ok { "PASS" } else { "FAIL" },
        mutated.checks.len() - survivors.len(),
        SUITES.len(),
        if survivors.is_empty() {
            String::new()
        } else {
            format!("; survived: {}", survivors.join(", "))
        }
    );
    let unassigned: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !CRITERIA.iter().any(|(_, s)| s.contains(&c.name.as_str())))
        .map(|c| c.name.as_str())
        .collect();
    assert!(
        unassigned.is_empty(),
        "suites without a criterion: {unassigned:?}"
    );
    all &= report.passed();
    println!(
        "full run: {} suites, {} passed, {} failed; {:.1} s including the mutated run",
        report.checks.len(),
        report.summary.pass,
        report.summary.fail,
        start.elapsed().as_secs_f64()
    );
    if !report.passed() {
        print!("{}", report.to_text());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
