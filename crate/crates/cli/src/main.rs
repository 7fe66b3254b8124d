use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jack_core::combinatorics::{
    compositions_up_to, partitions_up_to, sort_to_partition, Composition, Partition,
};
use jack_core::field::parse_rational;
use jack_core::jack::{binomial_expansion, binomial_product, BinomialForm, JackCache, ParamForm};
use jack_core::polyalg::{m_basis_text, omega_truncated, pi_truncated, BiPoly, MultiPoly, Poly};
use jack_core::scalars::{
    self, d, eval_e_at_ones, eval_p_at_ones, gen_factorial, norm_ratio_e, norm_ratio_p, u_eta, v_kappa,
    ConstantKind,
};
use jack_core::verify::{self, VerifyConfig, SUITES};
use jack_core::{AlphaRational, Field, Rational};

#[derive(Parser)]
#[command(name = "jack", version, about = "Exact Jack polynomials over Q(α)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print E_η, P_κ or S_ρ⁺ with exact coefficients.
    Compute(ComputeArgs),
    /// Print the diagram constants of η and of η⁺.
    Constants(ConstantsArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Print a truncated kernel or binomial series and its coefficients.
    Expand(ExpandArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(Args)]
struct Common {
    /// Number of variables; pads the index with zeros.
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Specialize α to this rational, e.g. 1/2.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Comma-separated parts, e.g. 1,0.
    index: String,
    #[command(flatten)]
    common: Common,
    /// For P, use the parameter α/(α+1).
    #[arg(long)]
    shifted: bool,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Comma-separated parts, e.g. 1,0.
    index: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest number of variables.
    #[arg(long = "N", default_value_t = 3, allow_negative_numbers = true)]
    n: i64,
    /// Largest modulus or degree.
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    deg: i64,
    /// Integers k = 1/α for the constant-term oracle.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    k: Vec<u32>,
    /// Points r for the binomial expansions.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,5/2")]
    r: Vec<String>,
    /// Run only suites whose names start with one of these prefixes.
    #[arg(long, value_delimiter = ',')]
    filter: Vec<String>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Use the bounds of the acceptance criteria instead of --N/--deg.
    #[arg(long)]
    acceptance: bool,
    /// Perturb every implementation-side value; every suite should fail.
    #[arg(long)]
    mutate: bool,
    /// List the suites and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Series {
    Omega,
    Pi,
    Binomial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    E,
    P,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(value_enum)]
    which: Series,
    #[arg(long = "N")]
    n: usize,
    /// Truncation degree.
    #[arg(long = "D")]
    degree: u32,
    /// Exponent r of the binomial series.
    #[arg(long)]
    r: Option<String>,
    /// Basis of the binomial expansion.
    #[arg(long, value_enum, default_value = "e")]
    basis: Basis,
    /// Also print 1/u_η (omega) or 1/v_κ (pi).
    #[arg(long)]
    coefficients: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Specialize α to this rational, e.g. 1/2.
    #[arg(long)]
    alpha: Option<String>,
}

/// An input error, reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => compute(a).map(|_| ExitCode::SUCCESS),
        Command::Constants(a) => constants(a).map(|_| ExitCode::SUCCESS),
        Command::Verify(a) => run_verify(a),
        Command::Expand(a) => expand(a).map(|_| ExitCode::SUCCESS),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn parse_index(text: &str, n: Option<usize>) -> Result<Composition> {
    let c: Composition = text
        .parse()
        .map_err(|e| Usage(format!("invalid index {text:?}: {e}")))?;
    match n {
        Some(n) if n < c.n() => usage(format!("{c} has {} parts but --N is {n}", c.n())),
        Some(n) => c
            .padded(n)
            .map_err(|e| Usage(format!("cannot pad {c} to N={n}: {e}")).into()),
        None => Ok(c),
    }
}

fn parse_partition(text: &str, n: Option<usize>) -> Result<Partition> {
    let c = parse_index(text, n)?;
    c.into_partition().map_err(|e| Usage(e.to_string()).into())
}

fn parse_alpha(alpha: &Option<String>) -> Result<Option<Rational>> {
    alpha
        .as_deref()
        .map(|a| parse_rational(a).map_err(|e| Usage(format!("invalid --alpha {a:?}: {e}")).into()))
        .transpose()
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn render_poly(
    p: &MultiPoly,
    var: &str,
    symmetric: bool,
    alpha: &Option<Rational>,
) -> Result<(String, Value)> {
    match alpha {
        None => {
            let text = if symmetric {
                m_basis_text(p)?
            } else {
                p.display_with(var)
            };
            Ok((text, serde_json::to_value(p)?))
        }
        Some(a) => {
            let q = p
                .eval_alpha(a)
                .with_context(|| format!("specializing at α = {a}"))?;
            let text = if symmetric {
                m_basis_text(&q)?
            } else {
                q.display_with(var)
            };
            let terms: Vec<Value> = q
                .terms()
                .map(|(e, c)| json!({"exp": e, "coeff": c.to_string()}))
                .collect();
            Ok((text, json!({"N": q.n(), "terms": terms})))
        }
    }
}

fn compute(a: ComputeArgs) -> Result<()> {
    let alpha = parse_alpha(&a.common.alpha)?;
    let cache = JackCache::new();
    let (label, poly, var, symmetric) = match a.family {
        FamilyArg::E => {
            let eta = parse_index(&a.index, a.common.n)?;
            (format!("E{eta}"), (*cache.e(&eta)).clone(), "z", false)
        }
        FamilyArg::P => {
            let kappa = parse_partition(&a.index, a.common.n)?;
            let param = if a.shifted {
                ParamForm::Shifted
            } else {
                ParamForm::Alpha
            };
            let suffix = if a.shifted { "[α/(α+1)]" } else { "" };
            (
                format!("P{kappa}{suffix}"),
                (*cache.p(&kappa, param)).clone(),
                "z",
                true,
            )
        }
        FamilyArg::S => {
            let rho = parse_partition(&a.index, a.common.n)?;
            let s = cache.s(&rho).map_err(|e| Usage(e.to_string()))?;
            (format!("S{rho}"), (*s).clone(), "x", false)
        }
    };
    let (text, value) = render_poly(&poly, var, symmetric, &alpha)?;
    match a.common.format {
        Format::Text => println!("{text}"),
        Format::Json => print_json(&json!({
            "label": label,
            "alpha": alpha.map(|x| x.to_string()),
            "text": text,
            "polynomial": value,
        }))?,
    }
    Ok(())
}

fn show(x: &AlphaRational, alpha: &Option<Rational>) -> Result<String> {
    match alpha {
        None => Ok(x.to_string()),
        Some(a) => Ok(x
            .eval_at(a)
            .with_context(|| format!("evaluating at α = {a}"))?
            .to_string()),
    }
}

fn constants(a: ConstantsArgs) -> Result<()> {
    let alpha = parse_alpha(&a.common.alpha)?;
    let eta = parse_index(&a.index, a.common.n)?;
    let plus = sort_to_partition(&eta);
    let mut rows: Vec<(String, AlphaRational)> = Vec::new();
    for kind in ConstantKind::ALL {
        if kind == ConstantKind::H {
            continue;
        }
        rows.push((kind.to_string(), scalars::constant(kind, &eta)?));
    }
    rows.push((format!("h{plus}"), scalars::h(&plus)));
    rows.push((format!("b{plus}"), scalars::b(&plus.as_composition())));
    rows.push(("E(1^N)".into(), eval_e_at_ones(&eta)));
    rows.push(("<E,E>/<1,1>".into(), norm_ratio_e(&eta)));
    rows.push(("u".into(), u_eta(&eta)));
    rows.push((format!("P{plus}(1^N)"), eval_p_at_ones(&plus)));
    rows.push((format!("<P{plus},P{plus}>/<1,1>"), norm_ratio_p(&plus)));
    rows.push((format!("v{plus}"), v_kappa(&plus)));
    let rendered = rows
        .iter()
        .map(|(k, v)| Ok((k.clone(), show(v, &alpha)?)))
        .collect::<Result<Vec<_>>>()?;
    match a.common.format {
        Format::Text => {
            println!("η = {eta}, N = {}", eta.n());
            for (k, v) in &rendered {
                println!("{k} = {v}");
            }
        }
        Format::Json => {
            let entries: Vec<Value> = rendered
                .iter()
                .map(|(k, v)| json!({"name": k, "value": v}))
                .collect();
            print_json(&json!({
                "index": eta.parts(),
                "N": eta.n(),
                "alpha": alpha.map(|x| x.to_string()),
                "constants": entries,
            }))?
        }
    }
    Ok(())
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode> {
    if a.list {
        for s in SUITES {
            println!("{:<24} {}", s.name, s.summary);
        }
        return Ok(ExitCode::SUCCESS);
    }
    if a.n < 1 {
        return usage(format!("--N must be at least 1, got {}", a.n));
    }
    if a.deg < 0 {
        return usage(format!("--deg must be non-negative, got {}", a.deg));
    }
    if a.k.contains(&0) {
        return usage("--k values must be positive");
    }
    if a.jobs == Some(0) {
        return usage("--jobs must be positive");
    }
    for f in &a.filter {
        if !SUITES.iter().any(|s| s.name.starts_with(f.as_str())) {
            return usage(format!("--filter {f:?} matches no suite; see --list"));
        }
    }
    let rs =
        a.r.iter()
            .map(|r| parse_rational(r).map_err(|e| Usage(format!("invalid --r {r:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut config = if a.acceptance {
        VerifyConfig::acceptance()
    } else {
        VerifyConfig::uniform(a.n as usize, a.deg as u32, a.k.clone(), rs)
    };
    config.filter = a.filter.clone();
    config.mutate = a.mutate;
    config.jobs = a.jobs;
    let report = verify::run(config);
    match a.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print_json(&serde_json::to_value(&report)?)?,
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn bipoly_value(b: &BiPoly<AlphaRational>) -> Result<Value> {
    Ok(serde_json::to_value(b)?)
}

fn specialized_bipoly_value(b: &BiPoly<Rational>) -> Value {
    let terms: Vec<Value> = b
        .poly()
        .terms()
        .map(|(e, c)| {
            let (x, y) = e.split_at(b.nx());
            json!({"x": x, "y": y, "coeff": c.to_string()})
        })
        .collect();
    json!({"Nx": b.nx(), "Ny": b.ny(), "D": b.degree_bound(), "terms": terms})
}

fn specialize_bipoly(b: &BiPoly<AlphaRational>, alpha: &Rational) -> Result<BiPoly<Rational>> {
    let q: Poly<Rational> = b.poly().eval_alpha(alpha)?;
    Ok(BiPoly::from_poly(b.nx(), b.ny(), b.degree_bound(), &q)?)
}

fn expand(a: ExpandArgs) -> Result<()> {
    let alpha = parse_alpha(&a.alpha)?;
    let (n, degree) = (a.n, a.degree);
    if n == 0 {
        return usage("--N must be at least 1");
    }
    let mut table: Vec<(String, AlphaRational)> = Vec::new();
    let (series_text, series_json) = match a.which {
        Series::Omega | Series::Pi => {
            let series = match a.which {
                Series::Omega => omega_truncated(n, degree),
                _ => pi_truncated(&AlphaRational::alpha(), n, n, degree)?,
            };
            if a.coefficients {
                match a.which {
                    Series::Omega => {
                        for eta in compositions_up_to(degree, n) {
                            table.push((format!("1/u{eta}"), u_eta(&eta).inverse()?));
                        }
                    }
                    _ => {
                        for kappa in partitions_up_to(degree, n) {
                            table.push((format!("1/v{kappa}"), v_kappa(&kappa).inverse()?));
                        }
                    }
                }
            }
            match &alpha {
                None => (series.display_text(), bipoly_value(&series)?),
                Some(x) => {
                    let q = specialize_bipoly(&series, x)?;
                    (q.display_text(), specialized_bipoly_value(&q))
                }
            }
        }
        Series::Binomial => {
            let Some(r_text) = &a.r else {
                return usage("binomial needs --r");
            };
            let r = parse_rational(r_text).map_err(|e| Usage(format!("invalid --r {r_text:?}: {e}")))?;
            let u = AlphaRational::from_rational(&r);
            for m in 0..=degree {
                let alpha_pow = AlphaRational::alpha().pow(m);
                match a.basis {
                    Basis::E => {
                        for eta in jack_core::combinatorics::compositions(m, n) {
                            let top = &alpha_pow * &gen_factorial(&u, &sort_to_partition(&eta));
                            table.push((format!("E{eta}"), &top / &(&u_eta(&eta) * &d(&eta))));
                        }
                    }
                    Basis::P => {
                        for kappa in jack_core::combinatorics::partitions(m, n) {
                            let top = &alpha_pow * &gen_factorial(&u, &kappa);
                            table.push((
                                format!("P{kappa}"),
                                &top / &(&v_kappa(&kappa) * &scalars::h(&kappa)),
                            ));
                        }
                    }
                }
            }
            let product = binomial_product(&r, n, degree);
            let form = match a.basis {
                Basis::E => BinomialForm::NonSymmetric,
                Basis::P => BinomialForm::Symmetric,
            };
            let expansion = binomial_expansion(&JackCache::new(), &r, n, degree, form);
            if product != expansion {
                bail!("binomial expansion does not reproduce the series");
            }
            let (text, value) = render_poly(&product, "x", false, &alpha)?;
            (text, value)
        }
    };
    let rendered = table
        .iter()
        .map(|(k, v)| Ok((k.clone(), show(v, &alpha)?)))
        .collect::<Result<Vec<_>>>()?;
    match a.format {
        Format::Text => {
            println!("{series_text}");
            for (k, v) in &rendered {
                println!("{k}: {v}");
            }
        }
        Format::Json => {
            let entries: Vec<Value> = rendered
                .iter()
                .map(|(k, v)| json!({"label": k, "value": v}))
                .collect();
            print_json(&json!({
                "series": series_json,
                "alpha": alpha.map(|x| x.to_string()),
                "coefficients": entries,
            }))?
        }
    }
    Ok(())
}
