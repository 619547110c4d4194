//! `gbgw`: command-line front end for the generalized BGW tau-function engine.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use gbgw::correlators::{CorrelatorTable, Multilinear};
use gbgw::cutjoin::{tau_expansion, Nu};
use gbgw::exactalg::json::times_poly_to_json;
use gbgw::exactalg::TimesPoly;
use gbgw::freenergy::{
    b_decompose, genus_split, log_expansion, log_expansion_truncated, n_view_moments, to_moments,
};
use gbgw::schurkdv::triangular_tau;
use gbgw::verify::{run_suites, Suite};
use gbgw::{Rational, Scalar};

#[derive(Parser, Debug)]
#[command(
    name = "gbgw",
    version,
    about = "Exact generalized BGW tau-function, free energies and correlators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; csv is available for flat term tables only.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tau-function orders 0..=K from the cut-and-join recursion.
    Tau {
        #[arg(short = 'k', long, allow_negative_numbers = true)]
        order: i64,
        /// `symbolic` or a rational value of N^2 such as `9/4`.
        #[arg(long, default_value = "symbolic")]
        nu: String,
    },
    /// Genus-g free energy in the times, in moment variables, or decomposed over B_k(N).
    FreeEnergy {
        #[arg(short = 'g', long, allow_negative_numbers = true)]
        genus: i64,
        #[arg(long, value_enum, default_value_t = Form::T)]
        form: Form,
        /// Tau order used for the `t` form; defaults to 3g + 3.
        #[arg(short = 'k', long, allow_negative_numbers = true)]
        order: Option<i64>,
    },
    /// Correlator W_{g,n} as a multilinear form in u_i, or omega_{g,n} in z.
    Correlator {
        #[arg(short = 'g', long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Coords::X)]
        coords: Coords,
    },
    /// Polynomial tau-function C_l s_lambda(l)(t~) at N = l + 1/2.
    Schur {
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
    },
    /// Runs verification suites; exits with 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Wall time and term counts of the tau expansion at symbolic N.
    Bench {
        #[arg(short = 'k', long, allow_negative_numbers = true)]
        order: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    T,
    Moments,
    Bdecomp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Coords {
    X,
    Z,
}

/// Rendered output, or the reason the command failed.
enum Outcome {
    Done(String),
    Failed(String),
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<gbgw::Error> for CliError {
    fn from(e: gbgw::Error) -> Self {
        match e {
            gbgw::Error::Domain(m) | gbgw::Error::Parse(m) => CliError::Usage(m),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn non_negative(name: &str, v: i64) -> Result<usize, CliError> {
    if v < 0 {
        return usage(format!("--{name} must be non-negative, got {v}"));
    }
    Ok(v as usize)
}

fn parse_nu(text: &str) -> Result<Nu<Rational>, CliError> {
    if text == "symbolic" {
        return Ok(Nu::Symbolic);
    }
    Rational::parse_fraction(text)
        .map(Nu::Value)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "--nu expects `symbolic` or a rational p/q, got `{text}`"
            ))
        })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// `order,nu,monomial,coeff` rows.
fn csv_rows(rows: &mut String, order: Option<usize>, p: &TimesPoly<Rational>) {
    for (m, c) in p.sorted_terms() {
        let k = order.map(|k| k.to_string()).unwrap_or_default();
        rows.push_str(&format!(
            "{k},{},{},{}\n",
            m.nu_power(),
            m.with_nu(0),
            c.to_fraction_string()
        ));
    }
}

const CSV_HEADER: &str = "order,nu_power,monomial,coeff\n";

/// A moment polynomial as `[{"coeff", "T": {k: e}}]`.
fn moment_json(p: &TimesPoly<Rational>) -> Value {
    let terms = p
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| {
            let mut t = Map::new();
            for (index, e) in m.pairs() {
                t.insert(index.to_string(), json!(e));
            }
            json!({"coeff": c.to_fraction_string(), "T": Value::Object(t)})
        })
        .collect();
    Value::Array(terms)
}

fn run_tau(order: i64, nu: &str, format: Format) -> Result<Outcome, CliError> {
    let k = non_negative("order", order)?;
    let tau = tau_expansion(k, parse_nu(nu)?);
    Ok(Outcome::Done(match format {
        Format::Json => pretty(&tau.to_json()),
        Format::Csv => {
            let mut s = CSV_HEADER.to_string();
            for (k, p) in tau.orders.iter().enumerate() {
                csv_rows(&mut s, Some(k), p);
            }
            s
        }
    }))
}

fn run_free_energy(
    genus: i64,
    form: Form,
    order: Option<i64>,
    format: Format,
) -> Result<Outcome, CliError> {
    let g = non_negative("genus", genus)? as u32;
    if format == Format::Csv && form != Form::T {
        return usage("csv output is available for --form t only");
    }
    match form {
        Form::T => {
            let k = match order {
                Some(k) => non_negative("order", k)?,
                None => 3 * g as usize + 3,
            };
            let tau = tau_expansion::<Rational>(k, Nu::Symbolic);
            let table = genus_split(&log_expansion(&tau)?)?;
            let p = table.genus(g);
            Ok(Outcome::Done(match format {
                Format::Json => pretty(&json!({
                    "genus": g,
                    "order": k,
                    "grading": "nu stands for S^2",
                    "terms": times_poly_to_json(&p),
                })),
                Format::Csv => {
                    let mut s = CSV_HEADER.to_string();
                    csv_rows(&mut s, None, &p);
                    s
                }
            }))
        }
        Form::Moments => {
            let factors = g.max(3);
            let k = 2 * g as usize + factors as usize + 4;
            let tau = tau_expansion::<Rational>(k, Nu::Symbolic);
            let table = genus_split(&log_expansion_truncated(&tau, Some(factors))?)?;
            let gm = to_moments(g, &table, factors)?;
            let log: Vec<Value> = gm
                .log_coeff
                .coefficients()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != Rational::from_int(0))
                .map(|(d, c)| json!({"log_coeff": c.to_fraction_string(), "S_power": 2 * d}))
                .collect();
            let pieces: Vec<Value> = gm
                .pieces
                .iter()
                .enumerate()
                .map(|(d, p)| json!({"d": d, "S_power": 2 * d, "F": moment_json(p)}))
                .collect();
            Ok(Outcome::Done(pretty(&json!({
                "genus": g,
                "form": "F~_g(T, S) = log terms * log(1 - t_1/2) + sum_d (-1)^d S^(2d) F~_g^(d)(T)",
                "factors_checked": factors,
                "log": log,
                "pieces": pieces,
            }))))
        }
        Form::Bdecomp => {
            if g < 2 {
                return usage(format!("--form bdecomp needs --genus >= 2, got {g}"));
            }
            let factors = g.max(4);
            let k = 2 * g as usize - 2 + factors as usize;
            let tau = tau_expansion::<Rational>(k, Nu::Symbolic);
            let f = log_expansion_truncated(&tau, Some(factors))?;
            let parts = b_decompose(g, &n_view_moments(&f, g, factors)?)?;
            let parts: Vec<Value> = parts
                .iter()
                .map(|(k, p)| json!({"k": k, "F": moment_json(p)}))
                .collect();
            Ok(Outcome::Done(pretty(&json!({
                "genus": g,
                "form": "F_g(T, N) = sum_k B_k(N) F_{g,k}(T)",
                "factors_checked": factors,
                "parts": parts,
            }))))
        }
    }
}

fn run_correlator(g: i64, n: i64, coords: Coords, format: Format) -> Result<Outcome, CliError> {
    let g = non_negative("g", g)? as u32;
    let n = non_negative("n", n)?;
    if n == 0 {
        return usage("--n must be at least 1");
    }
    if format == Format::Csv {
        return usage("correlators are structured output; use --format json");
    }
    let level = 2 * g + n as u32;
    if level > 9 {
        return usage(format!(
            "2g + n = {level} exceeds the supported range 2g + n <= 9"
        ));
    }
    let table = CorrelatorTable::<Rational>::compute(level)?;
    let corr = table.correlator(g, n)?;
    let out = match coords {
        Coords::X => {
            let ml = corr.multilinear()?;
            let names = ml.variable_names();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut comps = Map::new();
            for (&mask, r) in &ml.components {
                comps.insert(
                    Multilinear::<Rational>::subset_label(mask, n),
                    json!({"numerator": r.numerator().render(&refs), "denominator": r.render_denominator(&refs)}),
                );
            }
            json!({
                "g": g,
                "n": n,
                "coords": "x",
                "relation": "u_i^2 = 1 + S^2/(4 x_i)",
                "components": Value::Object(comps),
            })
        }
        Coords::Z => {
            if 2 * g as usize + n < 3 {
                return usage(format!(
                    "omega_{{{g},{n}}} is unstable; z-coordinates need 2g + n >= 3"
                ));
            }
            let z = corr.to_z_differential()?;
            let names = z.variable_names();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let coeffs: Vec<Value> = z
                .inverse_z_coefficients()?
                .into_iter()
                .map(|(w, c)| json!({"inverse_z_powers": w, "coeff": c.to_fraction_string()}))
                .collect();
            json!({
                "g": g,
                "n": n,
                "coords": "z",
                "omega_over_dz": z.value.render(&refs),
                "cleared": "z_1^2 ... z_n^2 omega / (dz_1 ... dz_n) = sum coeff * prod z_i^(-inverse_z_powers_i)",
                "coefficients": coeffs,
            })
        }
    };
    Ok(Outcome::Done(pretty(&out)))
}

fn run_schur(level: i64, format: Format) -> Result<Outcome, CliError> {
    let p = triangular_tau::<Rational>(level)?;
    Ok(Outcome::Done(match format {
        Format::Json => pretty(&json!({
            "level": level,
            "nu": format!("({}/2)^2", 2 * level + 1),
            "terms": times_poly_to_json(&p),
        })),
        Format::Csv => {
            let mut s = CSV_HEADER.to_string();
            csv_rows(&mut s, None, &p);
            s
        }
    }))
}

fn run_verify(suite: &str, format: Format) -> Result<Outcome, CliError> {
    if format == Format::Csv {
        return usage("verification reports are structured output; use --format json");
    }
    let suites: Vec<Suite> = match suite {
        "all" => Suite::ALL.to_vec(),
        name => vec![Suite::parse(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown suite `{name}`; expected cutjoin, virasoro, schur, freenergy, sato, correlators or all"
            ))
        })?],
    };
    let reports = run_suites::<Rational>(&suites)?;
    let passed = reports.iter().all(|r| r.passed());
    let mut obj = Map::new();
    obj.insert("passed".into(), json!(passed));
    for r in &reports {
        obj.insert(r.suite.name().into(), r.to_json());
    }
    let text = pretty(&Value::Object(obj));
    Ok(if passed {
        Outcome::Done(text)
    } else {
        Outcome::Failed(text)
    })
}

fn run_bench(order: i64, format: Format) -> Result<Outcome, CliError> {
    let k = non_negative("order", order)?;
    if k == 0 {
        return usage("--order must be at least 1");
    }
    let start = Instant::now();
    let tau = tau_expansion::<Rational>(k, Nu::Symbolic);
    let seconds = start.elapsed().as_secs_f64();
    let counts = tau.term_counts();
    Ok(Outcome::Done(match format {
        Format::Json => pretty(&json!({
            "order": k,
            "nu": "symbolic",
            "seconds": seconds,
            "term_counts": counts,
        })),
        Format::Csv => {
            let mut s = "order,terms\n".to_string();
            for (k, c) in counts.iter().enumerate() {
                s.push_str(&format!("{k},{c}\n"));
            }
            s
        }
    }))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Tau { order, nu } => run_tau(*order, nu, cli.format),
        Command::FreeEnergy { genus, form, order } => {
            run_free_energy(*genus, *form, *order, cli.format)
        }
        Command::Correlator { g, n, coords } => run_correlator(*g, *n, *coords, cli.format),
        Command::Schur { level } => run_schur(*level, cli.format),
        Command::Verify { suite } => run_verify(suite, cli.format),
        Command::Bench { order } => run_bench(*order, cli.format),
    }
}

fn emit(text: &str, out: Option<&str>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match dispatch(&cli) {
        Ok(Outcome::Done(text)) => (text, 0),
        Ok(Outcome::Failed(text)) => (text, 1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&text, cli.out.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
