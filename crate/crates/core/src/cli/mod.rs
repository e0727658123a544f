//! Command-line front end: `eval`, `zeta`, `verify` and `bench`.
//!
//! [`run`] takes the argument list and output streams explicitly and returns
//! the process exit code: 0 on success, 1 on usage or domain errors, 2 on
//! non-convergence or a failed verification.

pub mod bench;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{coefficient_exact, Rational};
use crate::series::{
    euler_transform_eval, lerch_accelerated, lerch_accelerated_z, lerch_direct, w_to_z, z_to_w,
    zeta_accelerated, Coefficients, SeriesResult, ShiftParam,
};
use crate::verify::{run_suite, Suite, SuiteConfig};

pub use bench::{read_csv, run_bench, write_csv, BenchOutput, ConvergenceRow, Method};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_TERMS: usize = 10_000;
/// The alternating baseline needs ~n^{1/s}/tol^{1/s} terms, far beyond the
/// evaluation default at s = 2.
pub const DEFAULT_BENCH_MAX_TERMS: usize = 1_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "harmonic-lerch",
    version,
    about = "Lerch function and polylogarithm on Re(w) < 1/2, zeta(s) at z = 1/2, and exact identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Li_s^alpha(w) (or the expansion at a given z).
    Eval(EvalArgs),
    /// zeta(s) from the series at z = 1/2.
    Zeta(ZetaArgs),
    /// Run identity and bound checks.
    Verify(VerifyArgs),
    /// Terms-to-tolerance table for the three routes to Li_s(-1).
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Requested absolute truncation tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Cap on the number of series terms.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Also write the JSON output to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write CSV output to this file (bench only).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum EvalMethod {
    Accelerated,
    Direct,
    Euler,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    s: u32,
    /// Argument w as RE[,IM].
    #[arg(long, allow_hyphen_values = true, conflicts_with = "z", required_unless_present = "z")]
    w: Option<String>,
    /// Expansion variable z = w/(w-1) as RE[,IM].
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Shift as RE[,IM].
    #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha_rat")]
    alpha: Option<String>,
    /// Shift as an exact rational P/Q; enables the exact coefficient cross-check.
    #[arg(long, allow_hyphen_values = true)]
    alpha_rat: Option<String>,
    #[arg(long, value_enum, default_value_t = EvalMethod::Accelerated)]
    method: EvalMethod,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ZetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// lemma, recurrences, splitting, proposition, bounds, sondow or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    q_max: Option<u32>,
    #[arg(long)]
    s_max: Option<u32>,
    #[arg(long)]
    p_max: Option<u32>,
    /// Comma-separated rational shifts for the exact checks.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    beta: Vec<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6")]
    s_list: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "1e-6,1e-8,1e-10,1e-12")]
    tol_list: Vec<f64>,
    #[command(flatten)]
    common: Common,
}

/// Parses `RE` or `RE,IM`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("expected RE[,IM], got {text:?}"));
    let mut parts = text.split(',');
    let re: f64 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let im: f64 = match parts.next() {
        Some(p) => p.trim().parse().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    if !re.is_finite() || !im.is_finite() {
        return Err(Error::NonFinite(text.to_string()));
    }
    Ok(Complex64::new(re, im))
}

/// Outcome of one subcommand before it is written out.
enum Outcome {
    Json { body: String, code: i32 },
    Csv { output: BenchOutput, code: i32 },
}

#[derive(Serialize)]
struct EvalOutput {
    value_re: f64,
    value_im: f64,
    terms_used: usize,
    error_bound: f64,
    converged: bool,
    method: EvalMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_check: Option<ExactCheck>,
}

#[derive(Serialize)]
struct ExactCheck {
    alpha: Rational,
    coefficients_compared: u32,
    max_relative_error: f64,
}

#[derive(Serialize)]
struct ZetaOutput {
    s: u32,
    value: f64,
    terms_used: usize,
    error_bound: f64,
    converged: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn exit_for(converged: bool) -> i32 {
    if converged {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<Outcome> {
    let max_terms = args.common.max_terms.unwrap_or(DEFAULT_MAX_TERMS);
    let tol = args.common.tol;
    let exact_alpha = args.alpha_rat.as_deref().map(str::parse::<Rational>).transpose()?;
    let alpha = match (&args.alpha, &exact_alpha) {
        (Some(text), _) => parse_complex(text)?,
        (None, Some(r)) => Complex64::new(r.to_f64(), 0.0),
        (None, None) => Complex64::new(0.0, 0.0),
    };
    if let Some(r) = &exact_alpha {
        if r.is_integer() && r.numer() <= &(-1).into() {
            return Err(Error::InvalidShift { re: r.to_f64(), im: 0.0, gap: 0.0 });
        }
    }
    let shift = ShiftParam::new(alpha)?;
    let w = args.w.as_deref().map(parse_complex).transpose()?;
    let z = args.z.as_deref().map(parse_complex).transpose()?;

    let result: SeriesResult = match args.method {
        EvalMethod::Accelerated => match (w, z) {
            (Some(w), _) => lerch_accelerated(w, &shift, args.s, tol, max_terms)?,
            (None, Some(z)) => lerch_accelerated_z(z, &shift, args.s, tol, max_terms)?,
            (None, None) => return Err(Error::Parse("one of --w or --z is required".into())),
        },
        EvalMethod::Direct => {
            let w = w.or_else(|| z.map(z_to_w)).expect("clap requires --w or --z");
            lerch_direct(w, &shift, args.s, tol, max_terms)?
        }
        EvalMethod::Euler => {
            let z = match (w, z) {
                (Some(w), _) => {
                    if w.re >= 0.5 {
                        return Err(Error::Domain(format!(
                            "binomial double sum needs Re(w) < 1/2, got Re(w) = {}",
                            w.re
                        )));
                    }
                    w_to_z(w)
                }
                (None, Some(z)) => z,
                (None, None) => return Err(Error::Parse("one of --w or --z is required".into())),
            };
            // Same coefficients, so the truncation point and bound carry over.
            let plan = lerch_accelerated_z(z, &shift, args.s, tol, max_terms)?;
            SeriesResult {
                value: euler_transform_eval(z, &shift, args.s, plan.terms_used)?,
                ..plan
            }
        }
    };

    let exact_check = match exact_alpha {
        Some(alpha) => {
            let count = (result.terms_used as u32).clamp(1, 40);
            let mut worst: f64 = 0.0;
            for (p, c) in (1..=count).zip(Coefficients::new(&shift, args.s)?) {
                let exact = coefficient_exact(p, &alpha, args.s)?.to_f64();
                worst = worst.max((c.re - exact).abs().max(c.im.abs()) / exact.abs());
            }
            Some(ExactCheck {
                alpha,
                coefficients_compared: count,
                max_relative_error: worst,
            })
        }
        None => None,
    };

    let body = to_json(&EvalOutput {
        value_re: result.value.re,
        value_im: result.value.im,
        terms_used: result.terms_used,
        error_bound: result.error_bound,
        converged: result.converged,
        method: args.method,
        exact_check,
    });
    Ok(Outcome::Json { body, code: exit_for(result.converged) })
}

fn cmd_zeta(args: &ZetaArgs) -> Result<Outcome> {
    if args.s <= 1 {
        return Err(Error::Domain(format!("zeta needs s >= 2, got s = {}", args.s)));
    }
    let s = u32::try_from(args.s).map_err(|_| Error::Domain(format!("order s = {} too large", args.s)))?;
    let max_terms = args.common.max_terms.unwrap_or(DEFAULT_MAX_TERMS);
    let r = zeta_accelerated(s, args.common.tol, max_terms)?;
    let body = to_json(&ZetaOutput {
        s,
        value: r.value.re,
        terms_used: r.terms_used,
        error_bound: r.error_bound,
        converged: r.converged,
    });
    Ok(Outcome::Json { body, code: exit_for(r.converged) })
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let suite: Suite = args.suite.parse()?;
    let mut config = SuiteConfig::default();
    if let Some(q) = args.q_max {
        config.q_max = q;
    }
    if let Some(s) = args.s_max {
        config = config.with_s_max(s);
    }
    if let Some(p) = args.p_max {
        config = config.with_p_max(p);
    }
    if !args.beta.is_empty() {
        config.betas = args
            .beta
            .iter()
            .map(|b| b.parse())
            .collect::<Result<Vec<Rational>>>()?;
        if let Some(bad) = config.betas.iter().find(|b| b.is_nonpositive_integer()) {
            return Err(Error::InvalidBeta(bad.to_string()));
        }
    }
    let reports = run_suite(suite, &config)?;
    let all_passed = reports.iter().all(|r| r.passed());
    Ok(Outcome::Json {
        body: to_json(&reports),
        code: exit_for(all_passed),
    })
}

fn cmd_bench(args: &BenchArgs) -> Result<Outcome> {
    let max_terms = args.common.max_terms.unwrap_or(DEFAULT_BENCH_MAX_TERMS);
    let output = run_bench(&args.s_list, &args.tol_list, max_terms)?;
    Ok(Outcome::Csv { output, code: EXIT_OK })
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn emit(outcome: Outcome, common: &Common, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Parse(format!("output error: {e}"));
    match outcome {
        Outcome::Json { body, code } => {
            writeln!(out, "{body}").map_err(io)?;
            if let Some(path) = &common.json {
                write_file(path, body.as_bytes())?;
            }
            Ok(code)
        }
        Outcome::Csv { output, code } => {
            let mut buf = Vec::new();
            write_csv(&output, &mut buf)?;
            match &common.csv {
                Some(path) => write_file(path, &buf)?,
                None => out.write_all(&buf).map_err(io)?,
            }
            if let Some(path) = &common.json {
                let text = serde_json::to_string_pretty(&output.rows).expect("rows serialize");
                write_file(path, text.as_bytes())?;
            }
            Ok(code)
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let (outcome, common) = match &cli.command {
        Command::Eval(a) => (cmd_eval(a), &a.common),
        Command::Zeta(a) => (cmd_zeta(a), &a.common),
        Command::Verify(a) => (cmd_verify(a), &a.common),
        Command::Bench(a) => (cmd_bench(a), &a.common),
    };
    match outcome.and_then(|o| emit(o, common, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
