//! Command-line front end. [`run`] parses arguments and returns the text for
//! stdout and stderr together with the exit code, so it can be driven from
//! tests without spawning a process.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use rug::Float;
use serde_json::{json, Value};

use crate::chains::{minimal_chain_from, Chain, StepKind};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::geometry::{table_row_with, TableRow, Verdict};
use crate::numerics::arb::{format_real, format_sci};
use crate::numerics::{
    quad_i, quad_i_nk, symmetry_ratio, ArbComplex, Numerics, PeriodMethod, Precision, Spouge,
};
use crate::symbolic::render::{
    closed_form_json, closed_form_latex, closed_form_text, to_latex, to_string_with, RenderOptions,
};
use crate::symbolic::solve_fraction;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the default `--digits`.
pub const DIGITS_ENV: &str = "GAMMA_PERIODS_DIGITS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "gamma-periods",
    version,
    about = "Closed forms for Gamma(p/q) as products of periods I_s, with numeric checks"
)]
pub struct Cli {
    /// Significant decimal digits for numeric work.
    #[arg(long, global = true, default_value_t = 50, env = DIGITS_ENV,
          value_parser = clap::value_parser!(u32).range(15..=100_000))]
    pub digits: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal computation chain for Gamma(p/q).
    Chain { fraction: String },
    /// Closed form Gamma(p/q)^E = product of periods.
    ClosedForm {
        fraction: String,
        /// Print I_2 as pi.
        #[arg(long)]
        pi: bool,
    },
    /// Check every reduced p/q with q <= qmax against the reference Gamma.
    Verify {
        #[arg(long)]
        qmax: u64,
    },
    /// Rows Gamma(1/q) for q = 2..qmax with geometric annotations.
    Table {
        #[arg(long)]
        qmax: u64,
    },
    /// Numeric value of I_s (`period I s`) or I_{n/k} (`period I n k`).
    Period {
        /// Period family; only `I`.
        family: String,
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        /// Integrate directly instead of using the Beta value.
        #[arg(long)]
        quadrature: bool,
    },
    /// Compare the integral from 1 to exp(2 pi i/n) with (1 - zeta) I_n / 2.
    BranchSymmetry { n: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            code: EXIT_OK,
            ..Default::default()
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidFraction(_) | Error::Domain { .. } | Error::Overflow(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn fail(e: Error) -> Output {
    Output {
        stderr: format!("error: {e}\n"),
        code: exit_code(&e),
        ..Default::default()
    }
}

/// Parses and runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    stderr: text,
                    code: EXIT_USAGE,
                    ..Default::default()
                }
            } else {
                Output::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    let prec = match Precision::new(cli.digits) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let mut notes = Vec::new();
    let result = match &cli.command {
        Command::Chain { fraction } => {
            parse_fraction(fraction, &mut notes).and_then(|x| cmd_chain(x, cli.format))
        }
        Command::ClosedForm { fraction, pi } => {
            parse_fraction(fraction, &mut notes).and_then(|x| cmd_closed_form(x, cli.format, *pi))
        }
        Command::Verify { qmax } => cmd_verify(*qmax, prec, cli.format),
        Command::Table { qmax } => cmd_table(*qmax, prec, cli.format).map(|s| (s, EXIT_OK)),
        Command::Period {
            family,
            args,
            quadrature,
        } => cmd_period(family, args, *quadrature, prec, cli.format),
        Command::BranchSymmetry { n } => cmd_branch_symmetry(n, prec, cli.format),
    };
    let mut out = match result {
        Ok((stdout, code)) => Output {
            stdout,
            code,
            ..Default::default()
        },
        Err(e) => fail(e),
    };
    let mut prefix: String = notes.iter().map(|n| format!("note: {n}\n")).collect();
    prefix.push_str(&out.stderr);
    out.stderr = prefix;
    out
}

/// Accepts `p/q` (whitespace allowed), an integer or a decimal. Records a
/// note when `p/q` was not in lowest terms.
pub fn parse_fraction(s: &str, notes: &mut Vec<String>) -> Result<Fraction> {
    let x: Fraction = s.parse()?;
    if let Some((p, q)) = s.split_once('/') {
        if let (Ok(p), Ok(q)) = (p.trim().parse::<u64>(), q.trim().parse::<u64>()) {
            if x.num() != p || x.den() != q {
                notes.push(format!("{p}/{q} reduced to {x}"));
            }
        }
    }
    Ok(x)
}

fn arrow_chain(chain: &Chain) -> Result<String> {
    let trace = chain.trace()?;
    Ok(trace
        .iter()
        .map(|x| format!("Γ({x})"))
        .collect::<Vec<_>>()
        .join(" → "))
}

pub fn cmd_chain(x: Fraction, format: Format) -> Result<(String, i32)> {
    let chain = minimal_chain_from(x)?;
    let sign = chain.closure.sign();
    let out = match format {
        Format::Json => {
            let steps: Vec<Value> = chain
                .steps
                .iter()
                .map(|s| json!({"kind": s.kind, "at": s.at.to_ratio_string()}))
                .collect();
            let value = json!({
                "start": chain.start.to_ratio_string(),
                "steps": steps,
                "trace": chain.trace()?.iter().map(|f| f.to_ratio_string()).collect::<Vec<_>>(),
                "closure": chain.closure,
                "doublings": chain.doublings,
                "sign": sign,
                "reentry_index": chain.reentry_index,
            });
            format!("{value}\n")
        }
        Format::Text | Format::Latex => {
            if x.is_one() {
                return Ok(("Γ(1) = 1\n".into(), EXIT_OK));
            }
            let mut s = arrow_chain(&chain)?;
            s.push('\n');
            let rules: Vec<&str> = chain
                .steps
                .iter()
                .map(|st| match st.kind {
                    StepKind::Double => "duplication",
                    StepKind::ReduceMod => "recurrence",
                    StepKind::Reflect => "reflection",
                })
                .collect();
            s.push_str(&format!("rules: {}\n", rules.join(", ")));
            s.push_str(&format!("doublings: {}\n", chain.doublings));
            s.push_str(&format!("closure: {}\n", chain.closure));
            s.push_str(&format!(
                "sign: {}\n",
                match sign {
                    Some(1) => "+",
                    Some(_) => "-",
                    None => "none",
                }
            ));
            s.push_str(&format!("reentry index: {}\n", chain.reentry_index));
            s
        }
    };
    Ok((out, EXIT_OK))
}

pub fn cmd_closed_form(x: Fraction, format: Format, pi: bool) -> Result<(String, i32)> {
    let cf = solve_fraction(x)?;
    let opts = RenderOptions { pi_symbol: pi };
    let s = match format {
        Format::Text => closed_form_text(&cf, opts),
        Format::Latex => closed_form_latex(&cf, opts),
        Format::Json => closed_form_json(&cf).to_string(),
    };
    Ok((s + "\n", EXIT_OK))
}

/// Reduced `p/q` in `(0, 1)` with `2 <= q <= qmax`, ordered by `q` then `p`.
pub fn reduced_fractions(qmax: u64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in 2..=qmax {
        for p in 1..q {
            let f = Fraction::new(p, q).expect("q >= 2");
            if f.den() == q {
                out.push(f);
            }
        }
    }
    out
}

struct VerifyRow {
    arg: Fraction,
    exponent: String,
    rel_error: Option<Float>,
    passed: bool,
    error: Option<String>,
}

fn verify_one(x: Fraction, numerics: &Numerics, tol_digits: u32) -> VerifyRow {
    let outcome = solve_fraction(x).and_then(|cf| {
        let v = numerics.verify(&cf, PeriodMethod::Beta, tol_digits)?;
        Ok((cf.exponent.to_string(), v))
    });
    match outcome {
        Ok((exponent, v)) => VerifyRow {
            arg: x,
            exponent,
            passed: v.passed,
            rel_error: Some(v.rel_error),
            error: None,
        },
        Err(e) => VerifyRow {
            arg: x,
            exponent: String::new(),
            rel_error: None,
            passed: false,
            error: Some(e.to_string()),
        },
    }
}

pub fn cmd_verify(qmax: u64, prec: Precision, format: Format) -> Result<(String, i32)> {
    if qmax < 2 {
        return Err(Error::domain("verify", qmax, "--qmax must be at least 2"));
    }
    let numerics = Numerics::new(prec);
    let tol_digits = prec.digits() / 2;
    let rows: Vec<VerifyRow> = reduced_fractions(qmax)
        .into_par_iter()
        .map(|x| verify_one(x, &numerics, tol_digits))
        .collect();
    let failures: Vec<&VerifyRow> = rows.iter().filter(|r| !r.passed).collect();
    let code = if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };

    let out = match format {
        Format::Json => {
            let row_json = |r: &VerifyRow| {
                json!({
                    "arg": r.arg.to_ratio_string(),
                    "exponent": r.exponent,
                    "rel_error": r.rel_error.as_ref().map(format_sci),
                    "passed": r.passed,
                    "error": r.error,
                })
            };
            let value = json!({
                "digits": prec.digits(),
                "tolerance": format!("1e-{tol_digits}"),
                "qmax": qmax,
                "checked": rows.len(),
                "failures": failures.iter().map(|r| r.arg.to_ratio_string()).collect::<Vec<_>>(),
                "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
            });
            format!("{value}\n")
        }
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for r in &rows {
                let err = match (&r.rel_error, &r.error) {
                    (Some(e), _) => format_sci(e),
                    (None, Some(msg)) => msg.clone(),
                    (None, None) => String::new(),
                };
                s.push_str(&format!(
                    "Γ({})^{}  rel_err {}  {}\n",
                    r.arg,
                    r.exponent,
                    err,
                    if r.passed { "ok" } else { "FAIL" }
                ));
            }
            s.push_str(&format!(
                "{} checked at {} digits, tolerance 1e-{}, {} failures\n",
                rows.len(),
                prec.digits(),
                tol_digits,
                failures.len()
            ));
            if !failures.is_empty() {
                let names: Vec<String> = failures.iter().map(|r| r.arg.to_string()).collect();
                s.push_str(&format!("failed: {}\n", names.join(", ")));
            }
            s
        }
    };
    Ok((out, code))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

fn verdict_summary(row: &TableRow) -> String {
    row.transcendence
        .iter()
        .map(|(s, v)| {
            let mark = match v.verdict {
                Verdict::ProvenTranscendental => "T",
                Verdict::CriterionNotApplicable => "n/a",
            };
            if s.is_integer() {
                format!("I_{s}:{mark}")
            } else {
                format!("I_({s}):{mark}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn table_rows(qmax: u64, prec: Precision) -> Result<Vec<TableRow>> {
    if qmax < 2 {
        return Err(Error::domain("table", qmax, "--qmax must be at least 2"));
    }
    let numerics = Numerics::new(prec);
    (2..=qmax)
        .into_par_iter()
        .map(|q| table_row_with(q, &numerics))
        .collect()
}

pub fn cmd_table(qmax: u64, prec: Precision, format: Format) -> Result<String> {
    let rows = table_rows(qmax, prec)?;
    let opts = RenderOptions::default();
    let mut s = String::new();
    match format {
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "q": r.q,
                        "closed_form": closed_form_json(&r.closed_form),
                        "uses_meromorphic": r.uses_meromorphic,
                        "elliptic_k": r.elliptic_k.to_string(),
                        "schneider": r.transcendence.iter().map(|(s, v)| json!({
                            "index": s.to_ratio_string(),
                            "verdict": v.verdict,
                        })).collect::<Vec<_>>(),
                        "rel_error": format_sci(r.rel_error()),
                        "verified": r.verification.passed,
                        "extrapolated": r.extrapolated,
                    })
                })
                .collect();
            s = format!("{}\n", Value::from(list));
        }
        Format::Latex => {
            s.push_str("\\begin{tabular}{c|c|c|c}\n");
            s.push_str("$q$ & $\\Gamma(1/q)^E$ & meromorphic & elliptic \\\\\n\\hline\n");
            for r in &rows {
                s.push_str(&format!(
                    "{} & ${}$ & {} & {} \\\\\n",
                    r.q,
                    closed_form_latex(&r.closed_form, opts)
                        .split_once(" = ")
                        .map(|(_, rhs)| format!(
                            "\\Gamma(1/{})^{{{}}} = {}",
                            r.q, r.closed_form.exponent, rhs
                        ))
                        .unwrap_or_else(|| to_latex(&r.closed_form.expr)),
                    yes_no(r.uses_meromorphic),
                    r.elliptic_k
                ));
            }
            s.push_str("\\end{tabular}\n");
        }
        Format::Text => {
            for r in &rows {
                s.push_str(&format!(
                    "q={}  E={}  {}\n  meromorphic: {}  elliptic K: {}  schneider: {}  rel_err: {}{}\n",
                    r.q,
                    r.closed_form.exponent,
                    to_string_with(&r.closed_form.expr, opts),
                    yes_no(r.uses_meromorphic),
                    r.elliptic_k,
                    verdict_summary(r),
                    format_sci(r.rel_error()),
                    if r.extrapolated { "  (extrapolated)" } else { "" }
                ));
            }
        }
    }
    Ok(s)
}

fn parse_u64(s: &str, what: &'static str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::domain(what, s, "expected a non-negative integer"))
}

pub fn cmd_period(
    family: &str,
    args: &[String],
    quadrature: bool,
    prec: Precision,
    format: Format,
) -> Result<(String, i32)> {
    if family != "I" {
        return Err(Error::domain(
            "period",
            family,
            "only the family I is available",
        ));
    }
    let mut notes = Vec::new();
    let (label, index, value, err) = match args {
        [s] => {
            let s = parse_fraction(s, &mut notes)?;
            if s < Fraction::ONE {
                return Err(Error::domain("period", s, "Re(s) ≥ 1 required"));
            }
            let (v, e) = if quadrature {
                let r = quad_i(s, prec)?;
                (r.value, r.err_estimate)
            } else {
                beta_period(s, prec)?
            };
            (format!("I_{s}"), s, v, e)
        }
        [n, k] => {
            let n = parse_u64(n, "period")?;
            let k = parse_u64(k, "period")?;
            if n == 0 || k == 0 || k > n {
                return Err(Error::domain(
                    "period",
                    format!("{n} {k}"),
                    "requires 1 ≤ k ≤ n",
                ));
            }
            let s = Fraction::new(n, k)?;
            let (v, e) = if quadrature {
                let r = quad_i_nk(n, k, prec)?;
                (r.value, r.err_estimate)
            } else {
                beta_period(s, prec)?
            };
            (format!("I_({n}/{k})"), s, v, e)
        }
        _ => return Err(Error::domain("period", args.join(" "), "expected s or n k")),
    };
    let digits = prec.digits() as usize;
    let method = if quadrature { "quadrature" } else { "beta" };
    let out = match format {
        Format::Json => format!(
            "{}\n",
            json!({
                "index": index.to_ratio_string(),
                "value": format_real(&value, digits),
                "err_estimate": format_sci(&err),
                "method": method,
                "digits": prec.digits(),
            })
        ),
        Format::Text | Format::Latex => format!(
            "{label} = {}\nerror estimate: {} ({method})\n",
            format_real(&value, digits),
            format_sci(&err)
        ),
    };
    Ok((out, EXIT_OK))
}

/// `I_s` via Beta, with the Gamma truncation bound scaled to the value.
fn beta_period(s: Fraction, prec: Precision) -> Result<(Float, Float)> {
    let spouge = Spouge::for_precision(prec);
    let v = spouge.period_via_beta(s)?;
    // three Gamma evaluations, each with relative error below the bound
    let e = spouge.error_bound() * Float::with_val(prec.bits(), v.abs_ref()) * 3u32;
    Ok((v, e))
}

pub fn cmd_branch_symmetry(n: &str, prec: Precision, format: Format) -> Result<(String, i32)> {
    let n = parse_u64(n, "branch-symmetry")?;
    let report = symmetry_ratio(n, prec)?;
    let d = 20usize.min(prec.digits() as usize);
    let c = |z: &ArbComplex| (format_real(&z.re, d), format_real(&z.im, d));
    let text = |z: &ArbComplex| {
        let im = format_real(&z.im, d);
        match im.strip_prefix('-') {
            Some(abs) => format!("{} - {abs} i", format_real(&z.re, d)),
            None => format!("{} + {im} i", format_real(&z.re, d)),
        }
    };
    let (lr, li) = c(&report.lhs);
    let (rr, ri) = c(&report.rhs);
    let (qr, qi) = c(&report.ratio);
    let phase_over_pi = Float::with_val(prec.bits(), &report.phase / prec.pi());
    let out = match format {
        Format::Json => format!(
            "{}\n",
            json!({
                "n": n,
                "lhs": [lr, li],
                "rhs": [rr, ri],
                "ratio": [qr, qi],
                "modulus": format_real(&report.modulus, d),
                "phase": format_real(&report.phase, d),
                "phase_over_pi": format_real(&phase_over_pi, d),
                "err_estimate": format_sci(&report.err_estimate),
                "converged": report.converged,
            })
        ),
        Format::Text | Format::Latex => format!(
            "n = {n}\nLHS   = {}\nRHS   = {}\nratio = {}\n|ratio| = {}\nphase = {} rad ({} pi)\nerror estimate: {}\n",
            text(&report.lhs),
            text(&report.rhs),
            text(&report.ratio),
            format_real(&report.modulus, d),
            format_real(&report.phase, d),
            format_real(&phase_over_pi, d),
            format_sci(&report.err_estimate)
        ),
    };
    Ok((out, EXIT_OK))
}
