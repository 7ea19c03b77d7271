//! Text, LaTeX and JSON renderings of period expressions and closed forms.
//!
//! Factor order is canonical everywhere: primes ascending, then atoms by
//! variant (`I`, `sin`, `Gamma`) and argument value.

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::symbolic::expr::{Atom, PeriodExpr};
use crate::symbolic::solve::ClosedForm;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Print `I_2` as `pi`.
    pub pi_symbol: bool,
}

fn ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn text_exponent(e: &Rational) -> String {
    if *e == 1 {
        String::new()
    } else if e.is_integer() && *e > 0 {
        format!("^{e}")
    } else {
        format!("^({e})")
    }
}

fn text_atom(a: &Atom, opts: RenderOptions) -> String {
    match a {
        Atom::I(s) if opts.pi_symbol && *s == Fraction::integer(2) => "pi".into(),
        Atom::I(s) if s.is_integer() => format!("I_{s}"),
        Atom::I(s) => format!("I_({s})"),
        Atom::SinPi(r) if r.num() == 1 => format!("sin(pi/{})", r.den()),
        Atom::SinPi(r) => format!("sin({}pi/{})", r.num(), r.den()),
        Atom::Gamma(r) => format!("Gamma({r})"),
    }
}

pub fn to_canonical_string(e: &PeriodExpr) -> String {
    to_string_with(e, RenderOptions::default())
}

pub fn to_string_with(e: &PeriodExpr, opts: RenderOptions) -> String {
    let mut parts: Vec<String> = e
        .primes()
        .map(|(p, x)| format!("{p}{}", text_exponent(x)))
        .collect();
    parts.extend(
        e.atoms()
            .map(|(a, x)| format!("{}{}", text_atom(&a, opts), text_exponent(x))),
    );
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

fn latex_group(s: String) -> String {
    if s.chars().count() == 1 {
        s
    } else {
        format!("{{{s}}}")
    }
}

fn latex_exponent(e: &Rational) -> String {
    if *e == 1 {
        String::new()
    } else {
        format!("^{}", latex_group(e.to_string()))
    }
}

fn latex_atom(a: &Atom, opts: RenderOptions) -> String {
    match a {
        Atom::I(s) if opts.pi_symbol && *s == Fraction::integer(2) => "\\pi".into(),
        Atom::I(s) => format!("I_{}", latex_group(s.to_string())),
        Atom::SinPi(r) if r.num() == 1 => format!("\\sin(\\pi/{})", r.den()),
        Atom::SinPi(r) => format!("\\sin({}\\pi/{})", r.num(), r.den()),
        Atom::Gamma(r) => format!("\\Gamma({r})"),
    }
}

pub fn to_latex(e: &PeriodExpr) -> String {
    to_latex_with(e, RenderOptions::default())
}

/// Positive exponents go to the numerator, negative ones to a `\frac`
/// denominator with the sign flipped.
pub fn to_latex_with(e: &PeriodExpr, opts: RenderOptions) -> String {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (p, x) in e.primes() {
        let (side, x) = if *x > 0 {
            (&mut num, x.clone())
        } else {
            (&mut den, Rational::from(-x))
        };
        side.push(format!("{p}{}", latex_exponent(&x)));
    }
    for (a, x) in e.atoms() {
        let (side, x) = if *x > 0 {
            (&mut num, x.clone())
        } else {
            (&mut den, Rational::from(-x))
        };
        side.push(format!("{}{}", latex_atom(&a, opts), latex_exponent(&x)));
    }
    let num = if num.is_empty() {
        "1".to_string()
    } else {
        num.join(" ")
    };
    if den.is_empty() {
        num
    } else {
        format!("\\frac{{{num}}}{{{}}}", den.join(" "))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AtomJson {
    pub kind: String,
    pub arg: String,
    pub exp: String,
}

/// Wire form of [`PeriodExpr`]:
/// `{"primes": [[p, "num/den"], ...], "atoms": [{"kind", "arg", "exp"}, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExprJson {
    pub primes: Vec<(u64, String)>,
    pub atoms: Vec<AtomJson>,
}

impl From<&PeriodExpr> for ExprJson {
    fn from(e: &PeriodExpr) -> Self {
        ExprJson {
            primes: e.primes().map(|(p, x)| (p, ratio_string(x))).collect(),
            atoms: e
                .atoms()
                .map(|(a, x)| AtomJson {
                    kind: a.kind_name().into(),
                    arg: a.arg().to_ratio_string(),
                    exp: ratio_string(x),
                })
                .collect(),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Json(format!("bad exponent {s:?}")))
}

impl TryFrom<&ExprJson> for PeriodExpr {
    type Error = Error;

    fn try_from(j: &ExprJson) -> Result<Self> {
        let mut out = PeriodExpr::one();
        for (p, x) in &j.primes {
            out.mul_assign(&PeriodExpr::prime_power(*p, parse_rational(x)?)?);
        }
        for a in &j.atoms {
            let arg: Fraction = a.arg.parse()?;
            let atom = match a.kind.as_str() {
                "I" => Atom::period(arg)?,
                "sinpi" => Atom::sin_pi(arg)?,
                "gamma" => Atom::gamma(arg)?,
                other => return Err(Error::Json(format!("unknown atom kind {other:?}"))),
            };
            out.mul_assign(&PeriodExpr::atom(atom, parse_rational(&a.exp)?));
        }
        Ok(out)
    }
}

pub fn to_json(e: &PeriodExpr) -> String {
    serde_json::to_string(&ExprJson::from(e)).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<PeriodExpr> {
    let j: ExprJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    PeriodExpr::try_from(&j)
}

/// `E` as a JSON integer when it fits in `u64`, otherwise a decimal string.
pub fn exponent_json(cf: &ClosedForm) -> serde_json::Value {
    match cf.exponent.to_u64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(cf.exponent.to_string()),
    }
}

pub fn closed_form_json(cf: &ClosedForm) -> serde_json::Value {
    serde_json::json!({
        "arg": cf.arg.to_ratio_string(),
        "exponent": exponent_json(cf),
        "expr": ExprJson::from(&cf.expr),
    })
}

pub fn closed_form_text(cf: &ClosedForm, opts: RenderOptions) -> String {
    format!(
        "Γ({})^{} = {}",
        cf.arg,
        cf.exponent,
        to_string_with(&cf.expr, opts)
    )
}

pub fn closed_form_latex(cf: &ClosedForm, opts: RenderOptions) -> String {
    format!(
        "\\Gamma({})^{} = {}",
        cf.arg,
        latex_group(cf.exponent.to_string()),
        to_latex_with(&cf.expr, opts)
    )
}
