//! Bookkeeping on the curves `y^2 = 1 - x^n`: genus, the holomorphic or
//! meromorphic nature of `x^(k-1) dx / y`, the Schneider transcendence test
//! for the Beta values behind each `I_{n/k}`, and assembly of table rows.

use std::fmt;

use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::numerics::{Numerics, PeriodMethod, Precision, Verification};
use crate::symbolic::{solve_fraction, ClosedForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveInfo {
    pub n: u64,
    pub genus: u64,
}

impl CurveInfo {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("curve", n, "requires n >= 1"));
        }
        Ok(CurveInfo { n, genus: genus(n) })
    }
}

/// Genus of the compact Riemann surface of `y^2 = 1 - x^n`.
pub fn genus(n: u64) -> u64 {
    n.saturating_sub(1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormKind {
    Holomorphic,
    MeromorphicPoleAtInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormClass {
    pub n: u64,
    pub k: u64,
    pub kind: FormKind,
}

/// Classifies `omega_{k-1} = x^(k-1) dx / y` on `y^2 = 1 - x^n`, `n >= 3`.
pub fn classify_form(n: u64, k: u64) -> Result<FormClass> {
    if n < 3 {
        return Err(Error::domain(
            "classify_form",
            n,
            "geometric reading needs n >= 3",
        ));
    }
    if k == 0 || k > n {
        return Err(Error::domain(
            "classify_form",
            format!("({n}, {k})"),
            "requires 1 <= k <= n",
        ));
    }
    let kind = if k <= genus(n) {
        FormKind::Holomorphic
    } else {
        FormKind::MeromorphicPoleAtInfinity
    };
    Ok(FormClass { n, k, kind })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ProvenTranscendental,
    CriterionNotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ProvenTranscendental => "transcendental",
            Verdict::CriterionNotApplicable => "n/a",
        })
    }
}

/// Schneider's test applied to `B(a, b)` with `(a, b) = (k/n, 1/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TranscendenceVerdict {
    pub verdict: Verdict,
    pub witness: (Fraction, Fraction),
}

/// `I_{n/k} = (2k/n) B(k/n, 1/2)` is transcendental when `k/n` and
/// `k/n + 1/2` are both non-integers (`b = 1/2` never is an integer).
pub fn schneider(nk: Fraction) -> Result<TranscendenceVerdict> {
    if nk < Fraction::ONE {
        return Err(Error::domain(
            "schneider",
            nk,
            "index must satisfy n/k >= 1",
        ));
    }
    let a = nk.recip()?;
    // a + 1/2 is an integer iff 2a is odd and a has denominator 2
    let a_plus_half_integral = a.den() == 2;
    let verdict = if a.is_integer() || a_plus_half_integral {
        Verdict::CriterionNotApplicable
    } else {
        Verdict::ProvenTranscendental
    };
    Ok(TranscendenceVerdict {
        verdict,
        witness: (a, Fraction::HALF),
    })
}

/// Whether some `I_{n/k}` factor comes from a meromorphic form (`k > genus(n)`).
/// Indices with `n < 3` have no geometric reading and never count.
pub fn uses_meromorphic(cf: &ClosedForm) -> bool {
    cf.expr.period_indices().into_iter().any(|s| {
        let (n, k) = (s.num(), s.den());
        matches!(
            classify_form(n, k),
            Ok(FormClass {
                kind: FormKind::MeromorphicPoleAtInfinity,
                ..
            })
        )
    })
}

/// Whether `Gamma(1/q)` is known to be an elliptic period `K(k)`. A fixed
/// lookup for `q <= 8`; nothing is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EllipticStatus {
    Yes,
    Unknown,
    /// No recorded status for this `q`.
    NotAvailable,
}

impl EllipticStatus {
    pub fn for_q(q: u64) -> Self {
        match q {
            2 | 3 | 4 | 6 | 8 => EllipticStatus::Yes,
            5 | 7 => EllipticStatus::Unknown,
            _ => EllipticStatus::NotAvailable,
        }
    }
}

impl fmt::Display for EllipticStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EllipticStatus::Yes => "Yes",
            EllipticStatus::Unknown => "???",
            EllipticStatus::NotAvailable => "n/a",
        })
    }
}

/// Largest `q` with a recorded elliptic status.
pub const ANNOTATED_QMAX: u64 = 8;

#[derive(Clone, Debug)]
pub struct TableRow {
    pub q: u64,
    pub closed_form: ClosedForm,
    pub uses_meromorphic: bool,
    pub elliptic_k: EllipticStatus,
    pub transcendence: Vec<(Fraction, TranscendenceVerdict)>,
    pub verification: Verification,
    /// `q` lies beyond the annotated range.
    pub extrapolated: bool,
}

/// Row for `Gamma(1/q)`, verified at the context's precision to `P/2` digits.
pub fn table_row_with(q: u64, numerics: &Numerics) -> Result<TableRow> {
    if q < 2 {
        return Err(Error::domain("table_row", q, "requires q >= 2"));
    }
    let closed_form = solve_fraction(Fraction::new(1, q)?)?;
    let transcendence = closed_form
        .expr
        .period_indices()
        .into_iter()
        .map(|s| schneider(s).map(|v| (s, v)))
        .collect::<Result<Vec<_>>>()?;
    let tol_digits = numerics.precision().digits() / 2;
    let verification = numerics.verify(&closed_form, PeriodMethod::Beta, tol_digits)?;
    Ok(TableRow {
        q,
        uses_meromorphic: uses_meromorphic(&closed_form),
        elliptic_k: EllipticStatus::for_q(q),
        transcendence,
        verification,
        extrapolated: q > ANNOTATED_QMAX,
        closed_form,
    })
}

pub fn table_row(q: u64, prec: Precision) -> Result<TableRow> {
    table_row_with(q, &Numerics::new(prec))
}

impl TableRow {
    pub fn rel_error(&self) -> &Float {
        &self.verification.rel_error
    }
}
