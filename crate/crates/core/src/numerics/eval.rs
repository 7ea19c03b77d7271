//! Numeric evaluation of period expressions.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::numerics::arb::{rel_error, Precision};
use crate::numerics::gamma::Spouge;
use crate::numerics::quad::quad_i;
use crate::symbolic::expr::{Atom, PeriodExpr};
use crate::symbolic::render::to_canonical_string;
use crate::symbolic::solve::ClosedForm;

/// How `I_s` atoms are evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PeriodMethod {
    /// `(2/s) B(1/s, 1/2)` through the reference Gamma.
    #[default]
    Beta,
    /// Tanh-sinh quadrature of the defining integral.
    Quadrature,
}

/// Evaluation context: a precision and the Gamma coefficients for it.
#[derive(Clone, Debug)]
pub struct Numerics {
    prec: Precision,
    spouge: Spouge,
}

impl Numerics {
    pub fn new(prec: Precision) -> Self {
        Numerics {
            prec,
            spouge: Spouge::for_precision(prec),
        }
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn gamma(&self, x: Fraction) -> Result<Float> {
        self.spouge.gamma_frac(x)
    }

    pub fn period(&self, s: Fraction, method: PeriodMethod) -> Result<Float> {
        match method {
            PeriodMethod::Beta => self.spouge.period_via_beta(s),
            PeriodMethod::Quadrature => Ok(quad_i(s, self.prec)?.value),
        }
    }

    pub fn sin_pi(&self, r: Fraction) -> Float {
        let bits = self.prec.bits();
        let arg = self.prec.pi() * Float::with_val(bits, &r.to_rational());
        arg.sin()
    }

    fn atom_value(&self, a: &Atom, method: PeriodMethod) -> Result<Float> {
        match *a {
            Atom::I(s) => self.period(s, method),
            Atom::SinPi(r) => Ok(self.sin_pi(r)),
            Atom::Gamma(_) => Err(Error::Internal("Gamma atom reached evaluation".into())),
        }
    }

    /// Evaluates the product through its logarithm, `sum e_i ln v_i`.
    pub fn eval_expr(&self, e: &PeriodExpr, method: PeriodMethod) -> Result<Float> {
        if e.has_gamma() {
            return Err(Error::UnresolvedGamma(to_canonical_string(e)));
        }
        let bits = self.prec.bits();
        let mut log = Float::new(bits);
        for (p, x) in e.primes() {
            let ln_p = Float::with_val(bits, p).ln();
            log += ln_p * Float::with_val(bits, x);
        }
        for (a, x) in e.atoms() {
            let v = self.atom_value(&a, method)?;
            log += v.ln() * Float::with_val(bits, x);
        }
        Ok(log.exp())
    }
}

/// Outcome of comparing a closed form against the reference Gamma.
#[derive(Clone, Debug)]
pub struct Verification {
    /// `eval(expr)`.
    pub closed_form_value: Float,
    /// `ref_gamma(arg)^E`.
    pub reference_value: Float,
    pub rel_error: Float,
    pub passed: bool,
}

impl Numerics {
    /// Checks `|eval(expr) - ref_gamma(arg)^E| / ref_gamma(arg)^E < 10^-tol_digits`.
    pub fn verify(
        &self,
        cf: &ClosedForm,
        method: PeriodMethod,
        tol_digits: u32,
    ) -> Result<Verification> {
        let value = self.eval_expr(&cf.expr, method)?;
        let reference = self.gamma(cf.arg)?.pow(&cf.exponent);
        let rel_error = rel_error(&value, &reference);
        let passed = rel_error < self.prec.ten_pow_neg(tol_digits as i32);
        Ok(Verification {
            closed_form_value: value,
            reference_value: reference,
            rel_error,
            passed,
        })
    }
}

/// `expr` at `prec` using the Beta route for periods.
pub fn eval_expr(e: &PeriodExpr, prec: Precision) -> Result<Float> {
    Numerics::new(prec).eval_expr(e, PeriodMethod::Beta)
}
