//! Precision-parametrized real and complex scalars.
//!
//! Reals are MPFR floats whose precision travels with each value; there is no
//! process-wide precision setting. Every entry point takes a [`Precision`]
//! stating the number of decimal digits the caller wants to trust.

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};

pub type ArbReal = Float;

pub const DEFAULT_DIGITS: u32 = 50;

/// Extra decimal digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 15;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub fn new(digits: u32) -> Result<Self> {
        if digits == 0 || digits > 100_000 {
            return Err(Error::domain(
                "precision",
                digits,
                "digits must be in 1..=100000",
            ));
        }
        Ok(Precision { digits })
    }

    /// Requested decimal digits.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Working digits including guard digits.
    pub fn working_digits(&self) -> u32 {
        self.digits + GUARD_DIGITS
    }

    /// Binary precision for intermediate values.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32
    }

    /// `10^(-e)` at working precision.
    pub fn ten_pow_neg(&self, e: i32) -> Float {
        Float::with_val(self.bits(), 10).pow(-e)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits(), Constant::Pi)
    }

    pub fn real(&self, q: &Rational) -> Float {
        Float::with_val(self.bits(), q)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            digits: DEFAULT_DIGITS,
        }
    }
}

/// `|a - b| / |b|`, or `|a - b|` when `b = 0`.
pub fn rel_error(a: &Float, b: &Float) -> Float {
    let prec = a.prec().max(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    if b.is_zero() {
        diff
    } else {
        diff / Float::with_val(prec, b.abs_ref())
    }
}

/// Decimal rendering with `digits` significant digits, rounded to nearest
/// with ties to even.
pub fn format_real(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let s = x.to_string_radix_round(10, Some(digits.max(1)), Round::Nearest);
    // MPFR gives "d.ddde<exp>"; print small exponents positionally.
    let (mantissa, exp) = match s.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (s.clone(), 0),
    };
    if (-5..=20).contains(&exp) {
        let (sign, m) = match mantissa.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("", mantissa),
        };
        let digits_only: String = m.chars().filter(|c| c.is_ascii_digit()).collect();
        let point = exp + 1;
        let body = if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), digits_only)
        } else if point as usize >= digits_only.len() {
            format!(
                "{}{}",
                digits_only,
                "0".repeat(point as usize - digits_only.len())
            )
        } else {
            let (a, b) = digits_only.split_at(point as usize);
            format!("{a}.{b}")
        };
        format!("{sign}{body}")
    } else {
        format!("{mantissa}e{exp}")
    }
}

/// Short scientific rendering for error magnitudes.
pub fn format_sci(x: &Float) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix_round(10, Some(3), Round::Nearest)
}

/// A complex number as a pair of MPFR reals.
#[derive(Clone, Debug, PartialEq)]
pub struct ArbComplex {
    pub re: Float,
    pub im: Float,
}

impl ArbComplex {
    pub fn new(re: Float, im: Float) -> Self {
        ArbComplex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        ArbComplex {
            re: Float::new(bits),
            im: Float::new(bits),
        }
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        ArbComplex { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// `exp(i theta)`.
    pub fn cis(theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        ArbComplex { re: c, im: s }
    }

    pub fn conj(&self) -> Self {
        ArbComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec();
        ArbComplex {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec();
        ArbComplex {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        ArbComplex { re, im }
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        ArbComplex {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        self.mul(&o.conj()).scale(&d.recip())
    }

    /// Principal square root (branch cut on the negative real axis).
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.re.is_zero() && self.im.is_zero() {
            return ArbComplex::zero(p);
        }
        let m = self.abs();
        if self.re >= 0 {
            let s = (Float::with_val(p, &m + &self.re) / 2u32).sqrt();
            let im = Float::with_val(p, &self.im / &s) / 2u32;
            ArbComplex { re: s, im }
        } else {
            let s = (Float::with_val(p, &m - &self.re) / 2u32).sqrt();
            let re = Float::with_val(p, self.im.abs_ref()) / &s / 2u32;
            let im = if self.im.is_sign_negative() { -s } else { s };
            ArbComplex { re, im }
        }
    }

    /// `exp(z) - 1` without cancellation for small `|z|`.
    pub fn expm1(&self) -> Self {
        let p = self.prec();
        let (sin_b, cos_b) = self.im.clone().sin_cos(Float::new(p));
        let half_b = Float::with_val(p, &self.im / 2u32);
        let sin_half = half_b.sin();
        let em1 = self.re.clone().exp_m1();
        // Re = expm1(a) cos b - 2 sin^2(b/2), Im = e^a sin b
        let re =
            Float::with_val(p, &em1 * &cos_b) - Float::with_val(p, sin_half.square_ref()) * 2u32;
        let ea = Float::with_val(p, &em1 + 1u32);
        let im = ea * sin_b;
        ArbComplex { re, im }
    }
}
