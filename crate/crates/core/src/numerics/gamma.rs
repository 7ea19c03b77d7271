//! Reference Gamma and Beta via Spouge's approximation.
//!
//! For integer `a >= 3` and `Re z >= 0`,
//!
//! ```text
//! Gamma(z + 1) = (z + a)^(z + 1/2) e^-(z + a) [c_0 + sum_{k=1}^{a-1} c_k / (z + k) + eps]
//! c_0 = sqrt(2 pi),   c_k = (-1)^(k-1) / (k-1)! * (a - k)^(k - 1/2) * e^(a - k)
//! ```
//!
//! with relative error `|eps / c_0| <= a^(-1/2) (2 pi)^-(a + 1/2)`. The bound
//! is a-priori, so the parameter `a` can be chosen for any target precision.
//! Arguments below 1 are shifted with `Gamma(x) = Gamma(x + 1) / x`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::numerics::arb::Precision;

/// Precomputed Spouge coefficients for one `(a, precision)` pair.
#[derive(Clone, Debug)]
pub struct Spouge {
    a: u32,
    bits: u32,
    out_bits: u32,
    coeffs: Vec<Float>,
}

impl Spouge {
    /// `a` is the Spouge parameter; `bits` the precision of returned values.
    /// Coefficients are formed with extra bits to absorb the cancellation in
    /// the alternating sum (the largest `|c_k|` is about `10^(0.55 a)`).
    pub fn new(a: u32, bits: u32) -> Result<Self> {
        if a < 3 {
            return Err(Error::domain("spouge", a, "parameter must be at least 3"));
        }
        let work = bits + 2 * a + 32;
        let mut coeffs = Vec::with_capacity(a as usize);
        let two_pi = Float::with_val(work, Constant::Pi) * 2u32;
        coeffs.push(two_pi.sqrt());
        let mut factorial = Float::with_val(work, 1u32);
        for k in 1..a {
            if k > 1 {
                factorial *= k - 1;
            }
            let base = Float::with_val(work, a - k);
            let power = base.clone().pow(Float::with_val(work, k) - 0.5f64);
            let e = Float::with_val(work, a - k).exp();
            let mut c = power * e / &factorial;
            if k % 2 == 0 {
                c = -c;
            }
            coeffs.push(c);
        }
        Ok(Spouge {
            a,
            bits: work,
            out_bits: bits,
            coeffs,
        })
    }

    /// Smallest parameter whose bound is below `10^-digits`, with one spare.
    pub fn parameter_for_digits(digits: u32) -> u32 {
        let per_step = (2.0 * std::f64::consts::PI).log10();
        (f64::from(digits) / per_step).ceil() as u32 + 1
    }

    /// Coefficients sized so the bound sits below the working precision of `prec`.
    pub fn for_precision(prec: Precision) -> Self {
        let a = Self::parameter_for_digits(prec.working_digits());
        Self::new(a, prec.bits()).expect("parameter above minimum")
    }

    pub fn parameter(&self) -> u32 {
        self.a
    }

    /// `a^(-1/2) (2 pi)^-(a + 1/2)`.
    pub fn error_bound(&self) -> Float {
        let a = Float::with_val(64, self.a);
        let two_pi = Float::with_val(64, Constant::Pi) * 2u32;
        let expo = Float::with_val(64, &a + 0.5f64);
        let denom = two_pi.pow(expo) * a.sqrt();
        denom.recip()
    }

    /// `Gamma(z + 1)` for `z >= 0`.
    fn gamma_shifted(&self, z: &Float) -> Float {
        let w = self.bits;
        let mut sum = self.coeffs[0].clone();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let d = Float::with_val(w, z + k as u32);
            sum += Float::with_val(w, c / &d);
        }
        let za = Float::with_val(w, z + self.a);
        let half = Float::with_val(w, z + 0.5f64);
        let log_lead = half * Float::with_val(w, za.ln_ref()) - &za;
        let value = log_lead.exp() * sum;
        Float::with_val(self.out_bits, value)
    }

    pub fn gamma(&self, x: &Float) -> Result<Float> {
        if !x.is_finite() || *x <= 0 {
            return Err(Error::domain(
                "ref_gamma",
                x.to_f64(),
                "argument must be positive",
            ));
        }
        let w = self.bits;
        let x = Float::with_val(w, x);
        if x >= 1 {
            let z = Float::with_val(w, &x - 1u32);
            Ok(self.gamma_shifted(&z))
        } else {
            let g = Float::with_val(w, self.gamma_shifted(&x));
            Ok(Float::with_val(self.out_bits, g / x))
        }
    }

    pub fn gamma_frac(&self, x: Fraction) -> Result<Float> {
        self.gamma(&Float::with_val(self.bits, &x.to_rational()))
    }

    /// `Gamma(a) Gamma(b) / Gamma(a + b)`.
    pub fn beta(&self, a: &Float, b: &Float) -> Result<Float> {
        if *a <= 0 || *b <= 0 {
            return Err(Error::domain(
                "ref_beta",
                format!("({a}, {b})"),
                "arguments must be positive",
            ));
        }
        let w = self.bits;
        let sum = Float::with_val(w, a + b);
        let ga = Float::with_val(w, self.gamma(a)?);
        let gb = Float::with_val(w, self.gamma(b)?);
        let gs = Float::with_val(w, self.gamma(&sum)?);
        Ok(Float::with_val(self.out_bits, ga * gb / gs))
    }

    /// `I_s = (2/s) B(1/s, 1/2)`.
    pub fn period_via_beta(&self, s: Fraction) -> Result<Float> {
        if s < Fraction::ONE {
            return Err(Error::domain("I", s, "index must satisfy s >= 1"));
        }
        let w = self.bits;
        let inv = Float::with_val(w, &s.recip()?.to_rational());
        let half = Float::with_val(w, 0.5f64);
        let b = Float::with_val(w, self.beta(&inv, &half)?);
        Ok(Float::with_val(self.out_bits, b * inv * 2u32))
    }
}

/// `Gamma(x)` to relative error below `10^-(digits - 5)`.
pub fn ref_gamma(x: &Float, prec: Precision) -> Result<Float> {
    Spouge::for_precision(prec).gamma(x)
}

pub fn ref_gamma_frac(x: Fraction, prec: Precision) -> Result<Float> {
    Spouge::for_precision(prec).gamma_frac(x)
}

/// `B(a, b)` to relative error below `10^-(digits - 6)`.
pub fn ref_beta(a: &Float, b: &Float, prec: Precision) -> Result<Float> {
    Spouge::for_precision(prec).beta(a, b)
}
