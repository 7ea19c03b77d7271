//! Tanh-sinh (double-exponential) quadrature on the unit interval.
//!
//! The substitution `x = 1 / (1 + exp(-pi sinh t))` maps `t in R` onto
//! `(0, 1)`; the weight `pi cosh t * x (1 - x)` decays double-exponentially,
//! which absorbs integrable algebraic endpoint singularities such as
//! `(1 - x)^(-1/2)`. Both `x` and `1 - x` are formed without cancellation and
//! handed to the integrand, so it can work near either endpoint at full
//! relative precision.
//!
//! Level `L` uses step `h = 2^-L`; each level reuses the previous sum and only
//! evaluates the new odd nodes. The published error estimate is the
//! difference between the last two levels.

use rug::Float;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::numerics::arb::{ArbComplex, Precision};

/// Result of a quadrature together with its convergence record.
#[derive(Clone, Debug)]
pub struct QuadResult<T> {
    pub value: T,
    pub err_estimate: Float,
    pub evaluations: u64,
    pub levels: u32,
    pub converged: bool,
}

/// Values the quadrature can accumulate.
pub trait QuadValue: Clone {
    fn zero(bits: u32) -> Self;
    fn add_scaled(&mut self, v: &Self, w: &Float);
    fn scaled(&self, w: &Float) -> Self;
    fn distance(&self, other: &Self) -> Float;
    fn magnitude(&self) -> Float;
}

impl QuadValue for Float {
    fn zero(bits: u32) -> Self {
        Float::new(bits)
    }

    fn add_scaled(&mut self, v: &Self, w: &Float) {
        *self += Float::with_val(self.prec(), v * w);
    }

    fn scaled(&self, w: &Float) -> Self {
        Float::with_val(self.prec(), self * w)
    }

    fn distance(&self, other: &Self) -> Float {
        Float::with_val(self.prec(), self - other).abs()
    }

    fn magnitude(&self) -> Float {
        self.clone().abs()
    }
}

impl QuadValue for ArbComplex {
    fn zero(bits: u32) -> Self {
        ArbComplex::zero(bits)
    }

    fn add_scaled(&mut self, v: &Self, w: &Float) {
        *self = self.add(&v.scale(w));
    }

    fn scaled(&self, w: &Float) -> Self {
        self.scale(w)
    }

    fn distance(&self, other: &Self) -> Float {
        self.sub(other).abs()
    }

    fn magnitude(&self) -> Float {
        self.abs()
    }
}

/// An abscissa in `(0, 1)` with its exact complement.
#[derive(Clone, Debug)]
pub struct Node {
    pub x: Float,
    pub complement: Float,
}

impl Node {
    /// `ln x`, accurate also for `x` close to 1.
    pub fn ln_x(&self) -> Float {
        if self.complement < 0.5f64 {
            Float::with_val(self.x.prec(), -&self.complement).ln_1p()
        } else {
            self.x.clone().ln()
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TanhSinh {
    pub max_level: u32,
    pub min_level: u32,
}

impl Default for TanhSinh {
    fn default() -> Self {
        TanhSinh {
            max_level: 12,
            min_level: 3,
        }
    }
}

impl TanhSinh {
    /// Integrates `f` over `(0, 1)`; converged once successive levels differ
    /// by at most `tol * max(1, |value|)`.
    pub fn integrate<T, F>(&self, prec: Precision, tol: &Float, mut f: F) -> QuadResult<T>
    where
        T: QuadValue,
        F: FnMut(&Node) -> T,
    {
        let bits = prec.bits();
        let pi = prec.pi();
        // Past t_max every weight times a (1 - x)^(-1/2)-type singularity is
        // below 10^-(working digits + 9).
        let v_max = 2.0 * (f64::from(prec.working_digits()) * std::f64::consts::LN_10 + 20.0);
        let t_max = (v_max / std::f64::consts::PI).asinh();

        let mut evaluations = 0u64;
        let mut node_sum = |t: &Float, acc: &mut T| {
            let (sh, ch) = t.clone().sinh_cosh(Float::new(bits));
            let v = Float::with_val(bits, &pi * &sh);
            let ev = v.exp();
            let denom = Float::with_val(bits, &ev + 1u32);
            let x = Float::with_val(bits, &ev / &denom);
            let complement = Float::with_val(bits, denom.recip_ref());
            let w = Float::with_val(bits, &pi * &ch) * &x * &complement;
            if w.is_zero() {
                return;
            }
            let fx = f(&Node { x, complement });
            evaluations += 1;
            acc.add_scaled(&fx, &w);
        };

        // level 0: h = 1, t = 0, +-1, +-2, ...
        let mut total = T::zero(bits);
        let k_max = t_max.floor() as i64;
        for k in -k_max..=k_max {
            node_sum(&Float::with_val(bits, k), &mut total);
        }
        let mut prev = total.clone();
        let mut err = Float::with_val(bits, f64::INFINITY);
        let mut level = 0;
        let mut converged = false;

        while level < self.max_level {
            level += 1;
            let h = Float::with_val(bits, 1u32) >> level;
            let k_max = (t_max * f64::from(1u32 << level)).floor() as i64;
            let mut fresh = T::zero(bits);
            let mut k = -k_max + if k_max % 2 == 0 { 1 } else { 0 };
            while k <= k_max {
                node_sum(&(Float::with_val(bits, k) >> level), &mut fresh);
                k += 2;
            }
            // sum over all nodes at step h = (sum at 2h) + (new odd nodes)
            total.add_scaled(&fresh, &Float::with_val(bits, 1u32));
            let value = total.scaled(&h);
            err = value.distance(&prev);
            prev = value;
            let scale = prev.magnitude().max(&Float::with_val(bits, 1u32)).clone();
            if level >= self.min_level && err <= Float::with_val(bits, tol * &scale) {
                converged = true;
                break;
            }
        }

        QuadResult {
            value: prev,
            err_estimate: err,
            evaluations,
            levels: level,
            converged,
        }
    }
}

/// Default tolerance: `10^-(digits - 10)`.
pub fn default_tolerance(prec: Precision) -> Float {
    prec.ten_pow_neg(prec.digits() as i32 - 10)
}

fn check(result: QuadResult<Float>, what: String) -> Result<QuadResult<Float>> {
    if result.converged {
        Ok(result)
    } else {
        Err(Error::Quadrature {
            what,
            best: result.value.to_string_radix(10, Some(20)),
            err: result.err_estimate.to_f64(),
        })
    }
}

/// `2 * int_0^1 (1 - x^s)^(-1/2) dx` without reporting failures as errors.
pub fn quad_i_raw(s: Fraction, prec: Precision) -> Result<QuadResult<Float>> {
    if s < Fraction::ONE {
        return Err(Error::domain("quad_I", s, "Re(s) >= 1 required"));
    }
    let bits = prec.bits();
    let exponent = Float::with_val(bits, &s.to_rational());
    let result = TanhSinh::default().integrate(prec, &default_tolerance(prec), |node| {
        // 1 - x^s = -expm1(s ln x)
        let arg = Float::with_val(bits, &exponent * node.ln_x());
        let one_minus = -arg.exp_m1();
        Float::with_val(bits, one_minus.recip_sqrt()) * 2u32
    });
    Ok(result)
}

/// The period `I_s` by quadrature of its defining integral.
pub fn quad_i(s: Fraction, prec: Precision) -> Result<QuadResult<Float>> {
    check(quad_i_raw(s, prec)?, format!("I_{s}"))
}

/// `I_{n/k} = 2k * int_0^1 x^(k-1) (1 - x^n)^(-1/2) dx`.
pub fn quad_i_nk(n: u64, k: u64, prec: Precision) -> Result<QuadResult<Float>> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::domain(
            "quad_I_nk",
            format!("({n}, {k})"),
            "requires 1 <= k <= n",
        ));
    }
    let bits = prec.bits();
    let n_f = Float::with_val(bits, n);
    let km1 = Float::with_val(bits, k - 1);
    let scale = Float::with_val(bits, 2 * k);
    let result = TanhSinh::default().integrate(prec, &default_tolerance(prec), |node| {
        let ln_x = node.ln_x();
        let one_minus = -Float::with_val(bits, &n_f * &ln_x).exp_m1();
        let power = Float::with_val(bits, &km1 * &ln_x).exp();
        power * Float::with_val(bits, one_minus.recip_sqrt()) * &scale
    });
    check(result, format!("I_({n}/{k})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn real(prec: Precision, q: &Rational) -> Float {
        Float::with_val(prec.bits(), q)
    }

    #[test]
    fn polynomial_and_endpoint_singularity() {
        let prec = Precision::new(40).unwrap();
        let tol = default_tolerance(prec);
        let r: QuadResult<Float> =
            TanhSinh::default().integrate(prec, &tol, |n| Float::with_val(200, n.x.square_ref()));
        assert!(r.converged);
        let third = real(prec, &Rational::from((1, 3)));
        assert!(Float::with_val(200, &r.value - &third).abs() < 1e-38);

        // int_0^1 (1 - x)^(-1/2) dx = 2
        let r: QuadResult<Float> =
            TanhSinh::default().integrate(prec, &tol, |n| n.complement.clone().recip_sqrt());
        assert!(r.converged);
        assert!(Float::with_val(200, &r.value - 2u32).abs() < 1e-38);
        assert!(r.err_estimate < 1e-30);
    }

    #[test]
    fn non_convergence_is_flagged() {
        let prec = Precision::new(40).unwrap();
        let tol = default_tolerance(prec);
        let cap = TanhSinh {
            max_level: 1,
            min_level: 1,
        };
        // ln singularity with a kink: not resolved in one level
        let r: QuadResult<Float> = cap.integrate(prec, &tol, |n| {
            let d = Float::with_val(200, &n.x - 0.3f64).abs();
            d.sqrt()
        });
        assert!(!r.converged);
        assert!(r.err_estimate > 0);
    }

    #[test]
    fn period_two_is_pi() {
        let prec = Precision::new(50).unwrap();
        let r = quad_i(Fraction::integer(2), prec).unwrap();
        let diff = Float::with_val(300, &r.value - prec.pi()).abs();
        assert!(diff < 1e-45, "{diff}");
        assert!(r.err_estimate < 1e-40);
    }

    #[test]
    fn domain_errors() {
        let prec = Precision::new(20).unwrap();
        assert!(quad_i(Fraction::HALF, prec).is_err());
        assert!(quad_i_nk(3, 4, prec).is_err());
        assert!(quad_i_nk(3, 0, prec).is_err());
    }
}
