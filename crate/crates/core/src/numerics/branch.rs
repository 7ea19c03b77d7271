//! Straight-line integrals between the branch points `1` and `zeta_n` of
//! `y^2 = 1 - x^n`, compared with `(1 - zeta_n) * int_0^1 dx / sqrt(1 - x^n)`.
//!
//! The principal square root is used along the whole segment with no sheet
//! tracking, so the comparison is reported as a ratio and phase rather than
//! asserted to be an identity.

use rug::Float;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::numerics::arb::{ArbComplex, Precision};
use crate::numerics::gamma::Spouge;
use crate::numerics::quad::{default_tolerance, QuadResult, TanhSinh};

fn check_n(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::domain("branch_integral", n, "requires n >= 2"));
    }
    Ok(())
}

/// `exp(2 pi i / n)`.
pub fn root_of_unity(n: u64, prec: Precision) -> ArbComplex {
    let theta = prec.pi() * 2u32 / n;
    ArbComplex::cis(&theta)
}

/// `int_1^zeta_n dx / sqrt(1 - x^n)` along `x(t) = 1 + t (zeta_n - 1)`.
///
/// Near `t = 0` the integrand is written through `u = t (zeta - 1)` and near
/// `t = 1` through `u = (1 - t)(conj(zeta) - 1)`, using `x^n = (1 + u)^n` in
/// both cases (`zeta^n = 1`). Then `1 - x^n = -expm1(n log1p(u))`, which keeps
/// full relative accuracy at both branch points.
pub fn branch_integral(n: u64, prec: Precision) -> Result<QuadResult<ArbComplex>> {
    check_n(n)?;
    let bits = prec.bits();
    let theta = prec.pi() * 2u32 / n;
    let (sin_t, _) = theta.clone().sin_cos(Float::new(bits));
    let half_sin = Float::with_val(bits, &theta / 2u32).sin();
    let s2 = Float::with_val(bits, half_sin.square_ref());
    let n_f = Float::with_val(bits, n);
    let one = ArbComplex::from_real(Float::with_val(bits, 1u32));

    let raw = TanhSinh::default().integrate(prec, &default_tolerance(prec), |node| {
        let (tau, rest, sign) = if node.x <= 0.5f64 {
            (&node.x, &node.complement, 1)
        } else {
            (&node.complement, &node.x, -1)
        };
        // |1 + u|^2 - 1 = -4 tau (1 - tau) sin^2(theta/2)
        let mod_arg = Float::with_val(bits, tau * rest) * &s2 * -4i32;
        let log_re = mod_arg.ln_1p() / 2u32;
        let im_u: Float = Float::with_val(bits, tau * &sin_t) * sign;
        let re_1u = 1u32 - Float::with_val(bits, tau * &s2) * 2u32;
        let log_im = im_u.atan2(&re_1u);
        let w = ArbComplex::new(log_re * &n_f, log_im * &n_f);
        let z = w.expm1().scale(&Float::with_val(bits, -1i32));
        one.div(&z.sqrt())
    });

    let zeta = root_of_unity(n, prec);
    let direction = zeta.sub(&one);
    Ok(QuadResult {
        value: raw.value.mul(&direction),
        err_estimate: raw.err_estimate * direction.abs(),
        evaluations: raw.evaluations,
        levels: raw.levels,
        converged: raw.converged,
    })
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub n: u64,
    pub lhs: ArbComplex,
    pub rhs: ArbComplex,
    pub ratio: ArbComplex,
    pub modulus: Float,
    /// Principal argument of the ratio, radians.
    pub phase: Float,
    pub err_estimate: Float,
    pub converged: bool,
}

/// `branch_integral(n) / ((1 - zeta_n) * I_n / 2)`.
pub fn symmetry_ratio(n: u64, prec: Precision) -> Result<SymmetryReport> {
    check_n(n)?;
    let lhs = branch_integral(n, prec)?;
    if !lhs.converged {
        return Err(Error::Quadrature {
            what: format!("branch integral n = {n}"),
            best: format!("{} + {}i", lhs.value.re.to_f64(), lhs.value.im.to_f64()),
            err: lhs.err_estimate.to_f64(),
        });
    }
    let bits = prec.bits();
    let half_period = Spouge::for_precision(prec).period_via_beta(Fraction::integer(n))? / 2u32;
    let one = ArbComplex::from_real(Float::with_val(bits, 1u32));
    let rhs = one.sub(&root_of_unity(n, prec)).scale(&half_period);
    let ratio = lhs.value.div(&rhs);
    Ok(SymmetryReport {
        n,
        modulus: ratio.abs(),
        phase: ratio.arg(),
        lhs: lhs.value,
        rhs,
        ratio,
        err_estimate: lhs.err_estimate,
        converged: lhs.converged,
    })
}
