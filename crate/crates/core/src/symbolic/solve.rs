//! Eliminates Gamma atoms along a minimal chain to obtain a closed form.

use rug::{Integer, Rational};

use crate::chains::{minimal_chain_from, Chain, ChainStep, Closure, StepKind};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::symbolic::expr::{Atom, PeriodExpr};
use crate::symbolic::render;
use crate::symbolic::rules::{apply_duplication, apply_recurrence, apply_reflection};

/// `Gamma(arg)^exponent = expr`, with `expr` free of Gamma atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub arg: Fraction,
    pub exponent: Integer,
    pub expr: PeriodExpr,
}

impl ClosedForm {
    /// The same identity raised to `Gamma(arg)^n`, e.g. `n = q` for the
    /// period statement about `Gamma(p/q)^q`.
    pub fn with_exponent(&self, n: Integer) -> Result<ClosedForm> {
        if n <= 0 {
            return Err(Error::domain(
                "with_exponent",
                n,
                "exponent must be positive",
            ));
        }
        let scale = Rational::from((n.clone(), self.exponent.clone()));
        Ok(ClosedForm {
            arg: self.arg,
            exponent: n,
            expr: self.expr.pow(&scale),
        })
    }
}

/// `Gamma(lhs_arg)^lhs_exp = rhs`, where `rhs` may still hold Gamma atoms.
#[derive(Clone, Debug)]
struct Relation {
    lhs_arg: Fraction,
    lhs_exp: Integer,
    rhs: PeriodExpr,
}

fn gamma(r: Fraction, e: i64) -> Result<PeriodExpr> {
    Ok(PeriodExpr::atom(Atom::gamma(r)?, Rational::from(e)))
}

impl Relation {
    fn identity(x: Fraction) -> Result<Self> {
        Ok(Relation {
            lhs_arg: x,
            lhs_exp: Integer::from(1),
            rhs: gamma(x, 1)?,
        })
    }

    fn apply(&mut self, step: &ChainStep) -> Result<()> {
        match step.kind {
            StepKind::Double => {
                let (coef, doubled) = apply_duplication(step.at)?;
                self.lhs_exp *= 2;
                self.rhs = self.rhs.pow(&Rational::from(2));
                // Gamma(x)^2 -> coef * Gamma(2x)
                let root = coef.mul(&gamma(doubled, 1)?).pow(&Rational::from((1, 2)));
                self.rhs = self.rhs.substitute_gamma(step.at, &root);
            }
            StepKind::ReduceMod => {
                let (coef, shifted) = apply_recurrence(step.at)?;
                self.rhs = self
                    .rhs
                    .substitute_gamma(step.at, &coef.mul(&gamma(shifted, 1)?));
            }
            StepKind::Reflect => {
                let partner = step.at.one_minus()?;
                let repl = apply_reflection(step.at)?.mul(&gamma(partner, -1)?);
                self.rhs = self.rhs.substitute_gamma(step.at, &repl);
            }
        }
        Ok(())
    }
}

fn ensure_resolved(expr: &PeriodExpr) -> Result<()> {
    if expr.has_gamma() {
        return Err(Error::UnresolvedGamma(render::to_canonical_string(expr)));
    }
    Ok(())
}

/// Closed form for `Gamma(p/q)`; `p/q` is reduced first and must lie in `(0, 1]`.
pub fn solve_closed_form(p: u64, q: u64) -> Result<ClosedForm> {
    if q == 0 || p == 0 || p > q {
        return Err(Error::domain(
            "solve_closed_form",
            format!("{p}/{q}"),
            "requires 1 <= p <= q",
        ));
    }
    solve_fraction(Fraction::new(p, q)?)
}

/// Closed form for `Gamma(x)`, `0 < x <= 1`.
///
/// Arguments on the doubling cycle close directly: `E = 2^m - 1` for a plain
/// return and `E = 2^m + 1` when the chain closes through reflection.
/// Arguments before the cycle (even denominators) use a single duplication
/// step, `Gamma(x)^2 = D * Gamma(x_1)`, with the closed form of `x_1`
/// substituted, so `E = 2`.
pub fn solve_fraction(x: Fraction) -> Result<ClosedForm> {
    if x.is_one() {
        return Ok(ClosedForm {
            arg: x,
            exponent: Integer::from(1),
            expr: PeriodExpr::one(),
        });
    }
    let chain = minimal_chain_from(x)?;
    let on_cycle = chain.closure != Closure::TerminatesAtOne && chain.reentry_index == 0;
    if on_cycle {
        solve_cycle(&chain)
    } else {
        solve_preperiodic(&chain)
    }
}

fn solve_cycle(chain: &Chain) -> Result<ClosedForm> {
    let mut rel = Relation::identity(chain.start)?;
    for step in &chain.steps {
        rel.apply(step)?;
    }
    let returned = rel.rhs.take_atom(&Atom::Gamma(chain.start));
    if !returned.is_integer() {
        return Err(Error::Internal(format!(
            "non-integral Gamma({}) exponent {returned} after closing",
            chain.start
        )));
    }
    let exponent = rel.lhs_exp - returned.numer();
    if exponent <= 0 {
        return Err(Error::Internal(format!(
            "closing Gamma({}) left exponent {exponent}",
            chain.start
        )));
    }
    ensure_resolved(&rel.rhs)?;
    Ok(ClosedForm {
        arg: rel.lhs_arg,
        exponent,
        expr: rel.rhs,
    })
}

fn solve_preperiodic(chain: &Chain) -> Result<ClosedForm> {
    let mut rel = Relation::identity(chain.start)?;
    let mut next = chain.start;
    for (i, step) in chain.steps.iter().enumerate() {
        if step.kind == StepKind::Double && i > 0 {
            break;
        }
        rel.apply(step)?;
        next = step.result()?;
    }
    let inner = solve_fraction(next)?;
    let root = inner.expr.pow(&Rational::from((1, inner.exponent)));
    let expr = rel.rhs.substitute_gamma(next, &root);
    ensure_resolved(&expr)?;
    Ok(ClosedForm {
        arg: rel.lhs_arg,
        exponent: rel.lhs_exp,
        expr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn i(n: u64, d: u64) -> Atom {
        Atom::I(Fraction::new(n, d).unwrap())
    }

    #[test]
    fn half() {
        let cf = solve_closed_form(1, 2).unwrap();
        assert_eq!(cf.exponent, 2);
        assert_eq!(cf.expr, PeriodExpr::atom(i(2, 1), q(1, 1)));
    }

    #[test]
    fn one() {
        let cf = solve_closed_form(1, 1).unwrap();
        assert_eq!(cf.exponent, 1);
        assert!(cf.expr.is_one());
    }

    #[test]
    fn third() {
        let cf = solve_closed_form(1, 3).unwrap();
        assert_eq!(cf.exponent, 3);
        assert_eq!(cf.expr.prime_exponent(2), q(1, 3));
        assert_eq!(cf.expr.prime_exponent(3), q(1, 2));
        assert_eq!(cf.expr.atom_exponent(&i(2, 1)), 1);
        assert_eq!(cf.expr.atom_exponent(&i(3, 1)), 1);
        assert_eq!(cf.expr.primes().count() + cf.expr.atoms().count(), 4);
    }

    #[test]
    fn fifth() {
        let cf = solve_closed_form(1, 5).unwrap();
        assert_eq!(cf.exponent, 5);
        let e = &cf.expr;
        assert_eq!(e.prime_exponent(5), 3);
        assert_eq!(e.prime_exponent(2), q(-13, 5));
        assert_eq!(e.atom_exponent(&i(2, 1)), 1);
        assert_eq!(e.atom_exponent(&i(5, 1)), 2);
        assert_eq!(e.atom_exponent(&i(5, 2)), 1);
        assert_eq!(
            e.atom_exponent(&Atom::SinPi(Fraction::new(1, 5).unwrap())),
            -1
        );
        assert_eq!(e.primes().count() + e.atoms().count(), 6);
    }

    #[test]
    fn seventh() {
        let cf = solve_closed_form(1, 7).unwrap();
        assert_eq!(cf.exponent, 7);
        let e = &cf.expr;
        assert_eq!(e.prime_exponent(7), 6);
        assert_eq!(e.prime_exponent(2), q(-52, 7));
        assert_eq!(e.atom_exponent(&i(7, 1)), 4);
        assert_eq!(e.atom_exponent(&i(7, 2)), 2);
        assert_eq!(e.atom_exponent(&i(7, 4)), 1);
        assert_eq!(e.primes().count() + e.atoms().count(), 5);
    }

    #[test]
    fn quarter() {
        let cf = solve_closed_form(1, 4).unwrap();
        assert_eq!(cf.exponent, 2);
        assert_eq!(cf.expr.prime_exponent(2), q(3, 2));
        assert_eq!(cf.expr.atom_exponent(&i(4, 1)), 1);
        assert_eq!(cf.expr.atom_exponent(&i(2, 1)), q(1, 2));
        assert_eq!(cf.expr.primes().count() + cf.expr.atoms().count(), 3);
    }

    #[test]
    fn sixth_uses_third() {
        // Gamma(1/6)^2 = 6 I_6 2^(-1/3) Gamma(1/3)
        let cf = solve_closed_form(1, 6).unwrap();
        assert_eq!(cf.exponent, 2);
        let third = solve_closed_form(1, 3).unwrap();
        let expected = PeriodExpr::from_ratio(6, 1)
            .unwrap()
            .mul(&PeriodExpr::atom(i(6, 1), q(1, 1)))
            .mul(&PeriodExpr::prime_power(2, q(-1, 3)).unwrap())
            .mul(&third.expr.pow(&q(1, 3)));
        assert_eq!(cf.expr, expected);
    }

    #[test]
    fn non_reduced_and_invalid_input() {
        assert_eq!(
            solve_closed_form(2, 10).unwrap(),
            solve_closed_form(1, 5).unwrap()
        );
        assert!(solve_closed_form(0, 3).is_err());
        assert!(solve_closed_form(4, 3).is_err());
    }

    #[test]
    fn odd_exponent_matches_order() {
        for (p, qq, e) in [
            (1u64, 9u64, 9),
            (1, 11, 33),
            (2, 7, 7),
            (1, 13, 65),
            (1, 17, 17),
        ] {
            assert_eq!(solve_closed_form(p, qq).unwrap().exponent, e, "{p}/{qq}");
        }
    }

    #[test]
    fn rescale_to_q() {
        let cf = solve_closed_form(1, 4)
            .unwrap()
            .with_exponent(Integer::from(4))
            .unwrap();
        assert_eq!(cf.expr.prime_exponent(2), 3);
        assert_eq!(cf.expr.atom_exponent(&i(4, 1)), 2);
        assert_eq!(cf.expr.atom_exponent(&i(2, 1)), 1);
    }
}
