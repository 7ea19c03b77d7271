//! The three Gamma rewrite rules, each returning the factor it introduces.

use rug::Rational;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::symbolic::expr::{Atom, PeriodExpr};

/// `Gamma(x) = (x - 1) Gamma(x - 1)` for `1 < x < 2`.
///
/// Returns the coefficient `x - 1` as prime powers together with `x - 1`.
pub fn apply_recurrence(x: Fraction) -> Result<(PeriodExpr, Fraction)> {
    if x <= Fraction::ONE || x >= Fraction::integer(2) {
        return Err(Error::domain("apply_recurrence", x, "requires 1 < x < 2"));
    }
    let shifted = x.minus_one()?;
    Ok((PeriodExpr::from_fraction(shifted)?, shifted))
}

/// Squared duplication relation
/// `Gamma(x)^2 = (1/x) * I_{1/x} * 2^(-2x) * Gamma(2x)` for `0 < x < 1`.
///
/// Returns the coefficient and the (unreduced) argument `2x`.
pub fn apply_duplication(x: Fraction) -> Result<(PeriodExpr, Fraction)> {
    if !x.in_open_unit() {
        return Err(Error::domain("apply_duplication", x, "requires 0 < x < 1"));
    }
    let s = x.recip()?;
    let mut coef = PeriodExpr::from_fraction(s)?;
    coef.mul_assign(&PeriodExpr::atom(Atom::period(s)?, Rational::from(1)));
    let two_x = x.double()?;
    coef.mul_assign(&PeriodExpr::prime_power(2, -two_x.to_rational())?);
    Ok((coef, two_x))
}

/// `sin(pi r)` for `0 < r < 1`, folded into prime powers for denominators
/// 1, 2, 3, 4 and 6 and kept as an atom otherwise.
pub fn sin_pi_factor(r: Fraction) -> Result<PeriodExpr> {
    if !r.in_open_unit() {
        return Err(Error::domain("sin_pi", r, "argument must lie in (0, 1)"));
    }
    let half = Rational::from((1, 2));
    let folded = match r.den() {
        // sin(pi/2) = 1
        2 => PeriodExpr::one(),
        // sin(pi/3) = sin(2pi/3) = 3^(1/2) 2^(-1)
        3 => PeriodExpr::prime_power(3, half)?.mul(&PeriodExpr::from_ratio(1, 2)?),
        // sin(pi/4) = sin(3pi/4) = 2^(-1/2)
        4 => PeriodExpr::prime_power(2, -half)?,
        // sin(pi/6) = sin(5pi/6) = 2^(-1)
        6 => PeriodExpr::from_ratio(1, 2)?,
        _ => return Ok(PeriodExpr::atom(Atom::sin_pi(r)?, Rational::from(1))),
    };
    Ok(folded)
}

/// `Gamma(x) Gamma(1 - x) = pi / sin(pi x)` with `pi = I_2`.
pub fn apply_reflection(x: Fraction) -> Result<PeriodExpr> {
    if !x.in_open_unit() || x == Fraction::HALF {
        return Err(Error::domain(
            "apply_reflection",
            x,
            "requires 0 < x < 1 and x != 1/2",
        ));
    }
    let pi = PeriodExpr::atom(Atom::period(Fraction::integer(2))?, Rational::from(1));
    Ok(pi.mul(&sin_pi_factor(x)?.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn i_atom(n: u64, d: u64) -> Atom {
        Atom::I(f(n, d))
    }

    #[test]
    fn recurrence_examples() {
        let (c, next) = apply_recurrence(f(8, 7)).unwrap();
        assert_eq!(next, f(1, 7));
        assert_eq!(c, PeriodExpr::from_ratio(1, 7).unwrap());

        let (c, next) = apply_recurrence(f(3, 2)).unwrap();
        assert_eq!(next, f(1, 2));
        assert_eq!(c.prime_exponent(2), -1);

        let (c, next) = apply_recurrence(f(12, 7)).unwrap();
        assert_eq!(next, f(5, 7));
        assert_eq!(c.prime_exponent(5), 1);
        assert_eq!(c.prime_exponent(7), -1);

        assert!(apply_recurrence(Fraction::ONE).is_err());
        assert!(apply_recurrence(Fraction::integer(2)).is_err());
    }

    #[test]
    fn duplication_examples() {
        let (c, next) = apply_duplication(f(1, 3)).unwrap();
        assert_eq!(next, f(2, 3));
        assert_eq!(c.prime_exponent(3), 1);
        assert_eq!(c.prime_exponent(2), q(-2, 3));
        assert_eq!(c.atom_exponent(&i_atom(3, 1)), 1);

        let (c, next) = apply_duplication(Fraction::HALF).unwrap();
        assert!(next.is_one());
        assert_eq!(c, PeriodExpr::atom(i_atom(2, 1), q(1, 1)));

        let (c, next) = apply_duplication(f(2, 5)).unwrap();
        assert_eq!(next, f(4, 5));
        assert_eq!(c.prime_exponent(5), 1);
        assert_eq!(c.prime_exponent(2), q(-1, 1) + q(-4, 5));
        assert_eq!(c.atom_exponent(&i_atom(5, 2)), 1);

        assert!(apply_duplication(Fraction::ONE).is_err());
        assert!(apply_duplication(Fraction::integer(0)).is_err());
    }

    #[test]
    fn reflection_examples() {
        let r = apply_reflection(f(1, 3)).unwrap();
        assert_eq!(r.atom_exponent(&i_atom(2, 1)), 1);
        assert_eq!(r.prime_exponent(3), q(-1, 2));
        assert_eq!(r.prime_exponent(2), 1);

        let r = apply_reflection(f(1, 5)).unwrap();
        assert_eq!(r.atom_exponent(&Atom::SinPi(f(1, 5))), -1);
        assert_eq!(r.primes().count(), 0);

        let r = apply_reflection(f(2, 7)).unwrap();
        assert_eq!(r.atom_exponent(&Atom::SinPi(f(2, 7))), -1);

        // symmetric in x <-> 1 - x
        assert_eq!(
            apply_reflection(f(4, 5)).unwrap(),
            apply_reflection(f(1, 5)).unwrap()
        );
        assert_eq!(
            apply_reflection(f(3, 4)).unwrap(),
            apply_reflection(f(1, 4)).unwrap()
        );
        assert_eq!(apply_reflection(f(5, 6)).unwrap().prime_exponent(2), 1);

        assert!(apply_reflection(Fraction::HALF).is_err());
        assert!(apply_reflection(Fraction::ONE).is_err());
        assert!(apply_reflection(Fraction::integer(0)).is_err());
    }
}
