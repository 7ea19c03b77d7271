//! Canonical products of prime powers and period atoms with rational exponents.

use std::collections::BTreeMap;

use rug::Rational;

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// A transcendental (or unresolved) factor.
///
/// Ordering is by variant (`I`, then `SinPi`, then `Gamma`) and then by the
/// value of the argument, which fixes the canonical rendering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// The period `I_s = 2 * int_0^1 (1 - x^s)^(-1/2) dx`, `s >= 1`.
    I(Fraction),
    /// `sin(pi r)` for `0 < r <= 1/2` whose denominator is not in {1, 2, 3, 4, 6}.
    SinPi(Fraction),
    /// An unresolved `Gamma(r)`, `r > 0`.
    Gamma(Fraction),
}

/// Denominators whose sines fold into prime powers.
pub const FOLDED_SINE_DENOMINATORS: [u64; 5] = [1, 2, 3, 4, 6];

impl Atom {
    pub fn period(s: Fraction) -> Result<Self> {
        if s < Fraction::ONE {
            return Err(Error::domain("I", s, "index must satisfy s >= 1"));
        }
        Ok(Atom::I(s))
    }

    /// `sin(pi r)`, stored with `r` replaced by `min(r, 1 - r)`.
    pub fn sin_pi(r: Fraction) -> Result<Self> {
        if !r.in_open_unit() {
            return Err(Error::domain("sin_pi", r, "argument must lie in (0, 1)"));
        }
        if FOLDED_SINE_DENOMINATORS.contains(&r.den()) {
            return Err(Error::domain(
                "sin_pi",
                r,
                "sines with denominator 1, 2, 3, 4 or 6 must be folded into prime powers",
            ));
        }
        Ok(Atom::SinPi(r.min(r.one_minus()?)))
    }

    pub fn gamma(r: Fraction) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::domain("Gamma", r, "argument must be positive"));
        }
        Ok(Atom::Gamma(r))
    }

    pub fn arg(&self) -> Fraction {
        match *self {
            Atom::I(s) | Atom::SinPi(s) | Atom::Gamma(s) => s,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Atom::I(_) => "I",
            Atom::SinPi(_) => "sinpi",
            Atom::Gamma(_) => "gamma",
        }
    }
}

/// `prod p^{e_p} * prod atom^{e_a}` with rational exponents.
///
/// Canonical by construction: zero exponents are never stored, prime keys are
/// prime, atom arguments are reduced. Structural equality is therefore
/// equality of the represented products.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PeriodExpr {
    primes: BTreeMap<u64, Rational>,
    atoms: BTreeMap<Atom, Rational>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial-division factorization; `factorize(1)` is empty.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut k = 0;
        while n.is_multiple_of(d) {
            n /= d;
            k += 1;
        }
        if k > 0 {
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn add_into<K: Ord + Copy>(map: &mut BTreeMap<K, Rational>, key: K, e: &Rational) {
    if *e == 0 {
        return;
    }
    let entry = map.entry(key).or_default();
    *entry += e;
    if *entry == 0 {
        map.remove(&key);
    }
}

impl PeriodExpr {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.primes.is_empty() && self.atoms.is_empty()
    }

    /// The positive rational `num/den` as a product of prime powers.
    pub fn from_ratio(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::domain(
                "from_ratio",
                format!("{num}/{den}"),
                "only positive rationals factor into prime powers",
            ));
        }
        let mut out = Self::one();
        for (p, k) in factorize(num) {
            add_into(&mut out.primes, p, &Rational::from(k));
        }
        for (p, k) in factorize(den) {
            add_into(&mut out.primes, p, &Rational::from(-i64::from(k)));
        }
        Ok(out)
    }

    pub fn from_fraction(x: Fraction) -> Result<Self> {
        Self::from_ratio(x.num(), x.den())
    }

    pub fn prime_power(p: u64, e: Rational) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain("prime_power", p, "base must be prime"));
        }
        let mut out = Self::one();
        add_into(&mut out.primes, p, &e);
        Ok(out)
    }

    pub fn atom(a: Atom, e: Rational) -> Self {
        let mut out = Self::one();
        add_into(&mut out.atoms, a, &e);
        out
    }

    pub fn primes(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.primes.iter().map(|(p, e)| (*p, e))
    }

    pub fn atoms(&self) -> impl Iterator<Item = (Atom, &Rational)> {
        self.atoms.iter().map(|(a, e)| (*a, e))
    }

    pub fn prime_exponent(&self, p: u64) -> Rational {
        self.primes.get(&p).cloned().unwrap_or_default()
    }

    pub fn atom_exponent(&self, a: &Atom) -> Rational {
        self.atoms.get(a).cloned().unwrap_or_default()
    }

    /// Exponent-wise sum.
    pub fn mul(&self, other: &PeriodExpr) -> PeriodExpr {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &PeriodExpr) {
        for (p, e) in &other.primes {
            add_into(&mut self.primes, *p, e);
        }
        for (a, e) in &other.atoms {
            add_into(&mut self.atoms, *a, e);
        }
    }

    /// Scales every exponent by `e`; `e = 0` gives the empty product.
    pub fn pow(&self, e: &Rational) -> PeriodExpr {
        if *e == 0 {
            return Self::one();
        }
        fn scale<K: Ord + Copy>(m: &BTreeMap<K, Rational>, e: &Rational) -> BTreeMap<K, Rational> {
            m.iter().map(|(k, v)| (*k, Rational::from(v * e))).collect()
        }
        PeriodExpr {
            primes: scale(&self.primes, e),
            atoms: scale(&self.atoms, e),
        }
    }

    pub fn recip(&self) -> PeriodExpr {
        self.pow(&Rational::from(-1))
    }

    /// Removes `a` from the product, returning its exponent (0 if absent).
    pub fn take_atom(&mut self, a: &Atom) -> Rational {
        self.atoms.remove(a).unwrap_or_default()
    }

    /// Replaces `Gamma(r)^e` with `replacement^e`.
    pub fn substitute_gamma(&self, r: Fraction, replacement: &PeriodExpr) -> PeriodExpr {
        let mut out = self.clone();
        let e = out.take_atom(&Atom::Gamma(r));
        if e != 0 {
            out.mul_assign(&replacement.pow(&e));
        }
        out
    }

    pub fn gamma_atoms(&self) -> impl Iterator<Item = (Fraction, &Rational)> {
        self.atoms.iter().filter_map(|(a, e)| match a {
            Atom::Gamma(r) => Some((*r, e)),
            _ => None,
        })
    }

    pub fn has_gamma(&self) -> bool {
        self.gamma_atoms().next().is_some()
    }

    /// The period indices `s` of the `I_s` factors, ascending.
    pub fn period_indices(&self) -> Vec<Fraction> {
        self.atoms
            .keys()
            .filter_map(|a| match a {
                Atom::I(s) => Some(*s),
                _ => None,
            })
            .collect()
    }
}

impl std::ops::Mul for &PeriodExpr {
    type Output = PeriodExpr;

    fn mul(self, rhs: &PeriodExpr) -> PeriodExpr {
        PeriodExpr::mul(self, rhs)
    }
}
