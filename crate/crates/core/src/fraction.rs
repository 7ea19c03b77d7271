//! Exact non-negative rationals used as Gamma arguments and period indices.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rug::Rational;

use crate::error::{Error, Result};

/// A non-negative rational `num/den`, always stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };
    pub const HALF: Fraction = Fraction { num: 1, den: 2 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidFraction(format!(
                "{num}/0 has a zero denominator"
            )));
        }
        let g = gcd(num, den).max(1);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// `0 < self < 1`
    pub fn in_open_unit(&self) -> bool {
        self.num > 0 && self.num < self.den
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num == 0 {
            return Err(Error::domain("recip", self, "zero has no reciprocal"));
        }
        Ok(Fraction {
            num: self.den,
            den: self.num,
        })
    }

    pub fn double(&self) -> Result<Self> {
        let num = self.num.checked_mul(2).ok_or(Error::Overflow(*self))?;
        Fraction::new(num, self.den)
    }

    /// `self - 1`, defined for `self >= 1`.
    pub fn minus_one(&self) -> Result<Self> {
        if self.num < self.den {
            return Err(Error::domain("minus_one", self, "value below 1"));
        }
        Ok(Fraction {
            num: self.num - self.den,
            den: self.den,
        })
    }

    /// `1 - self`, defined for `self <= 1`.
    pub fn one_minus(&self) -> Result<Self> {
        if self.num > self.den {
            return Err(Error::domain("one_minus", self, "value above 1"));
        }
        Fraction::new(self.den - self.num, self.den)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from((self.num, self.den))
    }

    /// Always `num/den`, including integers (`2/1`).
    pub fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn parse_u64(s: &str, whole: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidFraction(format!("cannot parse {whole:?}")))
}

/// Accepts `p/q` (whitespace allowed around both parts), a bare integer, or a
/// terminating decimal such as `0.5`.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::InvalidFraction("empty input".into()));
        }
        if let Some((n, d)) = t.split_once('/') {
            return Fraction::new(parse_u64(n, s)?, parse_u64(d, s)?);
        }
        if let Some((int, frac)) = t.split_once('.') {
            if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::InvalidFraction(format!("cannot parse {s:?}")));
            }
            let int = if int.is_empty() {
                0
            } else {
                parse_u64(int, s)?
            };
            let scale = 10u64.pow(frac.len() as u32);
            let frac_val = if frac.is_empty() {
                0
            } else {
                parse_u64(frac, s)?
            };
            let num = int
                .checked_mul(scale)
                .and_then(|v| v.checked_add(frac_val))
                .ok_or_else(|| Error::InvalidFraction(format!("{s:?} is too large")))?;
            return Fraction::new(num, scale);
        }
        Ok(Fraction::integer(parse_u64(t, s)?))
    }
}
