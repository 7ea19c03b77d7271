//! Closed forms for `Gamma(p/q)` as products of the periods
//! `I_s = 2 int_0^1 (1 - x^s)^(-1/2) dx = (2/s) B(1/s, 1/2)`, prime powers with
//! rational exponents and `sin(pi r)` factors, obtained by following the
//! doubling dynamics of `p/q` until it closes, plus high-precision numerics to
//! check each identity.

pub mod chains;
pub mod cli;
pub mod error;
pub mod fraction;
pub mod geometry;
pub mod numerics;
pub mod symbolic;

pub use error::{Error, Result};
pub use fraction::Fraction;
