use thiserror::Error;

use crate::fraction::Fraction;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid fraction: {0}")]
    InvalidFraction(String),

    #[error("argument {arg} outside the domain of {op}: {reason}")]
    Domain {
        op: &'static str,
        arg: String,
        reason: &'static str,
    },

    #[error("arithmetic overflow while doubling {0}")]
    Overflow(Fraction),

    #[error("chain from {start} did not close within {cap} steps")]
    ChainCap { start: Fraction, cap: u64 },

    #[error("internal consistency: {0}")]
    Internal(String),

    #[error("expression still contains Gamma atoms: {0}")]
    UnresolvedGamma(String),

    #[error("quadrature for {what} did not converge (best {best}, level difference {err:e})")]
    Quadrature {
        what: String,
        best: String,
        err: f64,
    },

    #[error("malformed expression JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, arg: impl ToString, reason: &'static str) -> Self {
        Error::Domain {
            op,
            arg: arg.to_string(),
            reason,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
