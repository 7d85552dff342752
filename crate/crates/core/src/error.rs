use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("genus truncated at degree {truncation}, cannot evaluate in dimension {requested}")]
    TruncationExceeded { truncation: usize, requested: usize },

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The functional is a combination of the chi_p; `certificate` holds the
    /// coefficients on chi_0, ..., chi_{n/2}.
    #[error("functional lies in the span of the chi_p")]
    MemberOfChiSpan { certificate: Vec<Rational> },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
