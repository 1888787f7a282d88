use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through the various report types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("search budget of {budget} visited states exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("sequence too short: need index {needed}, have {len}")]
    InsufficientLength { needed: usize, len: usize },

    #[error("divisor must be monic and nonzero")]
    NonMonicDivisor,

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("singular system")]
    Singular,

    #[error("solution is not integral")]
    NonIntegral,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
