use thiserror::Error;

/// Errors shared across the pattern, series, matcher and certifier modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty pattern")]
    EmptyPattern,

    /// A pattern character that is not an ASCII letter, with its byte position.
    #[error("bad symbol at position {0}: variables must be ASCII letters")]
    BadSymbol(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("span out of range: [{start}, {end}) does not fit a word of length {len}")]
    OutOfRange { start: usize, end: usize, len: usize },

    #[error("series is not invertible: constant term must be 1 or -1")]
    NotInvertible,

    #[error("count series must have zero coefficients at orders 0 and 1")]
    BadCountSeries,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The enumeration search hit its node budget before finishing.
    #[error("search budget exceeded after {visited} nodes (budget {budget})")]
    BudgetExceeded { visited: u64, budget: u64 },

    #[error("invalid target alphabet size {0}: must be 2, 3 or 4")]
    InvalidTarget(u32),

    /// Two verification routes that must agree disagreed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
