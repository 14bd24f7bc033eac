use thiserror::Error;

/// Errors shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A text file did not parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The node budget of an exhaustive search ran out before it finished.
    #[error("node budget of {limit} exhausted{}", lower_bound.map(|b| format!(" (verified lower bound {b})")).unwrap_or_default())]
    BudgetExceeded { limit: u64, lower_bound: Option<u64> },

    /// An exact value would exceed the configured size guard.
    #[error("result too large: {0}")]
    TooLarge(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, message: msg.into() }
    }

    /// Attach a verified lower bound to a budget error that lacks one.
    pub fn with_lower_bound(self, bound: u64) -> Self {
        match self {
            Error::BudgetExceeded { limit, lower_bound } => Error::BudgetExceeded {
                limit,
                lower_bound: Some(lower_bound.map_or(bound, |b| b.max(bound))),
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
