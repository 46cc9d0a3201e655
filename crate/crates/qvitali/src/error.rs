//! Crate-wide error type.

/// Errors raised by the deformed operations, the measure, and the
/// expression front end.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An operand hit the excluded value of a q-operation,
    /// i.e. `1 + (1-q) * operand = 0`.
    #[error("singular operand: 1 + (1-q)*({operand}) = 0")]
    SingularOperand { operand: String },

    /// Input outside the domain of the operation (e.g. below the domain
    /// boundary `lambda = -1/(1-q)`, or a nonpositive argument to `qlog`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller-facing precondition was violated.
    #[error("precondition violation: {0}")]
    Precondition(String),

    /// Exact evaluation requested for an expression that only has a
    /// floating-point meaning (`o*`, `o/`, or a function call).
    #[error("exact mode cannot evaluate {0}")]
    Mode(String),

    /// Tokenizer rejected the input.
    #[error("lex error: {message} (column {column})")]
    Lex { column: usize, message: String },

    /// Parser rejected the token stream.
    #[error("parse error: {message} (column {column})")]
    Parse { column: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
