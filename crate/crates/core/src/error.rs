use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape error: expected {expected}, got {actual}")]
    Shape { expected: String, actual: String },

    /// A count or allocation exceeded the configured limit.
    #[error("capacity error: {what} requires {requested} components, cap is {cap}")]
    Capacity {
        what: String,
        requested: String,
        cap: usize,
    },

    #[error("singular system: det(A) = {det}")]
    Singular { det: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An identity the library relies on did not hold. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn shape(expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Error::Shape {
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}
