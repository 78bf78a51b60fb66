use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("zero vector where a direction is required")]
    ZeroVector,

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("radicands differ: √{left} and √{right} cannot be added")]
    RadicandMismatch { left: String, right: String },

    #[error("invalid radicand {0}: must be positive")]
    InvalidRadicand(String),

    #[error("expected {expected} bodies, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("body {index} is not contained in a translate of the subspace")]
    NotContained { index: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("background construction failed after {attempts} attempts: {reason}")]
    RetryExhausted { attempts: usize, reason: String },

    #[error("linear system has no solution (residual {residual})")]
    Unsolvable { residual: String },

    #[error("parse error: {0}")]
    Parse(String),

    /// A mathematical invariant failed. This indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
