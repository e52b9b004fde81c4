use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("hyperplane index {index} out of range for arrangement of {len} hyperplanes")]
    IndexOutOfRange { index: usize, len: usize },

    /// A derivation that was assumed logarithmic failed the divisibility test.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// The expanded K-polynomial has a nonzero part below the expected codimension.
    #[error("codimension mismatch: nonzero part in degree {degree} below codimension {codim}")]
    CodimensionMismatch { degree: u32, codim: u32 },

    #[error("resource guard: {0}")]
    ResourceLimit(String),

    #[error("arrangement is not free: {0}")]
    NotFree(String),

    #[error("expected {expected} generators, got {got}")]
    WrongCardinality { expected: usize, got: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { context: context.into(), message: message.into() }
    }
}
