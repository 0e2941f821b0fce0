use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("value outside the configured field: {0}")]
    FieldViolation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("the zero matrix has no full rank factorization")]
    ZeroMatrix,

    #[error("matrix is rank deficient: {0}")]
    RankDeficient(String),

    #[error("invalid spec field `{field}`: {reason}")]
    SpecViolation { field: String, reason: String },

    #[error("closed form applies to case {expected}, but the spec is {actual}")]
    WrongCase { expected: String, actual: String },

    #[error("hypothesis violated: x_i^T y_i != 0 for stars {0:?}")]
    HypothesisViolated(Vec<usize>),

    #[error("target case unreachable: {0}")]
    UnreachableCase(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn spec(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::SpecViolation {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
