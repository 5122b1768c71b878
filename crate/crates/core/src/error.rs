use thiserror::Error;

use crate::clifford::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("species mismatch: expected {expected:?}, found {found:?}")]
    SpeciesMismatch { expected: Family, found: Family },

    #[error("vector is not a weight vector: diagonal generator at index {index} does not act by a scalar")]
    NotAWeightVector { index: i64 },

    #[error("vector is not homogeneous: found dg values {first} and {second}")]
    NotHomogeneous { first: i64, second: i64 },

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, FockError>;

impl From<serde_json::Error> for FockError {
    fn from(err: serde_json::Error) -> Self {
        FockError::Json(err.to_string())
    }
}
