use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point outside the closed polydisc: coordinate {index} has modulus {modulus}")]
    Domain { index: usize, modulus: f64 },

    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid symbol at {field}: {message}")]
    InvalidSymbol { field: String, message: String },

    #[error("unsupported multiplicity: {0}")]
    UnsupportedMultiplicity(String),

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("kernel basis is ill-conditioned (condition number {0:e})")]
    IllConditioned(f64),

    #[error("symbols are not separated: {0}")]
    NotSeparated(String),

    #[error("operators live on different truncation bases")]
    BasisMismatch,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("basis of size {size} exceeds the limit of {limit}")]
    ResourceLimit { size: usize, limit: usize },

    #[error("linear algebra failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidSymbol {
            field: field.into(),
            message: message.into(),
        }
    }
}
