use crate::algebra::Signature;
use thiserror::Error;

/// Errors raised by the algebra, geometry and dynamics layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PgaError {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("unsupported signature: {0}")]
    UnsupportedSignature(String),
    #[error("not normalizable: {0}")]
    NotNormalizable(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("no axis: {0}")]
    NoAxis(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("undefined distance: {0}")]
    UndefinedDistance(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, PgaError>;
