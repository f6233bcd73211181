use crate::expr::ExprError;
use pga_core::PgaError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments, unparsable input, malformed scene.
    #[error("{0}")]
    Usage(String),
    /// Singular inertia, non-normalizable rotors and the like.
    #[error("{0}")]
    Numeric(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<PgaError> for CliError {
    fn from(e: PgaError) -> Self {
        match e {
            PgaError::SignatureMismatch(..)
            | PgaError::UnsupportedSignature(_)
            | PgaError::InvalidArgument(_) => CliError::Usage(e.to_string()),
            PgaError::NotNormalizable(_)
            | PgaError::Singular(_)
            | PgaError::NoAxis(_)
            | PgaError::Degenerate(_)
            | PgaError::UndefinedDistance(_) => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Algebra(p) => p.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}
