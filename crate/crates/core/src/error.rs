use symbolic::SymbolicError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),
    #[error("algebra is not fundamental: {0}")]
    NotFundamental(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("exceptional case: {0}")]
    Exceptional(String),
    #[error("potential search failed up to degree {bound}: {message}")]
    PotentialBound { bound: u32, message: String },
    #[error("no generic point found after {attempts} attempts: {message}")]
    Degenerate { attempts: usize, message: String },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

pub type Result<T> = std::result::Result<T, CoreError>;

pub(crate) fn invalid(msg: impl Into<String>) -> CoreError {
    CoreError::InvalidInput(msg.into())
}
