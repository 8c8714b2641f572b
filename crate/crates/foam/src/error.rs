use thiserror::Error;

#[derive(Debug, Error)]
pub enum FoamError {
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(foam_core::Error),
    #[error("suite `{suite}` failed {failed} of {count} cases")]
    SuiteFailure { suite: String, failed: usize, count: usize },
}

impl From<foam_core::Error> for FoamError {
    fn from(e: foam_core::Error) -> FoamError {
        match e {
            foam_core::Error::InvariantViolation(m) => FoamError::InvariantViolation(m),
            e => FoamError::Core(e),
        }
    }
}

impl FoamError {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> FoamError {
        FoamError::Schema { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, FoamError>;
