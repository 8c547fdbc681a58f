use thiserror::Error;

use crate::dsl::Diagnostic;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    Parse(Diagnostic),
    #[error("representation error: {0}")]
    Representation(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
