//! Library behind the `ramsey-lab` binary: pattern-spec parsing, command
//! implementations, the theorem sweep, and the reproducibility manifest.

pub mod commands;
pub mod manifest;
pub mod spec;
pub mod sweep;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// Process exit code: 0 success, 2 budget exceeded, 3 invalid input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 2,
            CliError::InvalidInput(_) => 3,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
