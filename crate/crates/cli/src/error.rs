use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Code(#[from] kroncode::Error),

    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    /// 1 = usage/IO, 2 = verification mismatch, 3 = budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Code(kroncode::Error::BudgetExceeded { .. }) => 3,
            CliError::Mismatch(_) => 2,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
