use std::io;
use std::process::ExitCode;

use hexchain_core::Error as CoreError;
use thiserror::Error;

/// Failures of a subcommand, each mapped to a stable exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unparsable codes, or arithmetic outside the 64-bit range.
    #[error("{0}")]
    Input(String),

    /// Methods disagree or an invariant failed.
    #[error("{0}")]
    Check(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    /// Request exceeds the exhaustive enumeration limit.
    #[error("{0}")]
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 3,
            CliError::Io(_) => 4,
            CliError::Limit(_) => 5,
        })
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::LimitExceeded { .. } => {
                CliError::Limit(format!("{e}; set HEXCHAIN_MAX_N to raise the limit"))
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Io(io::Error::other(format!("{other:?}"))),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
