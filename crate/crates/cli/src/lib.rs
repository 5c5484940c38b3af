//! Verification suites and spectrum runs behind the `dirosc` command, with a
//! versioned JSON report envelope.

pub mod clifford;
pub mod envelope;
pub mod gauge;
pub mod random;
pub mod spectrum;
pub mod symmetry;

pub use envelope::{exit_code, CheckResult, ReportEnvelope, Status, Summary};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or parameters; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    /// A computation that could not complete; exit code 1.
    #[error("failed: {0}")]
    Failure(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
