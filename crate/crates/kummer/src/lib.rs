//! File formats and the command line front end for `kummer-core`.

pub mod cli;
pub mod formats;
pub mod tsv;

use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kummer_core::Error),
    #[error("{0}")]
    Format(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: invalid JSON: {message}")]
    Json { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Stable identifier, shared with the core error codes.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Format(_) => "FormatError",
            CliError::Io { .. } => "IoError",
            CliError::Json { .. } => "JsonError",
            CliError::Usage(_) => "UsageError",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code(), "message": self.to_string() } })
    }
}
