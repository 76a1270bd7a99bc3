use serde_json::{json, Value};
use thiserror::Error;

/// Every way a command can refuse its input. All of them exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Validation(herbrand::Error),

    #[error("{0}")]
    Invalid(herbrand::Error),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "PARSE_ERROR",
            CliError::Validation(_) => "VALIDATION_ERROR",
            CliError::Invalid(e) => e.code(),
            CliError::Io { .. } => "IO_ERROR",
            CliError::Usage(_) => "USAGE_ERROR",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut body = json!({
            "code": self.code(),
            "message": self.to_string(),
        });
        match self {
            CliError::Parse { line, column, .. } => {
                body["line"] = json!(line);
                body["column"] = json!(column);
            }
            CliError::Validation(e) => body["cause"] = json!(e.code()),
            _ => {}
        }
        json!({ "error": body })
    }
}

impl From<herbrand::Error> for CliError {
    fn from(e: herbrand::Error) -> Self {
        CliError::Invalid(e)
    }
}
