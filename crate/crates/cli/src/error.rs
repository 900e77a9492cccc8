use thiserror::Error;

/// Failures surfaced by the command line, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// The input could not be read, parsed or validated.
    #[error("{0}")]
    Invalid(String),
    /// A query, derived entity or figure hit a math-domain error such as a
    /// non-invertible operand. `context` names the failing item.
    #[error("{context}: {source}")]
    Domain { context: String, source: elpga::Error },
    /// A computed figure failed its own consistency check.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Domain { .. } | CliError::Check(_) => 2,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
