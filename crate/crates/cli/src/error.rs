use std::fmt;

/// CLI failures, bucketed by exit code: 2 for unreadable or malformed
/// input, 3 for well-formed input that fails validation, 4 for aborts on
/// resource caps.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation(String),
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Validation(msg) => write!(f, "validation error: {msg}"),
            CliError::Cap(msg) => write!(f, "resource cap: {msg}"),
        }
    }
}

impl From<tolrel::Error> for CliError {
    fn from(e: tolrel::Error) -> CliError {
        match e {
            tolrel::Error::BlockCapExceeded { .. }
            | tolrel::Error::SearchCapExceeded { .. }
            | tolrel::Error::UniverseTooLarge { .. } => CliError::Cap(e.to_string()),
            tolrel::Error::UnknownSuite(_) => CliError::Parse(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}
