use std::fmt::Display;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}:{location}: {message}")]
    Parse {
        path: String,
        location: String,
        message: String,
    },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("{0} law violation(s)")]
    LawViolation(usize),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub(crate) fn invalid(e: impl Display) -> CliError {
    CliError::Validation(e.to_string())
}

pub(crate) fn rejected(msg: impl Into<String>) -> CliError {
    CliError::Certificate(msg.into())
}
