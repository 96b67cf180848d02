//! Command-line front end: group-expression parsing, family-aware
//! element literals, report serialization, and command dispatch.

pub mod app;
pub mod elem;
pub mod expr;
pub mod output;

use std::fmt;

/// CLI-level errors. Exit-code mapping: claim failures are not errors
/// (the commands report them and exit 1); everything here exits 2.
#[derive(Debug)]
pub enum CliError {
    Parse { offset: usize, msg: String },
    Semantic { offset: usize, msg: String },
    Core(classprod::Error),
    Io(std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { offset, msg } => {
                write!(f, "syntax error at byte {offset}: {msg}")
            }
            CliError::Semantic { offset, msg } => {
                write!(f, "semantic error at byte {offset}: {msg}")
            }
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<classprod::Error> for CliError {
    fn from(e: classprod::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
