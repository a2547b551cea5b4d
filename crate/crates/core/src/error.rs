//! Error type shared by all core modules.

use alloc::string::String;
use core::fmt;

/// Errors produced by parsing, validation and training.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated an operation's preconditions.
    InvalidArgument(String),
    /// A resource file (lexicon, rule file, manifest) failed to parse.
    /// `line` is 1-based.
    Parse { line: usize, message: String },
    /// Loaded data or a requested configuration failed validation.
    Validation(String),
    /// A rule set is incomplete or inconsistent.
    Config(String),
    /// Model training could not complete.
    Training(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Training(msg) => write!(f, "training error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
