use std::fmt;

/// Process exit codes. These are part of the command-line contract.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISAGREEMENT: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const INTERNAL: i32 = 70;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Data(_) => exit::DATA,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Data(msg) => write!(f, "data error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

/// Library errors raised while handling user-supplied parameters.
pub fn from_param(e: critgroup::Error) -> CliError {
    match e {
        critgroup::Error::InvalidArgument(msg) => CliError::Usage(msg),
        critgroup::Error::InternalConsistency(msg) => CliError::Internal(msg),
        other => CliError::Data(other.to_string()),
    }
}

/// Library errors raised while handling file contents.
pub fn from_data(e: critgroup::Error) -> CliError {
    match e {
        critgroup::Error::InternalConsistency(msg) => CliError::Internal(msg),
        other => CliError::Data(other.to_string()),
    }
}

pub type CliResult<T> = Result<T, CliError>;
