//! Command implementations behind the `nullcert` binary. Every command
//! writes to a caller-supplied sink so the output can be captured in tests.

pub mod bench;
pub mod commands;
pub mod instance;

use std::fmt;
use std::io;

use nullcert_core::groebner::Budget;
use nullcert_core::Error;

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input file or flag value (exit 2).
    Parse(String),
    /// Well-formed but unusable input (exit 2).
    Input(String),
    /// A pair, degree or matrix budget was exceeded (exit 3).
    Budget(String),
    /// Internal failure, e.g. a certificate that does not re-verify (exit 1).
    Failure(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Failure(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Budget(m) => write!(f, "budget exhausted: {m}"),
            CliError::Failure(m) => write!(f, "error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::UnknownVariable(_) => CliError::Parse(e.to_string()),
            Error::BudgetExhausted(m) => CliError::Budget(m),
            Error::MinorCap { .. } => CliError::Budget(e.to_string()),
            Error::Verification(_) | Error::NonMinimal(_) => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Budgets and seed shared by all commands.
#[derive(Clone, Debug)]
pub struct Settings {
    pub budget: Budget,
    /// Nonzero-entry cap for certificate linear systems.
    pub matrix_entries: usize,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { budget: Budget::default(), matrix_entries: 200_000, seed: 1 }
    }
}
