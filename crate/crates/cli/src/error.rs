use skewcodes::Error;
use std::fmt;

/// A failed run, carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_PRECONDITION, message: message.into() }
    }

    pub fn io(err: impl fmt::Display) -> CliError {
        CliError { code: 1, message: err.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::NotPrime(_)
            | Error::InvalidField(_)
            | Error::BadModulus(_)
            | Error::UnsupportedField { .. }
            | Error::FieldMismatch
            | Error::Parse(_)
            | Error::Dimension(_)
            | Error::NotMonic
            | Error::ZeroPolynomial => EXIT_USAGE,
            _ => EXIT_PRECONDITION,
        };
        CliError { code, message: e.to_string() }
    }
}
