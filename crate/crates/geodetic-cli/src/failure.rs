//! Failures that map to specific exit codes.

use std::fmt;

/// Exit code for malformed or unreadable input.
pub const PARSE: u8 = 2;
/// Exit code for an unmet method precondition.
pub const PRECONDITION: u8 = 3;
/// Exit code for an exhausted work budget.
pub const BUDGET: u8 = 4;

/// An error carrying the process exit code it should produce.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> anyhow::Error {
        Failure {
            code: PARSE,
            message: message.into(),
        }
        .into()
    }

    pub fn precondition(message: impl Into<String>) -> anyhow::Error {
        Failure {
            code: PRECONDITION,
            message: message.into(),
        }
        .into()
    }

    pub fn code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

/// Reads and parses an instance file, mapping every problem to [`PARSE`].
pub fn read_instance(path: &std::path::Path) -> anyhow::Result<geodetic::io::Instance> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    geodetic::io::parse_instance(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}
