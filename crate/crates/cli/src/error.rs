//! Errors of the command-line front end and their exit codes.

use thiserror::Error;

/// A failed command, split by whose fault it is.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or invalid input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// A computation contradicted an expected identity: exit code 1.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl From<terminal_cluster::Error> for CliError {
    fn from(e: terminal_cluster::Error) -> Self {
        use terminal_cluster::Error as E;
        match e {
            E::NotDivisible(_) | E::ScheduleMismatch(_) | E::NonIntegral(_) | E::Ambiguity(_) => {
                CliError::Verification(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Result alias for commands.
pub type CliResult<T> = std::result::Result<T, CliError>;
