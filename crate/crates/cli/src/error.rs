//! CLI-level errors: config parsing, validation, file I/O, solver errors.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Validation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Core(#[from] coatsim::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
