use std::io;
use std::path::PathBuf;

use laneplan_core::Error as ModelError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: u64,
        column: usize,
        message: String,
    },
    #[error("census row `{0}` has missing entries and cannot be sampled")]
    RowUnusable(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl CliError {
    pub fn parse(line: u64, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Process exit status: 2 usage, 3 input/output, 4 parse, 5 model.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Read { .. } | CliError::Write { .. } => 3,
            CliError::Parse { .. } => 4,
            CliError::RowUnusable(_) | CliError::Model(_) => 5,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
