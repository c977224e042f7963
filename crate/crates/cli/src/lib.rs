//! File formats and command implementations behind the `pencil` binary.

pub mod commands;
pub mod format;

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(#[from] pencil_core::Error),
    /// Some consistency checks failed; the report has already been printed.
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    /// 1 for errors about the pencil itself, 2 for unreadable input or IO.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::ChecksFailed(_) => 1,
            CliError::Io { .. } | CliError::Parse(_) => 2,
        }
    }
}
