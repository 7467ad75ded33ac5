use std::path::PathBuf;

use sps_core::BuildError;

/// Failures reading or writing lattice files and catalogs.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    /// Not well-formed JSON.
    #[error("parse error: {0}")]
    Parse(serde_json::Error),
    /// Well-formed JSON with missing or extra fields, inconsistent lengths or
    /// disagreeing cover lists.
    #[error("schema error: {0}")]
    Schema(String),
    /// Schema-conforming, but not a finite lattice.
    #[error("validation error: {0}")]
    Validation(#[from] BuildError),
}

/// Errors surfaced by the command-line tool; all map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Construction(#[from] sps_core::ConstructionError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}
