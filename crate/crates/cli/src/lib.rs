//! File-based front end for `colorhom`: read algebra documents, run named
//! checks and constructions, execute theorem manifests.
//!
//! Exit statuses: 0 pass, 1 mathematical failure (a witness is reported),
//! 2 usage or structural error.

pub mod commands;
pub mod document;
pub mod report;
pub mod suite;

use std::path::Path;

use sha2::{Digest, Sha256};

pub use commands::{apply_construction, evaluate_check, run_catalog, run_check, run_construct, run_search};
pub use document::{parse, serialize, AlgebraDocument, DocError, NamedForm, Provenance};
pub use report::Format;
pub use suite::run_suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Document { path: String, source: DocError },
    #[error(transparent)]
    Kernel(#[from] colorhom::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Some part could not be evaluated; the report says which.
    Error,
}

/// A finished command: its status and the report to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub report: String,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

pub fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Reads and parses a document, returning it with the SHA-256 of the bytes.
pub fn load(path: &Path) -> Result<(AlgebraDocument, String), CliError> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let doc = parse(&text).map_err(|source| CliError::Document {
        path: path.display().to_string(),
        source,
    })?;
    Ok((doc, sha256_hex(&bytes)))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
