//! File handling and orchestration around `complexite-core`: resource
//! loading, corpus manifests, featurization, distribution exports and
//! model files. The `complexite` binary is a thin layer over this crate.

pub mod corpus;
pub mod model_io;
pub mod resources;

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Manifest { path: PathBuf, message: String },
    #[error("{path}: {source}")]
    Resource {
        path: PathBuf,
        #[source]
        source: complexite_core::Error,
    },
    #[error(transparent)]
    Core(#[from] complexite_core::Error),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Read a UTF-8 text file, stripping a byte-order mark if present.
pub fn read_file(path: &std::path::Path) -> Result<String> {
    let raw = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(raw.strip_prefix('\u{feff}').map(str::to_owned).unwrap_or(raw))
}

pub(crate) use read_file as read_to_string;
