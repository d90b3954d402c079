use std::path::PathBuf;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("training corpus is empty")]
    EmptyCorpus,

    #[error("character {0:?} (U+{:04X}) is not a supported Devanagari character", *.0 as u32)]
    NotDevanagari(char),

    #[error("word {0:?} is not in the pronouncing dictionary")]
    NotInDictionary(String),

    #[error("model file {path}: {message}")]
    ModelFormat { path: PathBuf, message: String },

    #[error("configuration: {0}")]
    Config(String),

    #[error("gold record {id:?}: {message}")]
    Gold { id: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }

    pub(crate) fn model(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::ModelFormat {
            path: path.into(),
            message: message.into(),
        }
    }
}
