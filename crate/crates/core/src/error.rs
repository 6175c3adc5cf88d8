use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("geometry is empty")]
    EmptyGeometry,

    #[error("grade {0} lies outside [0, 1]")]
    GradeOutOfRange(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error in {location}: {message}")]
    Parse { location: String, message: String },

    #[error("empty dataset")]
    EmptyDataset,

    #[error("duplicate region id {0}")]
    DuplicateId(i64),

    #[error("non-areal geometry rejected for feature ids {0:?}")]
    RejectedFeatures(Vec<i64>),

    #[error("no region {0}")]
    UnknownId(i64),

    #[error("unknown relation {0:?}")]
    UnknownRelation(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by the caller's request (unknown ids, bad
    /// relation names, bad parameters) rather than by I/O or malformed input.
    pub fn is_semantic(&self) -> bool {
        matches!(
            self,
            Error::UnknownId(_)
                | Error::UnknownRelation(_)
                | Error::InvalidParameter(_)
                | Error::GradeOutOfRange(_)
                | Error::EmptyDataset
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
