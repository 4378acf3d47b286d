use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("text is empty")]
    EmptyText,
    #[error("position set is empty")]
    EmptyPositions,
    #[error("duplicate position {0}")]
    DuplicatePosition(usize),
    #[error("position {value} is outside [1, {n}]")]
    PositionOutOfRange { value: usize, n: usize },
    #[error("line {line}: cannot parse {content:?} as a position")]
    ParsePosition { line: usize, content: String },
    #[error("cannot draw {b} distinct positions from a text of length {n}")]
    TooManyPositions { b: usize, n: usize },
    #[error("sample count s={s} is outside [1, {n}]")]
    SampleCount { s: usize, n: usize },
    #[error("fingerprint query at position {i} is outside [1, {n}]")]
    QueryOutOfRange { i: usize, n: usize },
    #[error("malformed group forest: {0}")]
    Forest(String),
    #[error("malformed output file: {0}")]
    Format(String),
    #[error("invalid value for {flag}: {value} ({reason})")]
    Usage {
        flag: &'static str,
        value: String,
        reason: &'static str,
    },
}
