use thiserror::Error;

/// Which line of a Cayley table broke the Latin property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is empty")]
    Empty,

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    BadEntry { row: usize, col: usize, value: usize, order: usize },

    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatin { line: Line, index: usize, value: usize },

    #[error("element 0 is not a two-sided identity ({line} 0 differs at position {position})")]
    NoIdentity { line: Line, position: usize },

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("element {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("element {0} has distinct left and right inverses")]
    NoTwoSidedInverse(usize),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),

    #[error("unknown theorem id '{0}'")]
    UnknownTheorem(String),

    #[error("unknown property '{0}'")]
    UnknownProperty(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub fn io(path: impl AsRef<std::path::Path>, e: std::io::Error) -> Self {
        Error::Io { path: path.as_ref().display().to_string(), message: e.to_string() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
