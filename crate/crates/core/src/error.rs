use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inverse DFT produced a coefficient outside {{0, 1}} at coordinate {0}")]
    NonBinaryResult(usize),
    #[error("dimension mismatch: m = {left} vs m = {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("code dimension {0} is too large for exhaustive search")]
    TooLarge(usize),
    #[error("unsupported m = {m} (requires m >= {min})")]
    UnsupportedM { m: usize, min: usize },
    #[error("bad specification: {0}")]
    BadSpec(String),
    #[error("the zero code has no minimum distance")]
    EmptyCode,
    #[error("decoder {decoder} cannot decode {code}")]
    IncompatibleDecoder { decoder: String, code: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
