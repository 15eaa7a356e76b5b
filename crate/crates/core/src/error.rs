use thiserror::Error;

/// Errors raised by the engine. Every public entry point validates its inputs
/// and reports violations through this type rather than panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("cannot parse permutation from {0:?}")]
    Parse(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {what} = {value} outside 1..={max}")]
    OutOfRange { what: &'static str, value: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("{0} avoids 3412; no quasi-resolution frame exists")]
    Covexillary(String),
}

pub type Result<T> = std::result::Result<T, Error>;
