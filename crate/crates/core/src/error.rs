use std::path::PathBuf;

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),

    #[error("code has zero dimension (rank {rank} equals block length {n})")]
    ZeroDimension { rank: usize, n: usize },

    #[error("invalid code rate {k}/{n}")]
    InvalidRate { k: usize, n: usize },

    #[error("channel LLR at position {index} is not finite")]
    NonFiniteLlr { index: usize },

    #[error("noise variance is zero; use hard decisions instead")]
    ZeroNoiseVariance,

    #[error("alist line {line}: {message}")]
    Alist { line: usize, message: String },

    #[error("invalid bit {found:?} at position {index}")]
    InvalidBit { index: usize, found: char },

    #[error("invalid sweep configuration: {0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
