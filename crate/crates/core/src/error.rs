use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid number of marked points n={0} (need n >= 4)")]
    InvalidN(u32),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid F-curve shape: {0}")]
    InvalidShape(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("n={n} exceeds the set-partition enumeration cap {cap}")]
    PartitionCapExceeded { n: u32, cap: u32 },

    #[error("{0}")]
    Unsupported(String),

    #[error("family structure violated: {0}")]
    Structure(String),

    #[error("parse error: {0}")]
    Parse(String),
}
