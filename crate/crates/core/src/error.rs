use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("extension degree must be positive, got {0}")]
    InvalidExtensionDegree(usize),

    #[error("field characteristic {field} does not match requested p = {requested}")]
    CharacteristicMismatch { field: u64, requested: u64 },

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{group} requires n >= {min}, got {n}")]
    RankTooSmall { group: &'static str, n: usize, min: usize },

    #[error("root datum parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("root datum invariant violated ({invariant}): {detail}")]
    InvalidRootDatum { invariant: &'static str, detail: String },

    #[error("invalid Levi subsystem: {0}")]
    InvalidLevi(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("induction needs at least one partition")]
    EmptyInduction,

    #[error("block of size {size} carries a partition of {partition_size}")]
    BlockSizeMismatch { size: usize, partition_size: usize },

    #[error("eigenvalues must be distinct and one per block: {0}")]
    BadEigenvalues(String),

    #[error("spectrum not in field: {0}")]
    SpectrumNotInField(String),

    #[error("inconclusive sampling after {trials} trials")]
    Inconclusive { trials: usize },

    #[error("structure constants invalid: {0}")]
    InvalidAlgebra(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
