use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("rank {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },
    #[error("bad index {index} for rank {n}")]
    BadIndex { index: u32, n: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("requires dp invertible (dp = 0 with a negative dp exponent)")]
    DeltaPrimeNotInvertible,
    #[error("diagram does not lie in the requested cell")]
    NotInCell,
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
