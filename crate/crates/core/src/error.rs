//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A sequence of parts that is not weakly decreasing or contains zeros.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Two arguments were required to have the same size.
    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },

    /// Termwise operations require both operands in the same basis.
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },

    /// Padded partition indices that are not actually partitions for the given n.
    #[error("invalid padding: {0}")]
    InvalidPadding(String),

    /// Kronecker product of inhomogeneous or degree-mismatched expressions
    /// where the caller demanded strict degrees.
    #[error("degree mismatch in Kronecker product: {0}")]
    KroneckerDegree(String),

    /// Malformed textual input (expressions, partition literals, JSON).
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
