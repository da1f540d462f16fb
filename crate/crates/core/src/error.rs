use thiserror::Error;

/// Errors produced by the enumeration and verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of bounds: {0}")]
    OutOfBounds(String),

    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(String),

    #[error("invalid P-partition: {0}")]
    InvalidPPartition(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),

    #[error("transposition requires a square shape, got {a}x{b}")]
    NotSquare { a: usize, b: usize },

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("division by (1 - q^{exponent}) left a nonzero remainder")]
    NonPolynomialRatio { exponent: u32 },

    #[error("value at a primitive {order}th root of unity is not rational: {residue}")]
    NotRational { order: u32, residue: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameter outside the supported range: {0}")]
    Range(String),

    #[error("operator does not preserve the enumerated set: {0}")]
    NotInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
