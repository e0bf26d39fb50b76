use thiserror::Error;

/// Errors produced by field arithmetic, linear algebra, codes and rendering.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),

    #[error("invalid symbol {symbol:?} at position {position} for GF({modulus})")]
    InvalidDigit {
        symbol: String,
        position: usize,
        modulus: u32,
    },

    #[error("empty word")]
    EmptyWord,

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("malformed matrix text: {0}")]
    MatrixFormat(String),

    #[error("degenerate code: {0}")]
    DegenerateCode(String),

    #[error("enumeration of {count} codewords exceeds the limit of {limit}")]
    Capacity { count: u128, limit: u128 },

    #[error("invalid render setting: {0}")]
    RenderSpec(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
