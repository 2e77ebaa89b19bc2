use thiserror::Error;

/// Errors raised by field arithmetic, linear algebra and transform construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("modulus mismatch: GF({left}) vs GF({right})")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("0 has no multiplicative inverse in GF({0})")]
    NoInverse(u32),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("dimension mismatch: {op} on {left} and {right}")]
    DimensionMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular (det = 0)")]
    Singular,

    #[error("multiplicative order exceeds cap {cap}")]
    OrderNotFound { cap: u64 },

    #[error("parity-check matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("eigenvalue {lambda} is unsuitable: transform matrix is singular over GF({p})")]
    EigenvalueUnsuitable { lambda: u32, p: u32 },

    #[error("invalid inflation strategy: {0}")]
    InvalidStrategy(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
