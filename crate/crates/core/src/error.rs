use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("permutation size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{0} is not prime")]
    InvalidPrime(u64),

    #[error("invalid modulus {0}")]
    InvalidModulus(u64),

    #[error("precision must be at least 1")]
    InvalidPrecision,

    #[error("{p}^{precision} does not fit in 64 bits")]
    PrecisionOverflow { p: u64, precision: u32 },

    #[error("level {level} out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("indices must differ, got {0} twice")]
    EqualIndices(usize),

    #[error("{d} is not a power of {p}")]
    NotPowerOfPrime { d: u64, p: u64 },

    #[error("word contains a p-adic framing; reduce to a level first")]
    PadicFramingInWord,

    #[error("p-adic framing has precision {have}, need at least {need}")]
    PrecisionTooSmall { have: usize, need: usize },

    #[error("integer overflow in framing arithmetic")]
    IntegerOverflow,

    #[error("not a valid permutation image list: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
