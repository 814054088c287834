use thiserror::Error;

/// Errors raised by field construction, parsing and the constructions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("modulus must be monic of degree {degree}: {reason}")]
    BadModulus { degree: u32, reason: String },

    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),

    #[error("size {p}^{dim} exceeds the 2^20 limit")]
    TooLarge { p: u32, dim: u32 },

    #[error("element with index {0} is not primitive")]
    NotPrimitive(u32),

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("quadratic character of zero")]
    ZeroCharacter,

    #[error("mixed characteristic: {0} vs {1}")]
    MixedCharacteristic(u32, u32),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("elements are linearly dependent over the prime field")]
    LinearlyDependent,

    #[error("dual extraction failed at index {index}: {matches} candidates matched")]
    DualExtraction { index: usize, matches: usize },

    #[error("unit candidates for p = {p}, n = {n} are not pairwise distinct")]
    AmbiguousUnits { p: u32, n: u32 },

    #[error("truth table: {0}")]
    TruthTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
