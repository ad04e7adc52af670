use thiserror::Error;

/// Errors raised by the exact-arithmetic, q-series, and shape routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("coefficient {index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("series denominator must have constant term +1 or -1")]
    NonUnitConstantTerm,
    #[error("residue class {residue} has {available} samples, need at least {required}")]
    InsufficientSamples {
        residue: usize,
        available: usize,
        required: usize,
    },
    #[error("fitted quasipolynomial disagrees with the data at index {index}")]
    ValidationFailure { index: i64 },
    #[error("index {index} outside [0, {max}]")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("argument outside the domain [{lower}, {upper}]")]
    OutOfDomain { lower: String, upper: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
