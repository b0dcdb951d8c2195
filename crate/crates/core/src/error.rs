use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial 0x{poly:x} is not a primitive polynomial of degree {m}")]
    PolynomialNotPrimitive { m: u32, poly: u32 },
    #[error("subgroup order {n} does not divide 2^{m} - 1")]
    InvalidSubgroupOrder { m: u32, n: usize },
    #[error("invalid field parameters: {0}")]
    InvalidFieldParameters(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionError(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("row {row} of the generator matrix is not a codeword of the target code")]
    NotACodewordBasis { row: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCodeParameters(String),
    #[error("column multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("spectrum structure violated at index {0} (inconsistent code spec)")]
    SpectrumStructureViolation(usize),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("interpolation parameters too small{}", match .suggested_multiplicity {
        Some(m) => format!(" (smallest feasible multiplicity: {m})"),
        None => " (requested radius exceeds the list-decoding bound)".to_string(),
    })]
    ParameterTooSmall { suggested_multiplicity: Option<usize> },
    #[error("list element coordinate {0} beyond index k-1 is nonzero")]
    TrailingNonzero(usize),
    #[error("recovery paths disagree: {0}")]
    RecoveryMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
