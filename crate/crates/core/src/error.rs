use thiserror::Error;

/// Errors raised by the field, matrix, relation and double-coset layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus {0:?} is reducible over Z_p")]
    ReducibleModulus(Vec<u32>),
    #[error("modulus {modulus:?} is not a monic polynomial of degree {degree}")]
    DegreeMismatch { degree: u32, modulus: Vec<u32> },
    #[error("field order {0} exceeds the supported range")]
    FieldTooLarge(u64),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("inconsistent block layout: {0}")]
    LayoutInconsistent(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("objects are not comparable: {0}")]
    NotComparable(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("block mismatch: {0}")]
    BlockMismatch(String),
    #[error("1 - lambda*d is singular at lambda = {0}")]
    SingularPencil(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
