use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different polynomial rings")]
    ContextMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("characteristic {0} is not supported (need 0 or a prime below 2^31)")]
    InvalidCharacteristic(u64),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("variable `{0}` already exists in the ring")]
    VariableCollision(String),
    #[error("polynomial is not a member of the ideal")]
    NotInIdeal,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parameter constraint violated: {0}")]
    ParameterViolation(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
