use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("Hilbert symbol arguments must be nonzero")]
    ZeroArgument,
    #[error("cannot parse field value: {0}")]
    ValueParse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("element does not belong to the algebra")]
    AlgebraMismatch,
    #[error("unit axiom fails: {0}")]
    NotUnital(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("algebra has no involution")]
    NoInvolution,
    #[error("involution is not scalar: x*sigma(x) = {0} is not in F*1")]
    NonScalarInvolution(String),

    #[error("characteristic 2 field: use the [a,b) quaternion constructor")]
    CharTwoField,
    #[error("wrong characteristic: expected {expected}, found {found}")]
    WrongCharacteristic { expected: String, found: u32 },
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("quadratic algebra is not separable: {0}")]
    NotSeparable(String),
    #[error("parameter {0} is a square; the extension would be split")]
    ParameterIsSquare(String),
    #[error("x^2 + x = {0} has a root; the extension would be split")]
    ParameterSplits(String),
    #[error("starred placements require a nonassociative base algebra")]
    PlacementNeedsNonassociativeBase,
    #[error("doubling scalar is not invertible in the base algebra")]
    ScalarNotInvertible,
    #[error("algebra is not a Cayley-Dickson doubling")]
    NotADoubling,

    #[error("derivation set is not closed under the bracket")]
    ClosureFailure,
    #[error("unsupported base for a division certificate: {0}")]
    UnsupportedBase(String),
    #[error("no zero-divisor witness found: {0}")]
    WitnessNotFound(String),

    #[error("base map is not an algebra homomorphism")]
    BaseMapNotHomomorphism,
    #[error("element or map is not invertible")]
    NotInvertible,
    #[error("invalid map parameters: {0}")]
    InvalidMap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
