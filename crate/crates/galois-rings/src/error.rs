use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("precision {requested} is outside 1..={ceiling}")]
    PrecisionOutOfRange { requested: u32, ceiling: u32 },
    #[error("cannot raise precision from {from} to {to} by reduction")]
    PrecisionIncrease { from: u32, to: u32 },
    #[error("operands live over different residue fields or precisions")]
    SpecMismatch,
    #[error("element is not a unit")]
    NotInvertible,
    #[error("element has no square root")]
    NoSquareRoot,
    #[error("matrix dimensions {0}")]
    DimensionMismatch(String),
}
