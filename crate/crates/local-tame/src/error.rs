use galois_rings::RingError;
use symplectic_core::SympError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LocalError {
    #[error("{v} is not a trivial prime for p = {p}")]
    NotTrivialPrime { v: u64, p: u64 },
    #[error("expected precision {expected}, got {got}")]
    WrongPrecision { expected: u32, got: u32 },
    #[error("similitude of {which} is {found}, expected {expected}")]
    SimilitudeMismatch { which: &'static str, found: String, expected: String },
    #[error("tame relation A B A^-1 = B^v fails")]
    RelationFails,
    #[error("representation is not trivial mod p")]
    ResidualNotTrivial,
    #[error("kappa(sigma)/v has no square root")]
    NoSquareRoot,
    #[error("matrix size {got} does not match rank {n}")]
    Shape { n: usize, got: usize },
    #[error(transparent)]
    Symp(#[from] SympError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
