use galois_rings::RingError;
use root_data::RootError;
use symplectic_core::SympError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GModError {
    #[error("designated torus generators do not act semisimply over F_q")]
    NotSemisimple,
    #[error("subspace is not stable under the group action")]
    NotStable,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("torus generator {0} does not have diagonal image")]
    NotDiagonal(String),
    #[error("generator {0} has image outside the Borel subgroup")]
    NotBorel(String),
    #[error("similitude of generator {0} does not match the supplied kappa value")]
    SimilitudeMismatch(String),
    #[error("hypotheses not verified: {0}")]
    HypothesesNotVerified(String),
    #[error("enumeration exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("expected a precision-1 ring")]
    NotAField,
    #[error(transparent)]
    Symp(#[from] SympError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
