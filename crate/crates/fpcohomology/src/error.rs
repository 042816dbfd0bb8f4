use galois_rings::RingError;
use gmodules::GModError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed word: {0}")]
    BadWord(String),
    #[error("module has {module} generator actions, group has {group} generators")]
    GeneratorCount { module: usize, group: usize },
    #[error("values do not satisfy the relation conditions")]
    NotACocycle,
    #[error("group is not a tame presentation with v = 1 mod p and trivial residual action: {0}")]
    NotTame(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    GMod(#[from] GModError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
