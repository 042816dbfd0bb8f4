use fpcohomology::CohomError;
use galois_rings::RingError;
use gmodules::GModError;
use root_data::RootError;
use symplectic_core::SympError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LadderError {
    #[error("generator count mismatch: {images} images for {generators} generators")]
    GeneratorCount { images: usize, generators: usize },
    #[error("relation {0} does not evaluate to the identity")]
    RelationFails(String),
    #[error("similitude of generator {0} does not match kappa")]
    SimilitudeMismatch(String),
    #[error("image of generator {0} violates the valuation pattern")]
    PatternViolation(String),
    #[error("kappa is only known to precision {available}, need {needed}")]
    KappaPrecision { available: u32, needed: u32 },
    #[error("kappa is not trivial on relation {0}")]
    KappaNotCharacter(String),
    #[error("no symplectic correction of the set-lift of generator {0} exists")]
    NoSymplecticCorrection(String),
    #[error("twisting needs precision at least 2")]
    PrecisionTooLow,
    #[error("the supplied cochain is not a cocycle")]
    NotACocycle,
    #[error("ladders are not comparable: {0}")]
    Incomparable(String),
    #[error("conjugator search exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("missing designation: {0}")]
    MissingDesignation(&'static str),
    #[error(transparent)]
    Cohom(#[from] CohomError),
    #[error(transparent)]
    GMod(#[from] GModError),
    #[error(transparent)]
    Symp(#[from] SympError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
