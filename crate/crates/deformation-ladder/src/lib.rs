//! Lifting residual symplectic representations of finitely presented groups through
//! `W(F_q)/p^m`, one power of `p` at a time.
//!
//! Each step set-lifts the generator images with the prescribed similitudes, measures how far
//! the relations are from the identity, and solves the Fox-linearized system for
//! `Id + p^m·x_g` adjustments. Failure to solve is reported as an [`ObstructionWitness`].

mod equivalence;
mod error;
mod hypotheses;
mod ladder;
mod pattern;

pub use equivalence::{cayley, strict_conjugator, strict_equivalent, DEFAULT_SEARCH_CAP};
pub use error::LadderError;
pub use hypotheses::{check_hypotheses, ConditionResult, Designations, HypothesisReport};
pub use ladder::{evaluate_word, LiftLadder, LiftOutcome, ObstructionWitness};
pub use pattern::ValuationPattern;
