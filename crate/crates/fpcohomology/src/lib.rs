//! First cohomology of finitely presented groups with coefficients in finite
//! modules, computed by Fox calculus, plus the tame local pairing and the
//! Selmer dimension difference formula.

mod cocycle;
mod cup;
mod error;
mod group;
mod wiles;

pub use cocycle::{
    coboundary, cocycle_spaces, cohomologous, fox_matrix, h1_dim, h1_representatives, is_cocycle, power_rule,
    word_action, z1_basis, Cocycle1,
};
pub use cup::{cup_gram, local_cup};
pub use error::CohomError;
pub use group::{reduce_word, FPGroup, Word};
pub use wiles::{balanced_package, wiles_difference, LocalTerm};
