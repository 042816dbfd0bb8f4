//! `GSp_2n` over Galois rings: the similitude character, the Borel subgroup,
//! the unipotent filtration `U_k`, nilpotent exponential and logarithm, and
//! finite matrix-group enumeration.

mod error;
mod form;
mod group;
mod unipotent;

pub use error::SympError;
pub use form::{is_borel, similitude, torus_element, BorelElement, SympForm, SympMatrix};
pub use group::{commutator, enumerate_group, enumerate_u1, group_order};
pub use unipotent::{exp_filtered, exp_nilpotent, filtration_level, log_unipotent, Level};
