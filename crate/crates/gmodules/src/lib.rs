//! Group modules over `F_q` attached to a residual representation into the
//! Borel subgroup of `GSp_2n`: adjoint and twisted dual actions, simultaneous
//! eigenspaces for the torus, stable closures, equivariant Hom dimensions and
//! the residual hypothesis checks.

pub mod conditions;
mod eigen;
mod error;
mod group;
mod hom;
mod module;

pub use eigen::{eigen_components, eigenspace_decomposition, Eigenspace};
pub use error::GModError;
pub use group::GroupData;
pub use hom::{hom_invariants, mult_matrix, restrict_scalars, restrict_vector};
pub use module::{reduce_mod, GMod};
