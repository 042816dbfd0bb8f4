//! Finite fields `F_q`, Galois rings `W(F_q)/p^m`, dense matrices over them,
//! and exact linear algebra over the residue field.

mod error;
mod field;
pub mod linalg;
mod matrix;
mod ring;

pub use error::RingError;
pub use field::{is_prime, make_field, FieldSpec};
pub use linalg::Subspace;
pub use matrix::Mat;
pub use ring::{discrete_log, residue_order, Elem, GaloisRing, DEFAULT_PRECISION_CEILING};
