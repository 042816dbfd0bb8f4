//! Trivial primes and the tame local deformation conditions for `GSp_2n`.
//!
//! A trivial prime `v` has `v ≡ 1 mod p`, `v ≢ 1 mod p²`, and acts trivially through the
//! residual representation. The tame quotient of `G_v` is generated by `σ` (Frobenius lift)
//! and `τ` (tame inertia) with `σ τ σ⁻¹ = τ^v`. Two conditions are provided: an unramified
//! one attached to `α = 2L₁` after conjugating by `Id + X_{−2L₁}`, and a ramified one
//! attached to `α = −2L₁`. Tangent spaces are tame cochains `(φ(σ), φ(τ))` on `Ad⁰`
//! in adjoint coordinates.

mod conditions;
mod error;
mod prime;
mod rep;
mod tangent;
mod twist;

pub use conditions::{
    in_c_nr, in_c_ram, in_condition, in_d_alpha, nr_conjugator, root_group_parameter, root_value,
    unconjugate_nr, LocalCondition,
};
pub use error::LocalError;
pub use prime::{is_trivial_prime, TrivialPrime};
pub use rep::{rank_one_shape, TameRep};
pub use tangent::{
    centralizer, conjugate_cochain, lemma55_criterion, p_alpha, s_alpha, s_ram, tangent_nr, tangent_ram,
    torus_kernel,
};
pub use twist::twist_certificate;
