use std::fmt;
use std::str::FromStr;

use galois_rings::{Elem, GaloisRing, Mat};
use root_data::{Root, RootDatum};

use crate::error::LocalError;
use crate::rep::TameRep;

/// The two tame local conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalCondition {
    Unramified,
    Ramified,
}

impl LocalCondition {
    /// `2L₁` for the unramified condition, `−2L₁` for the ramified one.
    pub fn alpha(&self, n: usize) -> Root {
        match self {
            LocalCondition::Unramified => Root::long(n, 1),
            LocalCondition::Ramified => Root::long(n, 1).neg(),
        }
    }
    pub fn name(&self) -> &'static str {
        match self {
            LocalCondition::Unramified => "nr",
            LocalCondition::Ramified => "ram",
        }
    }
}

impl fmt::Display for LocalCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LocalCondition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "nr" => Ok(LocalCondition::Unramified),
            "ram" => Ok(LocalCondition::Ramified),
            other => Err(format!("unknown local condition '{other}'")),
        }
    }
}

/// `C = Id + X_{−2L₁}`, the conjugator relating the unramified condition to `𝒟^{2L₁}`.
pub fn nr_conjugator(datum: &RootDatum, ring: &GaloisRing) -> Mat {
    let n = datum.n();
    &Mat::identity(ring, 2 * n) + &datum.root_vector(ring, &Root::long(n, 1).neg())
}

/// `C⁻¹ ϱ C`.
pub fn unconjugate_nr(datum: &RootDatum, rep: &TameRep) -> Result<TameRep, LocalError> {
    let c = nr_conjugator(datum, rep.ring());
    rep.conjugate(&c.inverse()?)
}

/// The scalar `c` with `A X_α A⁻¹ = c X_α`, if `X_α` is an eigenvector of `Ad(A)`.
///
/// For `A` in `𝒯·Z(U_α)` this is `α` of the torus part.
pub fn root_value(datum: &RootDatum, a: &Mat, alpha: &Root) -> Option<Elem> {
    let r = a.ring();
    let x = datum.root_vector(r, alpha);
    let conj = &(a * &x) * &a.inverse().ok()?;
    let (i, j) = alpha.pivot();
    let c = r.div(conj.get(i, j), x.get(i, j)).ok()?;
    (conj == x.scale(&c)).then_some(c)
}

/// The coefficient `t` with `B = Id + t X_α`, if `B ∈ U_α`.
pub fn root_group_parameter(datum: &RootDatum, b: &Mat, alpha: &Root) -> Option<Elem> {
    let r = b.ring();
    let x = datum.root_vector(r, alpha);
    let d = b - &Mat::identity(r, b.rows());
    let (i, j) = alpha.pivot();
    let t = r.div(d.get(i, j), x.get(i, j)).ok()?;
    (d == x.scale(&t)).then_some(t)
}

/// `ϱ(σ) ∈ 𝒯·Z(U_α)` with `α(ϱ(σ)) = v`, and `ϱ(τ) ∈ U_α`.
pub fn in_d_alpha(datum: &RootDatum, rep: &TameRep, alpha: &Root) -> bool {
    root_value(datum, rep.a(), alpha).is_some_and(|c| c == rep.v_elem())
        && root_group_parameter(datum, rep.b(), alpha).is_some()
}

/// `β(A) ≢ 1` for every `β ∈ Φ^α`, reading `β(A)` off the conjugation action.
fn beta_clause(datum: &RootDatum, a: &Mat, alpha: &Root) -> bool {
    let one = a.ring().one();
    datum.phi_alpha(alpha).iter().all(|b| root_value(datum, a, b).is_some_and(|c| c != one))
}

fn require_precision(rep: &TameRep, m: u32) -> Result<(), LocalError> {
    if rep.precision() != m {
        return Err(LocalError::WrongPrecision { expected: m, got: rep.precision() });
    }
    Ok(())
}

/// Unramified condition at precision 2, applied to the representative `ϱ₂' = C ϱ₂ C⁻¹`.
///
/// After unconjugating: `ϱ₂(τ) = Id`, `ϱ₂(σ)` is diagonal with `2L₁(ϱ₂(σ)) = v`,
/// and `β(ϱ₂(σ)) ≢ 1 mod p²` for all `β ∈ Φ^{2L₁}`.
pub fn in_c_nr(datum: &RootDatum, rep2: &TameRep) -> Result<bool, LocalError> {
    require_precision(rep2, 2)?;
    let u = unconjugate_nr(datum, rep2)?;
    let alpha = LocalCondition::Unramified.alpha(datum.n());
    Ok(u.is_unramified()
        && u.a().is_diagonal()
        && in_d_alpha(datum, &u, &alpha)
        && beta_clause(datum, u.a(), &alpha))
}

/// Ramified condition at precision 2 with `α = −2L₁`.
///
/// `ϱ₂(τ) = Id + p·y·X_α` with `y` a unit, `α(ϱ₂(σ)) = v`, and `β(ϱ₂(σ)) ≢ 1 mod p²`
/// for all `β ∈ Φ^α`.
pub fn in_c_ram(datum: &RootDatum, rep2: &TameRep) -> Result<bool, LocalError> {
    require_precision(rep2, 2)?;
    let alpha = LocalCondition::Ramified.alpha(datum.n());
    let r = rep2.ring();
    let y_ok = root_group_parameter(datum, rep2.b(), &alpha).is_some_and(|t| r.valuation(&t) == Some(1));
    Ok(y_ok && in_d_alpha(datum, rep2, &alpha) && beta_clause(datum, rep2.a(), &alpha))
}

/// Shape test at precision `m ≥ 2`: the representative itself lies in `𝒟^α` and its
/// reduction mod `p²` passes the precision-2 test.
pub fn in_condition(datum: &RootDatum, kind: LocalCondition, rep: &TameRep) -> Result<bool, LocalError> {
    if rep.precision() < 2 {
        return Err(LocalError::WrongPrecision { expected: 2, got: rep.precision() });
    }
    let r2 = rep.ring().at_precision(2)?;
    let rep2 = rep.reduce_to(&r2)?;
    let alpha = kind.alpha(datum.n());
    Ok(match kind {
        LocalCondition::Unramified => {
            in_d_alpha(datum, &unconjugate_nr(datum, rep)?, &alpha) && in_c_nr(datum, &rep2)?
        }
        LocalCondition::Ramified => in_d_alpha(datum, rep, &alpha) && in_c_ram(datum, &rep2)?,
    })
}
