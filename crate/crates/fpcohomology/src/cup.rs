use galois_rings::{Elem, Mat};
use gmodules::GMod;
use root_data::RootDatum;

use crate::cocycle::Cocycle1;
use crate::error::CohomError;
use crate::group::FPGroup;

/// Checks that `gamma` is the tame presentation with `v ≡ 1 mod p` and that `m` is a trivial module.
fn check_tame(gamma: &FPGroup, m: &GMod) -> Result<(), CohomError> {
    let v = gamma.tame_parameter().ok_or_else(|| CohomError::NotTame(format!("presentation {gamma}")))?;
    let p = m.field().p() as i64;
    if (v - 1).rem_euclid(p) != 0 {
        return Err(CohomError::NotTame(format!("v = {v} is not 1 mod {p}")));
    }
    if m.num_generators() != 2 || !m.actions().iter().all(|a| a.is_identity()) {
        return Err(CohomError::NotTame("residual action is not trivial".into()));
    }
    Ok(())
}

/// Local pairing of a cocycle on `Ad⁰` with one on `Ad⁰*` for the tame group:
/// `⟨f, g⟩ = g(τ)(f(σ)) − g(σ)(f(τ))`, evaluated with the normalized pairing of `datum`.
pub fn local_cup(
    datum: &RootDatum,
    gamma: &FPGroup,
    ad: &GMod,
    f: &Cocycle1,
    g: &Cocycle1,
) -> Result<Elem, CohomError> {
    check_tame(gamma, ad)?;
    let r = ad.field();
    let (s, t) = (0, 1);
    let a = datum.pair(r, g.value(t), f.value(s));
    let b = datum.pair(r, g.value(s), f.value(t));
    Ok(r.sub(&a, &b))
}

/// Gram matrix `⟨f_i, g_j⟩`.
pub fn cup_gram(
    datum: &RootDatum,
    gamma: &FPGroup,
    ad: &GMod,
    fs: &[Cocycle1],
    gs: &[Cocycle1],
) -> Result<Mat, CohomError> {
    let r = ad.field();
    let mut m = Mat::zeros(r, fs.len(), gs.len());
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in gs.iter().enumerate() {
            m.set(i, j, local_cup(datum, gamma, ad, f, g)?);
        }
    }
    Ok(m)
}
