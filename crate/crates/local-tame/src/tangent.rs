use fpcohomology::Cocycle1;
use galois_rings::{linalg, Elem, GaloisRing, Mat, Subspace};
use root_data::{Root, RootDatum};

use crate::conditions::{nr_conjugator, LocalCondition};
use crate::error::LocalError;
use crate::rep::TameRep;

fn coords(datum: &RootDatum, x: &Mat) -> Vec<Elem> {
    datum.coords(x).expect("bracket of sp elements lies in sp")
}

/// `{Y ∈ sp_2n : [Y, x] = 0}` in adjoint coordinates.
pub fn centralizer(datum: &RootDatum, f: &GaloisRing, x: &Mat) -> Subspace {
    let cols: Vec<Vec<Elem>> = datum.basis(f).iter().map(|b| coords(datum, &b.bracket(x))).collect();
    let m = linalg::cols_to_mat(f, datum.dim(), &cols);
    Subspace::span(f, datum.dim(), &linalg::kernel(&m))
}

/// `𝔱_α = ker α` inside the diagonal torus, in adjoint coordinates.
pub fn torus_kernel(datum: &RootDatum, f: &GaloisRing, alpha: &Root) -> Subspace {
    let x = datum.root_vector(f, alpha);
    let basis = datum.basis(f);
    let n = datum.n();
    let cols: Vec<Vec<Elem>> = (0..n).map(|i| coords(datum, &basis[i].bracket(&x))).collect();
    let m = linalg::cols_to_mat(f, datum.dim(), &cols);
    let vs: Vec<Vec<Elem>> = linalg::kernel(&m)
        .into_iter()
        .map(|k| {
            let mut v = k;
            v.resize(datum.dim(), f.zero());
            v
        })
        .collect();
    Subspace::span(f, datum.dim(), &vs)
}

fn unit_vector(f: &GaloisRing, d: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![f.zero(); d];
    v[i] = f.one();
    v
}

fn pair(sigma: Vec<Elem>, tau: Vec<Elem>) -> Cocycle1 {
    Cocycle1::new(vec![sigma, tau])
}

/// Basis of the span of the given tame cochains.
fn span_basis(f: &GaloisRing, d: usize, cs: &[Cocycle1]) -> Vec<Cocycle1> {
    let flat: Vec<Vec<Elem>> = cs.iter().map(|c| c.flat()).collect();
    Subspace::span(f, 2 * d, &flat).basis().iter().map(|v| Cocycle1::from_flat(v, d)).collect()
}

/// `𝒫^α`: `φ(σ) ∈ 𝔱_α + Cent(X_α)` and `φ(τ) ∈ ⟨X_α⟩`.
pub fn p_alpha(datum: &RootDatum, f: &GaloisRing, alpha: &Root) -> Vec<Cocycle1> {
    let d = datum.dim();
    let x = datum.root_vector(f, alpha);
    let sigma_part = torus_kernel(datum, f, alpha).add(&centralizer(datum, f, &x));
    let zero = vec![f.zero(); d];
    let mut out: Vec<Cocycle1> = sigma_part.basis().iter().map(|v| pair(v.clone(), zero.clone())).collect();
    out.push(pair(zero, unit_vector(f, d, datum.index_of(alpha))));
    out
}

/// `𝒮^α`: `φ(σ) ∈ ⊕_{β ∈ Φ^α} 𝔤_β` and `φ(τ) = 0`.
pub fn s_alpha(datum: &RootDatum, f: &GaloisRing, alpha: &Root) -> Vec<Cocycle1> {
    let d = datum.dim();
    datum
        .phi_alpha(alpha)
        .iter()
        .map(|b| pair(unit_vector(f, d, datum.index_of(b)), vec![f.zero(); d]))
        .collect()
}

/// `Ad(K)` applied to both values of a tame cochain.
pub fn conjugate_cochain(datum: &RootDatum, k: &Mat, c: &Cocycle1) -> Result<Cocycle1, LocalError> {
    let f = k.ring();
    let ki = k.inverse()?;
    let values = c
        .values()
        .iter()
        .map(|v| coords(datum, &(&(k * &datum.from_coords(f, v)) * &ki)))
        .collect();
    Ok(Cocycle1::new(values))
}

/// `𝒩^nr = C(𝒫^{2L₁} + 𝒮^{2L₁})C⁻¹` with `C = Id + X_{−2L₁}`, as a basis of tame cochains.
pub fn tangent_nr(datum: &RootDatum, f: &GaloisRing) -> Result<Vec<Cocycle1>, LocalError> {
    let alpha = LocalCondition::Unramified.alpha(datum.n());
    let c = nr_conjugator(datum, f);
    let mut gens = p_alpha(datum, f, &alpha);
    gens.extend(s_alpha(datum, f, &alpha));
    let conj = gens.iter().map(|g| conjugate_cochain(datum, &c, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(span_basis(f, datum.dim(), &conj))
}

/// Ramified complement: `([Y, Ā₁], [Y, B̄₁])` for `Y ∈ ⊕_{β ∈ Φ^α} 𝔤_β`, where
/// `Ā₁, B̄₁` are the first-order terms of `ϱ₂`.
///
/// These are exactly the twists absorbed by conjugating with `Id + p^{m−2}Y`.
pub fn s_ram(datum: &RootDatum, rep2: &TameRep) -> Result<Vec<Cocycle1>, LocalError> {
    let (a1, b1) = rep2.first_order()?;
    let f = a1.ring().clone();
    let alpha = LocalCondition::Ramified.alpha(datum.n());
    Ok(datum
        .phi_alpha(&alpha)
        .iter()
        .map(|b| {
            let y = datum.root_vector(&f, b);
            pair(coords(datum, &y.bracket(&a1)), coords(datum, &y.bracket(&b1)))
        })
        .collect())
}

/// `𝒩^ram = 𝒫^{−2L₁} + 𝒮^ram(ϱ₂)`.
pub fn tangent_ram(datum: &RootDatum, rep2: &TameRep) -> Result<Vec<Cocycle1>, LocalError> {
    let f = rep2.ring().residue_field();
    let alpha = LocalCondition::Ramified.alpha(datum.n());
    let mut gens = p_alpha(datum, &f, &alpha);
    gens.extend(s_ram(datum, rep2)?);
    Ok(span_basis(&f, datum.dim(), &gens))
}

/// Tests `a_{2L₁} = −(cd)⁻¹ a₁` on `f(σ)`, where `X_{−2L₁} = c·e_{n+1,1}` and `X_{2L₁} = d·e_{1,n+1}`.
pub fn lemma55_criterion(datum: &RootDatum, f: &GaloisRing, cochain: &Cocycle1) -> bool {
    let n = datum.n();
    let top = Root::long(n, 1);
    let c = datum.root_vector(f, &top.neg()).get(n, 0).clone();
    let d = datum.root_vector(f, &top).get(0, n).clone();
    let s = cochain.value(0);
    let a1 = &s[datum.torus_index(1)];
    let a_top = &s[datum.index_of(&top)];
    f.add(&f.mul(&f.mul(&c, &d), a_top), a1) == f.zero()
}
