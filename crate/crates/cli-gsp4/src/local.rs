//! The tame local pipeline at a trivial prime `v`.

use fpcohomology::{balanced_package, cup_gram, h1_dim, is_cocycle, wiles_difference, Cocycle1, FPGroup, LocalTerm};
use galois_rings::{linalg, Elem, GaloisRing, Mat, Subspace};
use gmodules::GMod;
use local_tame::{
    conjugate_cochain, in_condition, is_trivial_prime, lemma55_criterion, nr_conjugator, tangent_nr, tangent_ram,
    twist_certificate, LocalCondition, TameRep,
};
use root_data::{Root, RootDatum};

use crate::error::CliError;
use crate::report::Check;

fn diag(r: &GaloisRing, d: &[Elem]) -> Mat {
    Mat::diagonal(r, d)
}

/// Torus entries `a_i = 1 + 3ip` for `i = 1..n−1`, which are `≡ 1 mod p`.
fn middle(r: &GaloisRing, n: usize) -> Vec<Elem> {
    (1..n).map(|i| r.from_int(1 + 3 * i as i64 * r.p() as i64)).collect()
}

/// `C·ϱ·C⁻¹` with `ϱ(σ) = diag(v, a, 1, v/a)`, `ϱ(τ) = Id` and `C = Id + X_{−2L₁}`.
pub fn unramified_base(n: usize, p: u64, v: u64, m: u32) -> Result<TameRep, CliError> {
    let r = GaloisRing::zp(p, m)?;
    let d = RootDatum::new(n);
    let ve = r.from_int(v as i64);
    let a = middle(&r, n);
    let mut entries = vec![ve.clone()];
    entries.extend(a.iter().cloned());
    entries.push(r.one());
    for x in &a {
        entries.push(r.div(&ve, x)?);
    }
    let u = TameRep::new(v, diag(&r, &entries), Mat::identity(&r, 2 * n), (ve, r.one()))?;
    Ok(u.conjugate(&nr_conjugator(&d, &r))?)
}

/// `ϱ(σ) = diag(1, a, v, v/a)` and `ϱ(τ) = Id + p·X_{−2L₁}`.
pub fn ramified_base(n: usize, p: u64, v: u64, m: u32) -> Result<TameRep, CliError> {
    let r = GaloisRing::zp(p, m)?;
    let d = RootDatum::new(n);
    let ve = r.from_int(v as i64);
    let a = middle(&r, n);
    let mut entries = vec![r.one()];
    entries.extend(a.iter().cloned());
    entries.push(ve.clone());
    for x in &a {
        entries.push(r.div(&ve, x)?);
    }
    let x = d.root_vector(&r, &Root::long(n, 1).neg()).mul_p_pow(1);
    let tau = &Mat::identity(&r, 2 * n) + &x;
    Ok(TameRep::new(v, diag(&r, &entries), tau, (ve, r.one()))?)
}

/// The tangent space of the condition, computed from the base representation at precision 2.
pub fn tangent_space(datum: &RootDatum, kind: LocalCondition, p: u64, v: u64) -> Result<Vec<Cocycle1>, CliError> {
    let f = GaloisRing::zp(p, 1)?;
    Ok(match kind {
        LocalCondition::Unramified => tangent_nr(datum, &f)?,
        LocalCondition::Ramified => tangent_ram(datum, &ramified_base(datum.n(), p, v, 2)?)?,
    })
}

pub fn base_rep(kind: LocalCondition, n: usize, p: u64, v: u64, m: u32) -> Result<TameRep, CliError> {
    match kind {
        LocalCondition::Unramified => unramified_base(n, p, v, m),
        LocalCondition::Ramified => ramified_base(n, p, v, m),
    }
}

/// The cochain with values `Y ↦ (tr(B_i Y))_i`, identifying `Ad⁰` with its dual by the trace form.
pub fn trace_dual(datum: &RootDatum, f: &GaloisRing, c: &Cocycle1) -> Cocycle1 {
    let basis = datum.basis(f);
    Cocycle1::new(
        c.values()
            .iter()
            .map(|v| {
                let y = datum.from_coords(f, v);
                basis.iter().map(|b| (b * &y).trace()).collect()
            })
            .collect(),
    )
}

/// Rank of the local pairing restricted to `𝒩_v^nr × 𝒩_v^nr`.
pub fn self_pairing_rank(datum: &RootDatum, p: u64, v: u64) -> Result<usize, CliError> {
    let f = GaloisRing::zp(p, 1)?;
    let t = tangent_nr(datum, &f)?;
    let duals: Vec<Cocycle1> = t.iter().map(|c| trace_dual(datum, &f, c)).collect();
    let g = FPGroup::tame(v as i64);
    let m = GMod::trivial(&f, datum.dim(), 2);
    Ok(linalg::rank(&cup_gram(datum, &g, &m, &t, &duals)?))
}

/// Tangent directions whose twist of the base at precision `m` cannot be conjugated back.
pub fn twist_failures(
    datum: &RootDatum,
    kind: LocalCondition,
    base: &TameRep,
    directions: &[Cocycle1],
) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for (i, x) in directions.iter().enumerate() {
        if twist_certificate(datum, kind, base, x)?.is_none() {
            out.push(i);
        }
    }
    Ok(out)
}

/// `C·(X_{−2L₁}, 0)·C⁻¹`, a direction of `𝒩_v^nr` that is not absorbed at precision 2.
pub fn unramified_witness(datum: &RootDatum, f: &GaloisRing) -> Result<Cocycle1, CliError> {
    let n = datum.n();
    let mut s = vec![f.zero(); datum.dim()];
    s[datum.index_of(&Root::long(n, 1).neg())] = f.one();
    let c = nr_conjugator(datum, f);
    Ok(conjugate_cochain(datum, &c, &Cocycle1::new(vec![s, vec![f.zero(); datum.dim()]]))?)
}

fn span(f: &GaloisRing, d: usize, cs: &[Cocycle1]) -> Subspace {
    let flat: Vec<Vec<Elem>> = cs.iter().map(|c| c.flat()).collect();
    Subspace::span(f, 2 * d, &flat)
}

/// Checks for the local-tame verb.
pub fn local_checks(n: usize, p: u64, v: u64, kinds: &[LocalCondition], m: u32) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    if !is_trivial_prime(v, p) {
        return Err(CliError::config("v", format!("{v} is not a trivial prime for p = {p}")));
    }
    out.push(Check::new("trivial prime", true, format!("v = {v} is 1 mod {p} and not 1 mod {}", p * p)));
    let d = RootDatum::new(n);
    let f = GaloisRing::zp(p, 1)?;
    let g = FPGroup::tame(v as i64);
    let triv = GMod::trivial(&f, d.dim(), 2);
    let h1 = h1_dim(&g, &triv)?;
    out.push(Check::new("h1", h1 == 2 * d.dim(), format!("h1 = {h1}, 2 dim Ad0 = {}", 2 * d.dim())));
    let h0 = d.dim();
    for &kind in kinds {
        let t = tangent_space(&d, kind, p, v)?;
        let cocycles = t.iter().map(|c| is_cocycle(&g, &triv, c)).collect::<Result<Vec<_>, _>>()?;
        let ok = t.len() == h0 && cocycles.iter().all(|&b| b);
        out.push(Check::new(format!("dim N_v^{}", kind.name()), ok, format!("dim = {}, h0 = {h0}", t.len())));
        let base = base_rep(kind, n, p, v, m)?;
        let in_cond = in_condition(&d, kind, &base)?;
        let fails = twist_failures(&d, kind, &base, &t)?;
        out.push(
            Check::new(
                format!("twist stability {} at m = {m}", kind.name()),
                in_cond && fails.is_empty(),
                format!("{} of {} tangent directions absorbed", t.len() - fails.len(), t.len()),
            )
            .with_certificate(fails.iter().map(|i| format!("direction {i} not absorbed")).collect()),
        );
    }
    if kinds.contains(&LocalCondition::Unramified) {
        let t = tangent_nr(&d, &f)?;
        let l55 = t.iter().all(|c| lemma55_criterion(&d, &f, c));
        let mut s = vec![f.zero(); d.dim()];
        s[d.index_of(&Root::long(n, 1))] = f.one();
        let bad = Cocycle1::new(vec![s, vec![f.zero(); d.dim()]]);
        let counter = !lemma55_criterion(&d, &f, &bad) && !span(&f, d.dim(), &t).contains(&bad.flat());
        out.push(Check::new(
            "a_{2L1} = -(cd)^-1 a_1",
            l55 && counter,
            "holds on every basis element of N_v^nr; fails on (X_{2L1}, 0), which lies outside N_v^nr",
        ));
        let rank = self_pairing_rank(&d, p, v)?;
        out.push(
            Check::new("N_v^nr self-annihilating", rank == 0, format!("Gram rank of the local pairing on N_v^nr is {rank}"))
                .with_certificate(vec!["Ad0 identified with its dual through the trace form".into()]),
        );
        let base2 = unramified_base(n, p, v, 2)?;
        let w = unramified_witness(&d, &f)?;
        let witness = span(&f, d.dim(), &t).contains(&w.flat())
            && twist_certificate(&d, LocalCondition::Unramified, &base2, &w)?.is_none();
        out.push(Check::new(
            "twist stability fails at m = 2",
            witness,
            "C (X_{-2L1}, 0) C^-1 lies in N_v^nr and its twist leaves C_v^nr at precision 2",
        ));
    }
    let package = balanced_package(n as i64, 0, &[]);
    let base = wiles_difference(0, 0, &package);
    let mut with_v = package.clone();
    with_v.push(LocalTerm { tangent_dim: h0 as i64, h0: h0 as i64 });
    let after = wiles_difference(0, 0, &with_v);
    out.push(Check::new(
        "Selmer balance",
        base == 0 && after == base,
        format!("difference {base} for the balanced package, {after} after adding v"),
    ));
    Ok(out)
}
