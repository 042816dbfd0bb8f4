//! Randomized and exhaustive oracles for the `n = 2` unipotent and module-theoretic claims.

use galois_rings::{Elem, GaloisRing, Mat, Subspace};
use gmodules::{eigenspace_decomposition, hom_invariants, GMod, GroupData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_data::{Root, RootDatum};
use symplectic_core::{commutator, exp_nilpotent, filtration_level, group_order, Level};

use crate::data::residual_data;
use crate::error::CliError;

fn require_prime(p: u64, n: usize) -> Result<GaloisRing, CliError> {
    if p <= 2 * n as u64 {
        return Err(CliError::PrimeTooSmall { p, bound: 2 * n as u64 });
    }
    Ok(GaloisRing::zp(p, 1)?)
}

fn exp(x: &Mat) -> Result<Mat, CliError> {
    Ok(exp_nilpotent(x)?.into_mat())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorOutcome {
    /// Ordered pairs `(λ, μ, a, b)` examined.
    pub cases: usize,
    /// Descriptions of pairs where `{x, y}·exp(−[aX_λ, bX_μ])` is not in `U_{k+l+1}`.
    pub failures: Vec<String>,
}

/// `{exp(aX_λ), exp(bX_μ)} ≡ exp([aX_λ, bX_μ]) mod U_{ht λ + ht μ + 1}` for every ordered pair
/// of positive roots and all nonzero `a, b ∈ F_p`.
pub fn commutator_identity(p: u64) -> Result<CommutatorOutcome, CliError> {
    let f = require_prime(p, 2)?;
    let d = RootDatum::new(2);
    let pos = d.positive_roots();
    let scalars: Vec<Elem> = (1..p as i64).map(|a| f.from_int(a)).collect();
    let mut out = CommutatorOutcome { cases: 0, failures: Vec::new() };
    for l in &pos {
        for m in &pos {
            let bound = l.height() + m.height() + 1;
            for a in &scalars {
                for b in &scalars {
                    let xl = d.root_vector(&f, l).scale(a);
                    let xm = d.root_vector(&f, m).scale(b);
                    let c = commutator(&exp(&xl)?, &exp(&xm)?)?;
                    let w = &c * &exp(&xl.bracket(&xm).neg())?;
                    out.cases += 1;
                    let ok = match filtration_level(&d, &w)? {
                        Level::Infinite => true,
                        Level::Finite(k) => k >= bound,
                    };
                    if !ok {
                        out.failures.push(format!("{l}, {m}, a = {}, b = {}", f.render(a), f.render(b)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A uniformly random element of `U_2 = exp(F_p X_{L1+L2} + F_p X_{2L1})`.
fn random_u2(d: &RootDatum, f: &GaloisRing, rng: &mut ChaCha8Rng) -> Result<Mat, CliError> {
    let p = f.p() as i64;
    let y = &d.root_vector(f, &Root::sum(2, 1, 2)).scale(&f.from_int(rng.gen_range(0..p)))
        + &d.root_vector(f, &Root::long(2, 1)).scale(&f.from_int(rng.gen_range(0..p)));
    exp(&y)
}

/// Order of `⟨exp(aX_{L1−L2})·u, exp(bX_{2L2})·u'⟩`.
pub fn saturation_order(p: u64, a: i64, u: &Mat, b: i64, u2: &Mat) -> Result<usize, CliError> {
    let f = require_prime(p, 2)?;
    let d = RootDatum::new(2);
    let x1 = &exp(&d.root_vector(&f, &Root::diff(2, 1, 2)).scale(&f.from_int(a)))? * u;
    let x2 = &exp(&d.root_vector(&f, &Root::long(2, 2)).scale(&f.from_int(b)))? * u2;
    let cap = (p as usize).pow(4) * 4;
    Ok(group_order(&[x1, x2], cap)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationOutcome {
    pub expected: usize,
    pub orders: Vec<usize>,
}

impl SaturationOutcome {
    pub fn all_saturate(&self) -> bool {
        self.orders.iter().all(|&o| o == self.expected)
    }
}

/// Random subgroups generated by lifts of the simple-root generators of `U_1/U_2`,
/// with nonzero leading scalars and random `U_2` tails.
pub fn saturation_trials(p: u64, trials: usize, seed: u64) -> Result<SaturationOutcome, CliError> {
    let f = require_prime(p, 2)?;
    let d = RootDatum::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = Vec::with_capacity(trials);
    for _ in 0..trials {
        let a = rng.gen_range(1..p as i64);
        let b = rng.gen_range(1..p as i64);
        let u = random_u2(&d, &f, &mut rng)?;
        let u2 = random_u2(&d, &f, &mut rng)?;
        orders.push(saturation_order(p, a, &u, b, &u2)?);
    }
    Ok(SaturationOutcome { expected: (p as usize).pow(4), orders })
}

/// Both halves: the commutator identity and `trials` saturation trials.
pub fn saturation_oracle(p: u64, trials: usize, seed: u64) -> Result<bool, CliError> {
    let c = commutator_identity(p)?;
    let s = saturation_trials(p, trials, seed)?;
    Ok(c.failures.is_empty() && s.all_saturate())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureOutcome {
    pub random_seeds: usize,
    pub eigen_seeds: usize,
    /// Dimensions of closures that fell short of `Ad⁰`.
    pub failures: Vec<usize>,
}

/// Stable closures in `Ad⁰ρ̄` of vectors with nonzero `X_{−2L₁}` coordinate, for the diagonal
/// data with the given exponents: `random` random seeds plus every eigenvector of the torus up to scaling.
pub fn closure_oracle(p: u64, exponents: &[i64], random: usize, seed: u64) -> Result<ClosureOutcome, CliError> {
    let f = require_prime(p, 2)?;
    let d = RootDatum::new(2);
    let data = residual_data(&d, &f, exponents)?;
    let ad = GMod::adjoint(&d, data.images())?;
    let low = d.index_of(&Root::long(2, 1).neg());
    let dim = d.dim();
    let mut out = ClosureOutcome { random_seeds: 0, eigen_seeds: 0, failures: Vec::new() };
    let test = |v: &[Elem], out: &mut ClosureOutcome| {
        let s = ad.stable_closure(&[v.to_vec()]);
        if s.dim() != dim {
            out.failures.push(s.dim());
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.random_seeds < random {
        let v: Vec<Elem> = (0..dim).map(|_| f.from_int(rng.gen_range(0..p as i64))).collect();
        if f.is_zero(&v[low]) {
            continue;
        }
        test(&v, &mut out);
        out.random_seeds += 1;
    }
    for piece in eigenspace_decomposition(&ad, data.torus())? {
        for v in projective_vectors(&piece.space) {
            if !f.is_zero(&v[low]) {
                test(&v, &mut out);
                out.eigen_seeds += 1;
            }
        }
    }
    Ok(out)
}

/// One representative of every line in a subspace over `F_p`: coefficient vectors whose last
/// nonzero entry is 1. Stable closures only depend on the line, so this covers every vector.
fn projective_vectors(s: &Subspace) -> Vec<Vec<Elem>> {
    let f = s.ring();
    let p = f.p() as usize;
    let mut out = Vec::new();
    for lead in 0..s.dim() {
        for code in 0..p.pow(lead as u32) {
            let mut c = code;
            let mut v = s.basis()[lead].clone();
            for b in &s.basis()[..lead] {
                let a = f.from_int((c % p) as i64);
                c /= p;
                for (x, y) in v.iter_mut().zip(b) {
                    *x = f.add(x, &f.mul(&a, y));
                }
            }
            out.push(v);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomOutcome {
    /// `dim Hom(P, Ad⁰ρ̄*)^Γ` for each distinct nonzero stable `P` generated by a dual eigenvector.
    pub dual_to_dual: Vec<usize>,
    /// `dim Hom(Q, P)^Γ` for stable `Q ⊂ Ad⁰ρ̄` and `P ⊂ Ad⁰ρ̄*` generated by eigenvectors.
    pub adjoint_to_dual: Vec<usize>,
}

fn eigen_generated(m: &GMod, torus: &[usize]) -> Result<Vec<Subspace>, CliError> {
    let mut out: Vec<Subspace> = Vec::new();
    for piece in eigenspace_decomposition(m, torus)? {
        for v in piece.space.basis() {
            let s = m.stable_closure(std::slice::from_ref(v));
            if s.dim() > 0 && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Equivariant Hom dimensions over `F_p` between eigenvector-generated stable submodules.
pub fn hom_oracle(datum: &RootDatum, data: &GroupData) -> Result<HomOutcome, CliError> {
    let ad = GMod::adjoint(datum, data.images())?;
    let dual = GMod::dual(datum, data.images(), data.chi())?;
    let ps = eigen_generated(&dual, data.torus())?;
    let qs = eigen_generated(&ad, data.torus())?;
    let psub = ps.iter().map(|s| dual.submodule(s)).collect::<Result<Vec<_>, _>>()?;
    let qsub = qs.iter().map(|s| ad.submodule(s)).collect::<Result<Vec<_>, _>>()?;
    let dual_to_dual = psub.iter().map(|p| hom_invariants(p, &dual)).collect::<Result<Vec<_>, _>>()?;
    let mut adjoint_to_dual = Vec::new();
    for q in &qsub {
        for p in &psub {
            adjoint_to_dual.push(hom_invariants(q, p)?);
        }
    }
    Ok(HomOutcome { dual_to_dual, adjoint_to_dual })
}
