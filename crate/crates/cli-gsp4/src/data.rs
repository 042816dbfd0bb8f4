//! Residual group data and surrogate ladders built from a list of torus exponents.

use deformation_ladder::{Designations, LiftLadder, LiftOutcome, ObstructionWitness, ValuationPattern};
use fpcohomology::{Cocycle1, FPGroup};
use galois_rings::{make_field, Elem, GaloisRing, Mat};
use gmodules::GroupData;
use root_data::{Root, RootDatum};

use crate::error::CliError;

/// `F_q` with `q = p^degree`, using the first irreducible monic modulus in counting order.
pub fn residue_field(p: u64, degree: usize) -> Result<GaloisRing, CliError> {
    if degree <= 1 {
        return Ok(GaloisRing::zp(p, 1)?);
    }
    let total = p.checked_pow(degree as u32).ok_or_else(|| CliError::config("q_degree", "field is too large"))?;
    for code in 0..total {
        let mut c = code;
        let mut modulus: Vec<u64> = (0..degree)
            .map(|_| {
                let x = c % p;
                c /= p;
                x
            })
            .collect();
        modulus.push(1);
        if let Ok(spec) = make_field(p, degree, &modulus) {
            return Ok(GaloisRing::new(spec, 1)?);
        }
    }
    Err(CliError::config("q_degree", format!("no irreducible polynomial of degree {degree} over F_{p}")))
}

/// The common value of `e_i + e_{n+i}`, which makes `diag(g^{e_i})` a similitude.
pub fn similitude_exponent(exponents: &[i64]) -> Result<i64, CliError> {
    let n = exponents.len() / 2;
    if n == 0 || exponents.len() != 2 * n {
        return Err(CliError::config("exponents", "expected 2n exponents"));
    }
    let s = exponents[0] + exponents[n];
    if (0..n).any(|i| exponents[i] + exponents[n + i] != s) {
        return Err(CliError::config(
            "exponents",
            format!("e_i + e_(n+i) must be constant for a symplectic similitude, got {exponents:?}"),
        ));
    }
    Ok(s)
}

pub fn torus_image(f: &GaloisRing, g: &Elem, exponents: &[i64]) -> Result<Mat, CliError> {
    let d = exponents.iter().map(|&k| f.pow_signed(g, k)).collect::<Result<Vec<_>, _>>()?;
    Ok(Mat::diagonal(f, &d))
}

/// `diag(ε, −ε)` with alternating signs `ε = (−1, 1, −1, ...)`; similitude `−1`.
pub fn complex_conjugation(f: &GaloisRing, n: usize) -> Mat {
    let eps: Vec<i64> = (0..n).map(|i| if i % 2 == 0 { -1 } else { 1 }).collect();
    let d: Vec<Elem> = eps.iter().chain(eps.iter().map(|e| -e).collect::<Vec<_>>().iter()).map(|&e| f.from_int(e)).collect();
    Mat::diagonal(f, &d)
}

/// One torus generator `t` with image `diag(g^{e_i})` and one generator `u_i = Id + X_{α_i}`
/// for each simple root. Simple root vectors square to zero, so `Id + X` is the exponential.
pub fn residual_data(datum: &RootDatum, f: &GaloisRing, exponents: &[i64]) -> Result<GroupData, CliError> {
    let g = f.primitive_element();
    let s = similitude_exponent(exponents)?;
    let id = Mat::identity(f, 2 * datum.n());
    let mut labels = vec!["t".to_string()];
    let mut images = vec![torus_image(f, &g, exponents)?];
    let mut chi = vec![g.clone()];
    let mut kappa = vec![f.pow_signed(&g, s)?];
    for (i, r) in datum.simple_roots().iter().enumerate() {
        labels.push(format!("u{}", i + 1));
        images.push(&id + &datum.root_vector(f, r));
        chi.push(f.one());
        kappa.push(f.one());
    }
    Ok(GroupData::new(labels, images, vec![0], chi, kappa)?)
}

pub fn designations(f: &GaloisRing, n: usize, generators: usize, assumptions: Vec<String>) -> Designations {
    Designations {
        complex_conjugation: Some(complex_conjugation(f, n)),
        decomposition: Some((0..generators).collect()),
        assumptions,
        group_cap: None,
    }
}

/// Exponent `k` with `σ_λ = χ̄^k` for the diagonal character with the given exponents.
pub fn root_exponent(root: &Root, exponents: &[i64]) -> i64 {
    let (i, j) = root.pivot();
    exponents[i] - exponents[j]
}

/// A named step of a lifting ladder.
#[derive(Clone, Debug)]
pub struct Stage {
    pub name: String,
    pub ladder: LiftLadder,
}

/// Every ladder produced on the way from `r̄` to the target precision.
#[derive(Clone, Debug)]
pub struct LadderTrace {
    pub stages: Vec<Stage>,
    pub obstruction: Option<ObstructionWitness>,
    /// The cocycle used for the twist at precision 2, when one was applied.
    pub twist: Option<Cocycle1>,
    /// Integer exponents `a_i` in the relations `t u_i t⁻¹ = u_i^{a_i}`.
    pub conjugation_exponents: Vec<i64>,
}

impl LadderTrace {
    pub fn top(&self) -> &LiftLadder {
        &self.stages.last().expect("trace has at least r-bar").ladder
    }

    pub fn stage(&self, name: &str) -> Option<&LiftLadder> {
        self.stages.iter().find(|s| s.name == name).map(|s| &s.ladder)
    }
}

/// `⟨t, u_1..u_n | t^{p−1}, t u_i t⁻¹ u_i^{−a_i}⟩`, where `a_i` is an integer representative of
/// the Teichmüller lift of `σ_{α_i}(t)` modulo `p^top`.
pub fn surrogate_group(
    datum: &RootDatum,
    f: &GaloisRing,
    exponents: &[i64],
    top: &GaloisRing,
) -> Result<(FPGroup, Vec<i64>), CliError> {
    let g = f.primitive_element();
    let simple = datum.simple_roots();
    let mut labels = vec!["t".to_string()];
    let mut relations = vec![vec![(0usize, f.p() as i64 - 1)]];
    let mut exps = Vec::new();
    for (i, r) in simple.iter().enumerate() {
        labels.push(format!("u{}", i + 1));
        let sigma = f.pow_signed(&g, root_exponent(r, exponents))?;
        let a = top.to_int(&top.teichmuller(&sigma)) as i64;
        exps.push(a);
        relations.push(vec![(0, 1), (i + 1, 1), (0, -1), (i + 1, -a)]);
    }
    Ok((FPGroup::new(labels, relations)?, exps))
}

/// Builds `r̄` on the surrogate group, lifts it to precision 2, twists by the cocycle with
/// `f(u_i) = X_{α_i}` and `f(t) = 0`, then lifts to `target`.
///
/// `κ = teich(κ̄)·χ^k` where `χ(t)` is the Teichmüller lift of the primitive root and `χ(u_i) = 1`.
pub fn surrogate_ladder(
    datum: &RootDatum,
    p: u64,
    exponents: &[i64],
    target: u32,
    kappa_k: u64,
    pattern: Option<ValuationPattern>,
) -> Result<LadderTrace, CliError> {
    let f = GaloisRing::zp(p, 1)?;
    let g = f.primitive_element();
    let s = similitude_exponent(exponents)?;
    let top = GaloisRing::zp(p, target.max(2))?;
    let (gamma, conjugation_exponents) = surrogate_group(datum, &f, exponents, &top)?;
    let chi_t = top.teichmuller(&g);
    let kappa_t = top.mul(&top.teichmuller(&f.pow_signed(&g, s)?), &top.pow(&chi_t, kappa_k));
    let k = gamma.num_generators();
    let mut kappa = vec![top.one(); k];
    kappa[0] = kappa_t;
    let mut images = vec![torus_image(&f, &g, exponents)?];
    images.extend((1..k).map(|_| Mat::identity(&f, 2 * datum.n())));
    let rbar = LiftLadder::new(gamma, datum.clone(), images, kappa, top, pattern)?;
    let mut trace = LadderTrace {
        stages: vec![Stage { name: "r-bar".into(), ladder: rbar.clone() }],
        obstruction: None,
        twist: None,
        conjugation_exponents,
    };
    if target < 2 {
        return Ok(trace);
    }
    let r2p = match rbar.lift_step()? {
        LiftOutcome::Lifted(l) => l,
        LiftOutcome::Obstructed(w) => {
            trace.obstruction = Some(w);
            return Ok(trace);
        }
    };
    trace.stages.push(Stage { name: "r2'".into(), ladder: r2p.clone() });
    let zero = vec![f.zero(); datum.dim()];
    let mut values = vec![zero.clone()];
    for r in datum.simple_roots() {
        let mut v = zero.clone();
        v[datum.index_of(&r)] = f.one();
        values.push(v);
    }
    let cocycle = Cocycle1::new(values);
    let mut cur = r2p.twist(&cocycle)?;
    trace.twist = Some(cocycle);
    trace.stages.push(Stage { name: "r2".into(), ladder: cur.clone() });
    while cur.precision() < target {
        match cur.lift_step()? {
            LiftOutcome::Lifted(next) => {
                cur = next;
                trace.stages.push(Stage { name: format!("r{}", cur.precision()), ladder: cur.clone() });
            }
            LiftOutcome::Obstructed(w) => {
                trace.obstruction = Some(w);
                break;
            }
        }
    }
    Ok(trace)
}

/// Expected similitudes `χ^s` on the generators at the ladder's precision.
pub fn expected_similitudes(ladder: &LiftLadder) -> Result<Vec<Elem>, CliError> {
    let r = ladder.ring();
    ladder.kappa().iter().map(|k| Ok(ladder.kappa_ring().reduce(k, r)?)).collect()
}
