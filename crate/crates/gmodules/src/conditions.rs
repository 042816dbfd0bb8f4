//! Evaluators for the residual hypotheses on `ρ̄`, each returning a verdict
//! with a printable certificate.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use galois_rings::{linalg, Elem, GaloisRing, Mat, Subspace};
use root_data::{RootDatum, Weight};
use symplectic_core::commutator;

use crate::eigen::eigenspace_decomposition;
use crate::error::GModError;
use crate::group::GroupData;
use crate::hom::restrict_vector;
use crate::module::GMod;

/// Largest number of exponent-box words examined when seeding the unipotent search.
pub const WORD_BOX_CAP: usize = 100_000;

/// Default bound on the size of enumerated matrix groups.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Self {
        Verdict { passed: true, detail: detail.into() }
    }
    fn fail(detail: impl Into<String>) -> Self {
        Verdict { passed: false, detail: detail.into() }
    }
}

/// Which clause of the character-distinctness condition was violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistClause {
    /// `σ_λ` is a Frobenius twist of `σ_λ'` with `λ ≠ λ'`.
    Distinct,
    /// `σ_λ` is a Frobenius twist of `χ̄ σ_λ'`.
    Cyclotomic,
}

/// A pair of weights whose characters agree after `Frob^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistCollision {
    pub clause: TwistClause,
    pub lambda: Weight,
    pub lambda_prime: Weight,
    pub frobenius_power: usize,
}

impl fmt::Display for TwistCollision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.clause {
            TwistClause::Distinct => write!(
                f,
                "sigma_{{{}}} = Frob^{} of sigma_{{{}}}",
                self.lambda, self.frobenius_power, self.lambda_prime
            ),
            TwistClause::Cyclotomic => write!(
                f,
                "sigma_{{{}}} = Frob^{} of chi*sigma_{{{}}}",
                self.lambda, self.frobenius_power, self.lambda_prime
            ),
        }
    }
}

/// `p > 2n`.
pub fn condition_prime_bound(n: usize, p: u64) -> Verdict {
    if p > 2 * n as u64 {
        Verdict::pass(format!("p = {p} > 2n = {}", 2 * n))
    } else {
        Verdict::fail(format!("p = {p} <= 2n = {}", 2 * n))
    }
}

/// Oddness: the fixed space of `Ad ρ̄(c)` has dimension `n²` (= dim 𝔫).
pub fn condition_odd(datum: &RootDatum, c: &Mat) -> Result<Verdict, GModError> {
    let ad = GMod::adjoint(datum, std::slice::from_ref(c))?;
    let fixed = ad.invariants().dim();
    let target = datum.n() * datum.n();
    let detail = format!("dim fixed space of ad(c) = {fixed}, dim n = {target}");
    Ok(if fixed == target { Verdict::pass(detail) } else { Verdict::fail(detail) })
}

fn is_frobenius_twist(f: &GaloisRing, a: &[Elem], b: &[Elem]) -> Option<usize> {
    let mut cur = b.to_vec();
    for j in 0..f.degree() {
        if cur == a {
            return Some(j);
        }
        cur = cur.iter().map(|x| f.frobenius(x)).collect();
    }
    None
}

/// Every violation of the character-distinctness condition, in weight order.
pub fn twist_collisions(datum: &RootDatum, data: &GroupData) -> Vec<TwistCollision> {
    let f = data.field();
    let weights = GroupData::all_weights(datum);
    let sig: Vec<Vec<Elem>> = weights.iter().map(|w| data.sigma(w)).collect();
    let chisig: Vec<Vec<Elem>> = weights.iter().map(|w| data.chi_sigma(w)).collect();
    let mut out = Vec::new();
    for (i, wi) in weights.iter().enumerate() {
        for (j, wj) in weights.iter().enumerate() {
            if i != j {
                if let Some(k) = is_frobenius_twist(f, &sig[i], &sig[j]) {
                    out.push(TwistCollision {
                        clause: TwistClause::Distinct,
                        lambda: wi.clone(),
                        lambda_prime: wj.clone(),
                        frobenius_power: k,
                    });
                }
            }
            if let Some(k) = is_frobenius_twist(f, &sig[i], &chisig[j]) {
                out.push(TwistCollision {
                    clause: TwistClause::Cyclotomic,
                    lambda: wi.clone(),
                    lambda_prime: wj.clone(),
                    frobenius_power: k,
                });
            }
        }
    }
    out
}

/// Checks both distinctness clauses; on failure the verdict lists every collision.
pub fn condition_distinct_characters(datum: &RootDatum, data: &GroupData) -> (Verdict, Vec<TwistCollision>) {
    let all = twist_collisions(datum, data);
    if all.is_empty() {
        let w = GroupData::all_weights(datum).len();
        return (Verdict::pass(format!("no Frobenius-twist coincidences among {} ordered weight pairs", w * w)), all);
    }
    let list: Vec<String> = all.iter().map(|c| c.to_string()).collect();
    (Verdict::fail(format!("{} collisions: {}", all.len(), list.join("; "))), all)
}

/// Multiplicative closure of a set of units of `F_q`.
fn unit_closure(f: &GaloisRing, values: &[Elem]) -> Vec<Elem> {
    let mut seen: HashSet<Elem> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(f.one());
    queue.push_back(f.one());
    while let Some(x) = queue.pop_front() {
        for v in values {
            let y = f.mul(&x, v);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Elem> = seen.into_iter().collect();
    out.sort();
    out
}

/// `F_p`-dimension of the span of the image of a character with the given generator values.
pub fn image_span_dim(f: &GaloisRing, values: &[Elem]) -> usize {
    let fp = GaloisRing::zp(f.p(), 1).expect("prime field");
    let rows: Vec<Vec<Elem>> = unit_closure(f, values).iter().map(|x| restrict_vector(&fp, std::slice::from_ref(x))).collect();
    linalg::rank(&linalg::rows_to_mat(&fp, f.degree(), &rows))
}

/// For each root, the image of `σ_λ` spans `F_q` over `F_p`.
pub fn condition_spanning(datum: &RootDatum, data: &GroupData) -> Verdict {
    let f = data.field();
    for r in datum.roots() {
        let d = image_span_dim(f, &data.sigma(&Weight::Root(r.clone())));
        if d != f.degree() {
            return Verdict::fail(format!("image of sigma_{{{r}}} spans a {d}-dimensional F_p-subspace"));
        }
    }
    Verdict::pass(format!("every sigma_lambda spans F_q (dim {})", f.degree()))
}

fn diag_of(m: &Mat) -> Vec<Elem> {
    m.diag()
}

fn is_unipotent_diag(f: &GaloisRing, d: &[Elem]) -> bool {
    d.iter().all(|x| *x == f.one())
}

fn unit_order(f: &GaloisRing, d: &[Elem]) -> u64 {
    let q1 = f.q() - 1;
    let mut k = 1u64;
    while k <= q1 {
        if q1 % k == 0 && d.iter().all(|x| f.pow(x, k) == f.one()) {
            return k;
        }
        k += 1;
    }
    q1
}

/// Unipotent elements of the image found from the generators alone.
fn unipotent_seeds(data: &GroupData) -> Result<Vec<Mat>, GModError> {
    let f = data.field();
    let imgs = data.images();
    let mut seeds: Vec<Mat> = Vec::new();
    let push = |m: Mat, seeds: &mut Vec<Mat>| {
        if !m.is_identity() && is_unipotent_diag(f, &diag_of(&m)) && !seeds.contains(&m) {
            seeds.push(m);
        }
    };
    let orders: Vec<u64> = imgs.iter().map(|g| unit_order(f, &diag_of(g))).collect();
    for (g, &o) in imgs.iter().zip(&orders) {
        push(g.clone(), &mut seeds);
        push(g.pow(o), &mut seeds);
    }
    for (i, a) in imgs.iter().enumerate() {
        for b in &imgs[i + 1..] {
            push(commutator(a, b)?, &mut seeds);
        }
    }
    // words g_1^{a_1} ... g_k^{a_k} whose diagonal part is trivial
    let diags: Vec<Vec<Elem>> = imgs.iter().map(diag_of).collect();
    let mut exps = vec![0u64; imgs.len()];
    let mut visited = 0usize;
    'outer: loop {
        let mut i = 0;
        loop {
            if i == exps.len() {
                break 'outer;
            }
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
        visited += 1;
        if visited > WORD_BOX_CAP {
            break;
        }
        let mut d = vec![f.one(); diags[0].len()];
        for (k, &e) in exps.iter().enumerate() {
            for (x, y) in d.iter_mut().zip(&diags[k]) {
                *x = f.mul(x, &f.pow(y, e));
            }
        }
        if is_unipotent_diag(f, &d) {
            let mut w = Mat::identity(f, diags[0].len());
            for (k, &e) in exps.iter().enumerate() {
                w = &w * &imgs[k].pow(e);
            }
            push(w, &mut seeds);
        }
    }
    Ok(seeds)
}

enum Closure {
    Reached(usize),
    Closed(HashSet<Vec<u64>>),
}

fn closure_until(gens: &[Mat], target: usize, cap: usize) -> Result<Closure, GModError> {
    let Some(first) = gens.first() else {
        let mut s = HashSet::new();
        return Ok(if target <= 1 {
            Closure::Reached(1)
        } else {
            s.insert(Vec::new());
            Closure::Closed(s)
        });
    };
    let id = Mat::identity(first.ring(), first.rows());
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.flat_key());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.flat_key()) {
                if seen.len() >= target {
                    return Ok(Closure::Reached(seen.len()));
                }
                if seen.len() > cap {
                    return Err(GModError::CapExceeded(cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(Closure::Closed(seen))
}

/// The image contains `U_1(F_q)`.
///
/// Unipotent elements of the image are collected from the generators, closed
/// under conjugation by the generators, and the generated subgroup of `U_1` is
/// enumerated until it reaches `q^{n²}` elements.
pub fn condition_unipotent(datum: &RootDatum, data: &GroupData, cap: usize) -> Result<Verdict, GModError> {
    let f = data.field();
    let n = datum.n();
    let target = (f.q() as u128).pow((n * n) as u32);
    if target > cap as u128 {
        return Err(GModError::CapExceeded(cap));
    }
    let target = target as usize;
    let mut gens = unipotent_seeds(data)?;
    let conj: Vec<(Mat, Mat)> = data
        .images()
        .iter()
        .map(|g| Ok((g.clone(), g.inverse()?)))
        .collect::<Result<_, GModError>>()?;
    loop {
        match closure_until(&gens, target, cap)? {
            Closure::Reached(size) => {
                return Ok(Verdict::pass(format!(
                    "unipotent part of the image has {size} = q^(n^2) elements, generated by {} elements",
                    gens.len()
                )));
            }
            Closure::Closed(set) => {
                let mut added = false;
                let current = gens.clone();
                for (g, gi) in &conj {
                    for s in &current {
                        for c in [&(g * s) * gi, &(gi * s) * g] {
                            if !set.contains(&c.flat_key()) && !gens.contains(&c) {
                                gens.push(c);
                                added = true;
                            }
                        }
                    }
                }
                if !added {
                    return Ok(Verdict::fail(format!(
                        "normal closure of the visible unipotent elements has {} < {target} elements",
                        set.len()
                    )));
                }
            }
        }
    }
}

/// Coordinates of `log(u)` on the simple root vectors: the image of `u` in `U_1/U_2`.
pub fn simple_root_coords(datum: &RootDatum, u: &Mat) -> Result<Vec<Elem>, GModError> {
    let y = symplectic_core::log_unipotent(u)?;
    let c = datum.coords(&y)?;
    Ok(datum.simple_roots().iter().map(|r| c[datum.index_of(r)].clone()).collect())
}

/// `F_q`-rank of the projection of the given unipotent elements to `U_1/U_2`.
pub fn u1_u2_rank(datum: &RootDatum, elements: &[Mat]) -> Result<usize, GModError> {
    let f = elements
        .first()
        .map(|m| m.ring().clone())
        .ok_or_else(|| GModError::DimensionMismatch("no elements".into()))?;
    let rows = elements.iter().map(|u| simple_root_coords(datum, u)).collect::<Result<Vec<_>, _>>()?;
    Ok(linalg::rank(&linalg::rows_to_mat(&f, datum.n(), &rows)))
}

/// Tilouine regularity: `(Ad⁰/𝔟)` and its `χ̄`-twist have no invariants under the decomposition group.
pub fn condition_regular(datum: &RootDatum, data: &GroupData, decomposition: &[usize]) -> Result<Verdict, GModError> {
    if decomposition.is_empty() {
        return Err(GModError::DimensionMismatch("decomposition group has no generators".into()));
    }
    let local = data.restrict(decomposition)?;
    let ad = GMod::adjoint(datum, local.images())?;
    let b = datum.filtration(data.field(), 0);
    let quo = ad.quotient(&b)?;
    let h0 = quo.invariants().dim();
    let h0_twist = quo.twist(local.chi()).invariants().dim();
    let detail = format!("dim H0(Ad/b) = {h0}, dim H0((Ad/b)(chi)) = {h0_twist}");
    Ok(if h0 == 0 && h0_twist == 0 { Verdict::pass(detail) } else { Verdict::fail(detail) })
}

/// Proof that the unipotent, distinctness and spanning conditions were checked.
#[derive(Clone, Debug)]
pub struct ConditionsVerified {
    _private: (),
}

/// Checks the unipotent, distinctness and spanning conditions, returning a token on success.
pub fn verify_core_conditions(
    datum: &RootDatum,
    data: &GroupData,
    cap: usize,
) -> Result<ConditionsVerified, GModError> {
    let u = condition_unipotent(datum, data, cap)?;
    if !u.passed {
        return Err(GModError::HypothesesNotVerified(format!("unipotent image: {}", u.detail)));
    }
    let (d, _) = condition_distinct_characters(datum, data);
    if !d.passed {
        return Err(GModError::HypothesesNotVerified(format!("distinct characters: {}", d.detail)));
    }
    let s = condition_spanning(datum, data);
    if !s.passed {
        return Err(GModError::HypothesesNotVerified(format!("spanning: {}", s.detail)));
    }
    Ok(ConditionsVerified { _private: () })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Adjoint,
    Dual,
}

/// The `σ_{2L₁}` eigenspace of `Ad⁰ρ̄`, or the `χ̄σ_{2L₁}` eigenspace of `Ad⁰ρ̄*`.
pub fn highest_eigenspace(
    datum: &RootDatum,
    data: &GroupData,
    module: &GMod,
    side: Side,
) -> Result<Subspace, GModError> {
    let top = Weight::Root(datum.highest_root());
    let chars = match side {
        Side::Adjoint => data.sigma(&top),
        Side::Dual => data.chi_sigma(&top),
    };
    let want: Vec<Elem> = data.torus().iter().map(|&t| chars[t].clone()).collect();
    let pieces = eigenspace_decomposition(module, data.torus())?;
    Ok(pieces
        .into_iter()
        .find(|p| p.values == want)
        .map(|p| p.space)
        .unwrap_or_else(|| Subspace::zero(module.field(), module.dim())))
}

/// True iff the stable subspace `s` is zero or contains the highest eigenspace.
pub fn check_highest_eigenspace(
    _verified: &ConditionsVerified,
    datum: &RootDatum,
    data: &GroupData,
    module: &GMod,
    s: &Subspace,
    side: Side,
) -> Result<bool, GModError> {
    if !module.is_stable(s) {
        return Err(GModError::NotStable);
    }
    if s.dim() == 0 {
        return Ok(true);
    }
    let top = highest_eigenspace(datum, data, module, side)?;
    Ok(s.contains_space(&top))
}

/// Searches stable closures of the given seeds for a counterexample to the highest-eigenspace property.
pub fn search_highest_eigenspace_counterexample(
    verified: &ConditionsVerified,
    datum: &RootDatum,
    data: &GroupData,
    module: &GMod,
    side: Side,
    seeds: &[Vec<Elem>],
) -> Result<Option<Vec<Elem>>, GModError> {
    for v in seeds {
        let s = module.stable_closure(std::slice::from_ref(v));
        if !check_highest_eigenspace(verified, datum, data, module, &s, side)? {
            return Ok(Some(v.clone()));
        }
    }
    Ok(None)
}
