use galois_rings::{linalg, Elem, Mat, Subspace};
use gmodules::GMod;

use crate::error::CohomError;
use crate::group::FPGroup;

/// `(Σ_{j<e} A^j, A^e)` for `e ≥ 0`, by doubling.
fn geometric(a: &Mat, e: u64) -> (Mat, Mat) {
    let f = a.ring();
    let n = a.rows();
    if e == 0 {
        return (Mat::zeros(f, n, n), Mat::identity(f, n));
    }
    if e % 2 == 0 {
        let (s, p) = geometric(a, e / 2);
        let s2 = &s + &(&p * &s);
        (s2, &p * &p)
    } else {
        let (s, p) = geometric(a, e - 1);
        (&s + &p, &p * a)
    }
}

/// Linear map `f(g) ↦ f(g^e)` for a cocycle, and the action of `g^e`.
pub fn power_rule(a: &Mat, e: i64) -> Result<(Mat, Mat), CohomError> {
    if e >= 0 {
        return Ok(geometric(a, e as u64));
    }
    let (s, _) = geometric(a, e.unsigned_abs());
    let inv_pow = a.pow_signed(e)?;
    Ok(((&inv_pow * &s).neg(), inv_pow))
}

fn check_counts(gamma: &FPGroup, m: &GMod) -> Result<(), CohomError> {
    if gamma.num_generators() != m.num_generators() {
        return Err(CohomError::GeneratorCount { module: m.num_generators(), group: gamma.num_generators() });
    }
    Ok(())
}

/// Action of a word on the module.
pub fn word_action(m: &GMod, w: &[(usize, i64)]) -> Result<Mat, CohomError> {
    let mut acc = Mat::identity(m.field(), m.dim());
    for &(g, e) in w {
        acc = &acc * &m.action(g).pow_signed(e)?;
    }
    Ok(acc)
}

/// Fox-derivative matrix: row block `r`, column block `g` is `∂r/∂g` acting on `M`.
///
/// A tuple of generator values `(f(g))_g` is a cocycle exactly when it lies in the kernel.
pub fn fox_matrix(gamma: &FPGroup, m: &GMod) -> Result<Mat, CohomError> {
    check_counts(gamma, m)?;
    let d = m.dim();
    let k = gamma.num_generators();
    let f = m.field();
    let rels = gamma.relations();
    let mut out = Mat::zeros(f, rels.len() * d, k * d);
    for (ri, r) in rels.iter().enumerate() {
        let mut prefix = Mat::identity(f, d);
        let mut blocks: Vec<Mat> = vec![Mat::zeros(f, d, d); k];
        for &(g, e) in r {
            let (t, act) = power_rule(m.action(g), e)?;
            blocks[g] = &blocks[g] + &(&prefix * &t);
            prefix = &prefix * &act;
        }
        for (g, b) in blocks.iter().enumerate() {
            out.set_block(ri * d, g * d, b);
        }
    }
    Ok(out)
}

/// A 1-cocycle given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle1 {
    values: Vec<Vec<Elem>>,
}

impl Cocycle1 {
    pub fn new(values: Vec<Vec<Elem>>) -> Self {
        Cocycle1 { values }
    }

    pub fn zero(m: &GMod) -> Self {
        Cocycle1 { values: vec![vec![m.field().zero(); m.dim()]; m.num_generators()] }
    }

    /// Splits a flat vector of length `k·dim` into generator values.
    pub fn from_flat(flat: &[Elem], dim: usize) -> Self {
        Cocycle1 { values: flat.chunks(dim.max(1)).map(|c| c.to_vec()).collect() }
    }

    pub fn values(&self) -> &[Vec<Elem>] {
        &self.values
    }
    pub fn value(&self, g: usize) -> &[Elem] {
        &self.values[g]
    }

    pub fn flat(&self) -> Vec<Elem> {
        self.values.concat()
    }

    pub fn add(&self, other: &Cocycle1, m: &GMod) -> Cocycle1 {
        let f = m.field();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect())
            .collect();
        Cocycle1 { values }
    }

    pub fn scale(&self, c: &Elem, m: &GMod) -> Cocycle1 {
        let f = m.field();
        Cocycle1 { values: self.values.iter().map(|v| v.iter().map(|x| f.mul(c, x)).collect()).collect() }
    }

    /// Value on an arbitrary word, via `f(gh) = f(g) + g·f(h)`.
    pub fn eval_word(&self, m: &GMod, w: &[(usize, i64)]) -> Result<Vec<Elem>, CohomError> {
        let f = m.field();
        let mut prefix = Mat::identity(f, m.dim());
        let mut acc = vec![f.zero(); m.dim()];
        for &(g, e) in w {
            let (t, act) = power_rule(m.action(g), e)?;
            let contrib = (&prefix * &t).apply(&self.values[g]);
            acc = acc.iter().zip(&contrib).map(|(x, y)| f.add(x, y)).collect();
            prefix = &prefix * &act;
        }
        Ok(acc)
    }
}

pub fn is_cocycle(gamma: &FPGroup, m: &GMod, c: &Cocycle1) -> Result<bool, CohomError> {
    if gamma.relations().is_empty() {
        return Ok(true);
    }
    let d = fox_matrix(gamma, m)?;
    Ok(d.apply(&c.flat()).iter().all(|x| m.field().is_zero(x)))
}

/// Basis of `Z¹(Γ, M)`.
pub fn z1_basis(gamma: &FPGroup, m: &GMod) -> Result<Vec<Cocycle1>, CohomError> {
    check_counts(gamma, m)?;
    let total = gamma.num_generators() * m.dim();
    if total == 0 {
        return Ok(Vec::new());
    }
    let f = m.field();
    let flat: Vec<Vec<Elem>> = if gamma.relations().is_empty() {
        (0..total)
            .map(|i| {
                let mut v = vec![f.zero(); total];
                v[i] = f.one();
                v
            })
            .collect()
    } else {
        linalg::kernel(&fox_matrix(gamma, m)?)
    };
    Ok(flat.iter().map(|v| Cocycle1::from_flat(v, m.dim())).collect())
}

/// The coboundary `g ↦ g·x − x`.
pub fn coboundary(m: &GMod, x: &[Elem]) -> Cocycle1 {
    let f = m.field();
    let values = m
        .actions()
        .iter()
        .map(|a| a.apply(x).iter().zip(x).map(|(y, z)| f.sub(y, z)).collect())
        .collect();
    Cocycle1 { values }
}

/// `B¹` and `Z¹` as subspaces of the flattened cochain space.
pub fn cocycle_spaces(gamma: &FPGroup, m: &GMod) -> Result<(Subspace, Subspace), CohomError> {
    let total = gamma.num_generators() * m.dim();
    let f = m.field();
    let z: Vec<Vec<Elem>> = z1_basis(gamma, m)?.iter().map(|c| c.flat()).collect();
    let b: Vec<Vec<Elem>> = (0..m.dim())
        .map(|i| {
            let mut e = vec![f.zero(); m.dim()];
            e[i] = f.one();
            coboundary(m, &e).flat()
        })
        .collect();
    Ok((Subspace::span(f, total, &b), Subspace::span(f, total, &z)))
}

/// `dim H¹ = dim Z¹ − (dim M − dim M^Γ)`.
pub fn h1_dim(gamma: &FPGroup, m: &GMod) -> Result<usize, CohomError> {
    let z = z1_basis(gamma, m)?.len();
    let b = m.dim() - m.invariants().dim();
    Ok(z - b)
}

/// Cocycles whose classes form a basis of `H¹`.
pub fn h1_representatives(gamma: &FPGroup, m: &GMod) -> Result<Vec<Cocycle1>, CohomError> {
    let (b, _) = cocycle_spaces(gamma, m)?;
    let mut acc = b;
    let mut out = Vec::new();
    for c in z1_basis(gamma, m)? {
        let v = c.flat();
        if !acc.contains(&v) {
            acc = acc.add_vectors(std::slice::from_ref(&v));
            out.push(c);
        }
    }
    Ok(out)
}

/// Whether two cocycles differ by a coboundary.
pub fn cohomologous(gamma: &FPGroup, m: &GMod, a: &Cocycle1, b: &Cocycle1) -> Result<bool, CohomError> {
    let (bsp, _) = cocycle_spaces(gamma, m)?;
    let f = m.field();
    let diff: Vec<Elem> = a.flat().iter().zip(b.flat()).map(|(x, y)| f.sub(x, &y)).collect();
    Ok(bsp.contains(&diff))
}
