use galois_rings::{linalg, Elem, GaloisRing, Mat};
use root_data::RootDatum;

use crate::error::LadderError;
use crate::ladder::LiftLadder;

/// Default bound on the number of conjugator candidates visited.
pub const DEFAULT_SEARCH_CAP: usize = 100_000;

/// Cayley transform `(Id + Z/2)(Id − Z/2)⁻¹`, symplectic for `Z ∈ sp_2n` with `Z ≡ 0 mod p`.
pub fn cayley(z: &Mat) -> Result<Mat, LadderError> {
    let r = z.ring();
    let h = z.scale(&r.inv(&r.from_int(2))?);
    let id = Mat::identity(r, z.rows());
    Ok(&(&id + &h) * &(&id - &h).inverse()?)
}

struct Search<'a> {
    datum: &'a RootDatum,
    lhs: &'a [Mat],
    rhs_inv: Vec<Mat>,
    /// `(Ad ρ̄(g) − 1)` stacked over generators.
    system: Mat,
    kernel: Vec<Vec<Elem>>,
    field: GaloisRing,
    cap: usize,
    visited: usize,
}

impl Search<'_> {
    fn run(&mut self, level: u32, k: Mat) -> Result<Option<Mat>, LadderError> {
        let ring = k.ring().clone();
        let m = ring.precision();
        if level >= m {
            return Ok(Some(k));
        }
        self.visited += 1;
        if self.visited > self.cap {
            return Err(LadderError::CapExceeded(self.cap));
        }
        let ki = k.inverse()?;
        let id = Mat::identity(&ring, k.rows());
        let mut e = Vec::new();
        for (g, a) in self.lhs.iter().enumerate() {
            let w = &(&(&(&k * a) * &ki) * &self.rhs_inv[g]) - &id;
            if w.valuation().is_some_and(|v| v < level) {
                return Ok(None);
            }
            let c = w.shift_down(level, &self.field);
            match self.datum.coords(&c) {
                Ok(v) => e.extend(v),
                Err(_) => return Ok(None),
            }
        }
        let Some(y0) = linalg::solve(&self.system, &e) else {
            return Ok(None);
        };
        let q = self.field.q() as usize;
        let dk = self.kernel.len();
        let combos = if level + 1 >= m { 1 } else { q.checked_pow(dk as u32).unwrap_or(usize::MAX) };
        if combos > self.cap {
            return Err(LadderError::CapExceeded(self.cap));
        }
        let elems = self.field.elements();
        for code in 0..combos {
            let mut y = y0.clone();
            let mut c = code;
            for z in &self.kernel {
                let coef = &elems[c % q];
                c /= q;
                for (yi, zi) in y.iter_mut().zip(z) {
                    *yi = self.field.add(yi, &self.field.mul(coef, zi));
                }
            }
            let step = self.datum.from_coords(&self.field, &y).lift_to(&ring)?.mul_p_pow(level);
            let next = &cayley(&step)? * &k;
            if let Some(found) = self.run(level + 1, next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Searches for `K ≡ Id mod p` in `Sp_2n` with `K·L₁(g)·K⁻¹ = L₂(g)` for every generator.
///
/// The search proceeds level by level; at each level the correction is determined up to the
/// invariants of the residual adjoint action, and those choices are enumerated.
pub fn strict_conjugator(a: &LiftLadder, b: &LiftLadder, cap: usize) -> Result<Option<Mat>, LadderError> {
    if a.gamma() != b.gamma() {
        return Err(LadderError::Incomparable("different presentations".into()));
    }
    if a.precision() != b.precision() || a.ring().q() != b.ring().q() {
        return Err(LadderError::Incomparable("different coefficient rings".into()));
    }
    let ring = a.ring().clone();
    let id = Mat::identity(&ring, a.image(0).rows());
    if a.residual_images()? != b.residual_images()? || a.similitudes()? != b.similitudes()? {
        return Ok(None);
    }
    let datum = a.datum();
    let field = ring.residue_field();
    let module = b.residual_module()?;
    let d = datum.dim();
    let blocks: Vec<Mat> = module.actions().iter().map(|g| g - &Mat::identity(&field, d)).collect();
    let mut system = Mat::zeros(&field, d * blocks.len(), d);
    for (i, blk) in blocks.iter().enumerate() {
        system.set_block(i * d, 0, blk);
    }
    let kernel = linalg::kernel(&system);
    let rhs_inv = b.images().iter().map(|x| x.inverse()).collect::<Result<Vec<_>, _>>()?;
    let mut s = Search {
        datum,
        lhs: a.images(),
        rhs_inv,
        system,
        kernel,
        field,
        cap,
        visited: 0,
    };
    s.run(1, id)
}

pub fn strict_equivalent(a: &LiftLadder, b: &LiftLadder) -> Result<bool, LadderError> {
    Ok(strict_conjugator(a, b, DEFAULT_SEARCH_CAP)?.is_some())
}
