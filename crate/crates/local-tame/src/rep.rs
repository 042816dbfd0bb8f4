use galois_rings::{Elem, GaloisRing, Mat};
use symplectic_core::similitude;

use crate::error::LocalError;

/// A representation of the tame group `⟨σ, τ | σ τ σ⁻¹ = τ^v⟩` into `GSp_2n(W/p^m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameRep {
    v: u64,
    a: Mat,
    b: Mat,
    kappa: (Elem, Elem),
}

impl TameRep {
    /// Validates the similitudes against `kappa = (κ(σ), κ(τ))` and the tame relation.
    pub fn new(v: u64, a: Mat, b: Mat, kappa: (Elem, Elem)) -> Result<Self, LocalError> {
        if a.rows() % 2 != 0 || !a.is_square() || b.rows() != a.rows() || !b.is_square() {
            return Err(LocalError::Shape { n: a.rows() / 2, got: b.rows() });
        }
        let r = a.ring().clone();
        for (which, m, k) in [("sigma", &a, &kappa.0), ("tau", &b, &kappa.1)] {
            let nu = similitude(m)?;
            if &nu != k {
                return Err(LocalError::SimilitudeMismatch {
                    which,
                    found: r.render(&nu),
                    expected: r.render(k),
                });
            }
        }
        let lhs = &(&a * &b) * &a.inverse()?;
        if lhs != b.pow(v) {
            return Err(LocalError::RelationFails);
        }
        Ok(TameRep { v, a, b, kappa })
    }

    pub fn v(&self) -> u64 {
        self.v
    }
    pub fn ring(&self) -> &GaloisRing {
        self.a.ring()
    }
    pub fn precision(&self) -> u32 {
        self.ring().precision()
    }
    pub fn n(&self) -> usize {
        self.a.rows() / 2
    }
    /// Image of `σ`.
    pub fn a(&self) -> &Mat {
        &self.a
    }
    /// Image of `τ`.
    pub fn b(&self) -> &Mat {
        &self.b
    }
    pub fn kappa(&self) -> &(Elem, Elem) {
        &self.kappa
    }

    /// `v` as an element of the coefficient ring.
    pub fn v_elem(&self) -> Elem {
        self.ring().from_int(self.v as i64)
    }

    pub fn is_unramified(&self) -> bool {
        self.b.is_identity()
    }

    /// Reduction to a lower precision.
    pub fn reduce_to(&self, target: &GaloisRing) -> Result<TameRep, LocalError> {
        let r = self.ring();
        Ok(TameRep {
            v: self.v,
            a: self.a.reduce_to(target)?,
            b: self.b.reduce_to(target)?,
            kappa: (r.reduce(&self.kappa.0, target)?, r.reduce(&self.kappa.1, target)?),
        })
    }

    /// `K ϱ K⁻¹`; `K` must have similitude 1 to keep `κ` unchanged.
    pub fn conjugate(&self, k: &Mat) -> Result<TameRep, LocalError> {
        let ki = k.inverse()?;
        TameRep::new(self.v, &(k * &self.a) * &ki, &(k * &self.b) * &ki, self.kappa.clone())
    }

    /// `(Id + p^{m-1} X) ϱ` for `X = (X_σ, X_τ)` given as residue-field matrices in `sp_2n`.
    pub fn twist(&self, x_sigma: &Mat, x_tau: &Mat) -> Result<TameRep, LocalError> {
        let r = self.ring();
        let m = self.precision();
        let id = Mat::identity(r, 2 * self.n());
        let step = |x: &Mat| -> Result<Mat, LocalError> { Ok(&id + &x.lift_to(r)?.mul_p_pow(m - 1)) };
        TameRep::new(self.v, &step(x_sigma)? * &self.a, &step(x_tau)? * &self.b, self.kappa.clone())
    }

    /// Whether `ϱ ≡ Id mod p`.
    pub fn is_residually_trivial(&self) -> bool {
        let f = self.ring().residue_field();
        [&self.a, &self.b].iter().all(|m| m.reduce_to(&f).map(|x| x.is_identity()).unwrap_or(false))
    }

    /// `(ϱ(g) − Id)/p mod p` for `g = σ, τ`; requires a residually trivial representation.
    pub fn first_order(&self) -> Result<(Mat, Mat), LocalError> {
        if !self.is_residually_trivial() {
            return Err(LocalError::ResidualNotTrivial);
        }
        let r = self.ring();
        let f = r.residue_field();
        let id = Mat::identity(r, 2 * self.n());
        if self.precision() < 2 {
            let z = Mat::zeros(&f, 2 * self.n(), 2 * self.n());
            return Ok((z.clone(), z));
        }
        Ok(((&self.a - &id).shift_down(1, &f), (&self.b - &id).shift_down(1, &f)))
    }
}

/// Rank-one tame shape `A = c·[[v, x], [0, 1]]`, `B = [[1, y], [0, 1]]` with `c² = κ(σ)/v`.
pub fn rank_one_shape(
    ring: &GaloisRing,
    v: u64,
    x: &Elem,
    y: &Elem,
    kappa_sigma: &Elem,
) -> Result<TameRep, LocalError> {
    let ve = ring.from_int(v as i64);
    let ratio = ring.div(kappa_sigma, &ve)?;
    let c = ring.sqrt(&ratio).map_err(|_| LocalError::NoSquareRoot)?;
    let a = Mat::from_elems(ring, 2, 2, vec![ring.mul(&c, &ve), ring.mul(&c, x), ring.zero(), c.clone()]);
    let b = Mat::from_elems(ring, 2, 2, vec![ring.one(), y.clone(), ring.zero(), ring.one()]);
    TameRep::new(v, a, b, (kappa_sigma.clone(), ring.one()))
}
