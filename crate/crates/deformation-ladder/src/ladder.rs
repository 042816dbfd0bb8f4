use fpcohomology::{fox_matrix, is_cocycle, Cocycle1, FPGroup};
use galois_rings::{linalg, Elem, GaloisRing, Mat};
use gmodules::GMod;
use root_data::RootDatum;
use symplectic_core::{similitude, SympForm};

use crate::error::LadderError;
use crate::pattern::ValuationPattern;

/// A representation of a finitely presented group into `GSp_2n(W/p^m)` with prescribed
/// similitude values, optionally confined to a valuation pattern.
#[derive(Clone, Debug)]
pub struct LiftLadder {
    gamma: FPGroup,
    datum: RootDatum,
    images: Vec<Mat>,
    kappa: Vec<Elem>,
    kappa_ring: GaloisRing,
    pattern: Option<ValuationPattern>,
}

/// Certified failure of `lift_step`: no adjustment of the set-lifts kills the relation residuals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionWitness {
    /// Precision of the ladder that failed to lift.
    pub precision: u32,
    /// Residual `c_r = (W_r − Id)/p^m` per relation, in adjoint coordinates.
    pub residuals: Vec<Vec<Elem>>,
    /// A functional vanishing on every adjustment but not on the residuals.
    pub certificate: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub enum LiftOutcome {
    Lifted(LiftLadder),
    Obstructed(ObstructionWitness),
}

impl LiftOutcome {
    pub fn lifted(self) -> Option<LiftLadder> {
        match self {
            LiftOutcome::Lifted(l) => Some(l),
            LiftOutcome::Obstructed(_) => None,
        }
    }
}

/// Value of a word on generator images.
pub fn evaluate_word(images: &[Mat], w: &[(usize, i64)]) -> Result<Mat, LadderError> {
    let first = images.first().ok_or(LadderError::GeneratorCount { images: 0, generators: 0 })?;
    let mut acc = Mat::identity(first.ring(), first.rows());
    for &(g, e) in w {
        acc = &acc * &images[g].pow_signed(e)?;
    }
    Ok(acc)
}

fn kappa_of_word(ring: &GaloisRing, kappa: &[Elem], w: &[(usize, i64)]) -> Result<Elem, LadderError> {
    let mut acc = ring.one();
    for &(g, e) in w {
        acc = ring.mul(&acc, &ring.pow_signed(&kappa[g], e)?);
    }
    Ok(acc)
}

impl LiftLadder {
    /// Validates relations, similitudes against `kappa` (given over `kappa_ring` of precision
    /// at least that of the images) and the optional pattern.
    pub fn new(
        gamma: FPGroup,
        datum: RootDatum,
        images: Vec<Mat>,
        kappa: Vec<Elem>,
        kappa_ring: GaloisRing,
        pattern: Option<ValuationPattern>,
    ) -> Result<Self, LadderError> {
        let k = gamma.num_generators();
        if images.len() != k || kappa.len() != k || k == 0 {
            return Err(LadderError::GeneratorCount { images: images.len(), generators: k });
        }
        let ring = images[0].ring().clone();
        if kappa_ring.precision() < ring.precision() {
            return Err(LadderError::KappaPrecision { available: kappa_ring.precision(), needed: ring.precision() });
        }
        for (g, (img, kap)) in images.iter().zip(&kappa).enumerate() {
            let label = gamma.labels()[g].clone();
            if similitude(img)? != kappa_ring.reduce(kap, &ring)? {
                return Err(LadderError::SimilitudeMismatch(label));
            }
            if let Some(p) = &pattern {
                if !p.admits(img) {
                    return Err(LadderError::PatternViolation(label));
                }
            }
        }
        for r in gamma.relations() {
            if !evaluate_word(&images, r)?.is_identity() {
                return Err(LadderError::RelationFails(gamma.render_word(r)));
            }
        }
        Ok(LiftLadder { gamma, datum, images, kappa, kappa_ring, pattern })
    }

    pub fn gamma(&self) -> &FPGroup {
        &self.gamma
    }
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }
    pub fn images(&self) -> &[Mat] {
        &self.images
    }
    pub fn image(&self, g: usize) -> &Mat {
        &self.images[g]
    }
    pub fn ring(&self) -> &GaloisRing {
        self.images[0].ring()
    }
    pub fn precision(&self) -> u32 {
        self.ring().precision()
    }
    pub fn kappa(&self) -> &[Elem] {
        &self.kappa
    }
    pub fn kappa_ring(&self) -> &GaloisRing {
        &self.kappa_ring
    }
    pub fn pattern(&self) -> Option<&ValuationPattern> {
        self.pattern.as_ref()
    }

    /// Similitudes of the current images.
    pub fn similitudes(&self) -> Result<Vec<Elem>, LadderError> {
        Ok(self.images.iter().map(similitude).collect::<Result<_, _>>()?)
    }

    /// Images reduced mod `p`.
    pub fn residual_images(&self) -> Result<Vec<Mat>, LadderError> {
        let f = self.ring().residue_field();
        Ok(self.images.iter().map(|m| m.reduce_to(&f)).collect::<Result<_, _>>()?)
    }

    /// `Ad⁰` of the residual representation.
    pub fn residual_module(&self) -> Result<GMod, LadderError> {
        Ok(GMod::adjoint(&self.datum, &self.residual_images()?)?)
    }

    /// Reduction to a lower precision.
    pub fn reduce_to(&self, m: u32) -> Result<LiftLadder, LadderError> {
        let target = self.ring().at_precision(m)?;
        let images = self.images.iter().map(|x| x.reduce_to(&target)).collect::<Result<_, _>>()?;
        LiftLadder::new(
            self.gamma.clone(),
            self.datum.clone(),
            images,
            self.kappa.clone(),
            self.kappa_ring.clone(),
            self.pattern.clone(),
        )
    }

    /// Adjoint-basis indices allowed as adjustments `Id + p^level·X` under the pattern.
    pub fn allowed_basis(&self, level: u32) -> Vec<usize> {
        let f = self.ring().residue_field();
        self.datum
            .basis(&f)
            .iter()
            .enumerate()
            .filter(|(_, b)| self.pattern.as_ref().is_none_or(|p| p.supports(level, b)))
            .map(|(i, _)| i)
            .collect()
    }

    /// Lifts one step of precision, or certifies that these set-lifts cannot be adjusted.
    ///
    /// The obstruction test is exact: any two lifts of the generator images differ by
    /// `Id + p^m·x` factors, so solvability of the linearized system does not depend on the
    /// chosen set-lifts.
    pub fn lift_step(&self) -> Result<LiftOutcome, LadderError> {
        let m = self.precision();
        let up = self.ring().at_precision(m + 1)?;
        if self.kappa_ring.precision() < m + 1 {
            return Err(LadderError::KappaPrecision { available: self.kappa_ring.precision(), needed: m + 1 });
        }
        let f = up.residue_field();
        let lifted = (0..self.images.len()).map(|g| self.set_lift(g, &up)).collect::<Result<Vec<_>, _>>()?;
        let d = self.datum.dim();
        let kappa_up = self.kappa.iter().map(|k| self.kappa_ring.reduce(k, &up)).collect::<Result<Vec<_>, _>>()?;
        let mut residuals = Vec::new();
        for r in self.gamma.relations() {
            if kappa_of_word(&up, &kappa_up, r)? != up.one() {
                return Err(LadderError::KappaNotCharacter(self.gamma.render_word(r)));
            }
            let w = evaluate_word(&lifted, r)?;
            let c = (&w - &Mat::identity(&up, w.rows())).shift_down(m, &f);
            residuals.push(self.datum.coords(&c)?);
        }
        let allowed = self.allowed_basis(m);
        let k = self.images.len();
        let mut adjustments = vec![vec![f.zero(); d]; k];
        if !residuals.is_empty() {
            let module = self.residual_module()?;
            let fox = fox_matrix(&self.gamma, &module)?;
            let cols: Vec<Vec<Elem>> = (0..k)
                .flat_map(|g| allowed.iter().map(move |&b| (g, b)))
                .map(|(g, b)| fox.col(g * d + b))
                .collect();
            let rows = residuals.len() * d;
            let sys = linalg::cols_to_mat(&f, rows, &cols);
            let rhs: Vec<Elem> = residuals.concat().iter().map(|x| f.neg(x)).collect();
            match if cols.is_empty() { None } else { linalg::solve(&sys, &rhs) } {
                Some(x) => {
                    for (idx, (g, b)) in (0..k).flat_map(|g| allowed.iter().map(move |&b| (g, b))).enumerate() {
                        adjustments[g][b] = x[idx].clone();
                    }
                }
                None if rhs.iter().all(|x| f.is_zero(x)) => {}
                None => {
                    let flat = residuals.concat();
                    let certificate = if cols.is_empty() {
                        flat.clone()
                    } else {
                        linalg::left_kernel(&sys)
                            .into_iter()
                            .find(|w| !f.is_zero(&dot(&f, w, &flat)))
                            .expect("inconsistent system has a separating functional")
                    };
                    return Ok(LiftOutcome::Obstructed(ObstructionWitness { precision: m, residuals, certificate }));
                }
            }
        }
        let id = Mat::identity(&up, 2 * self.datum.n());
        let images = lifted
            .iter()
            .zip(&adjustments)
            .map(|(a, x)| -> Result<Mat, LadderError> {
                let xm = self.datum.from_coords(&f, x).lift_to(&up)?.mul_p_pow(m);
                Ok(&(&id + &xm) * a)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LiftOutcome::Lifted(LiftLadder::new(
            self.gamma.clone(),
            self.datum.clone(),
            images,
            self.kappa.clone(),
            self.kappa_ring.clone(),
            self.pattern.clone(),
        )?))
    }

    /// Lifts repeatedly up to precision `target`, stopping at the first obstruction.
    pub fn lift_to(&self, target: u32) -> Result<LiftOutcome, LadderError> {
        let mut cur = self.clone();
        while cur.precision() < target {
            match cur.lift_step()? {
                LiftOutcome::Lifted(next) => cur = next,
                obstructed => return Ok(obstructed),
            }
        }
        Ok(LiftOutcome::Lifted(cur))
    }

    /// Set-lift of one generator image to `up` with similitude `κ(g)`.
    ///
    /// Images equal to a Teichmüller torus element stay Teichmüller; others are lifted
    /// coefficient-wise and corrected on the right by `Id + p^m·Y`.
    fn set_lift(&self, g: usize, up: &GaloisRing) -> Result<Mat, LadderError> {
        let img = &self.images[g];
        let kap = self.kappa_ring.reduce(&self.kappa[g], up)?;
        let f = up.residue_field();
        if img.is_diagonal() {
            let teich: Vec<Elem> = img.reduce_to(&f)?.diag().iter().map(|x| up.teichmuller(x)).collect();
            let t = Mat::diagonal(up, &teich);
            if &t.reduce_to(self.ring())? == img && similitude(&t)? == kap {
                return Ok(t);
            }
        }
        let m = self.precision();
        let a = img.lift_to(up)?;
        let n2 = a.rows();
        let j = SympForm::new(n2 / 2).matrix(up);
        let gram = &(&a.transpose() * &j) * &a;
        let e = (&gram - &j.scale(&kap)).shift_down(m, &f);
        if e.is_zero() {
            return Ok(a);
        }
        let jf = SympForm::new(n2 / 2).matrix(&f);
        let kf = f.reduce_unchecked(&kap);
        let positions: Vec<(usize, usize)> = (0..n2)
            .flat_map(|i| (0..n2).map(move |jj| (i, jj)))
            .filter(|&(i, jj)| self.pattern.as_ref().is_none_or(|p| p.allows_at(m, i, jj)))
            .collect();
        let cols: Vec<Vec<Elem>> = positions
            .iter()
            .map(|&(i, jj)| {
                let u = Mat::unit(&f, n2, i, jj);
                (&(&u.transpose() * &jf) + &(&jf * &u)).scale(&kf).data().to_vec()
            })
            .collect();
        let rhs: Vec<Elem> = e.data().iter().map(|x| f.neg(x)).collect();
        let sol = linalg::solve(&linalg::cols_to_mat(&f, n2 * n2, &cols), &rhs)
            .ok_or_else(|| LadderError::NoSymplecticCorrection(self.gamma.labels()[g].clone()))?;
        let mut y = Mat::zeros(&f, n2, n2);
        for (&(i, jj), v) in positions.iter().zip(sol) {
            y.set(i, jj, v);
        }
        let corr = &Mat::identity(up, n2) + &y.lift_to(up)?.mul_p_pow(m);
        Ok(&a * &corr)
    }

    /// `g ↦ (Id + p^{m−1} f(g))·ρ(g)` for a cocycle `f` of the residual adjoint module.
    pub fn twist(&self, f: &Cocycle1) -> Result<LiftLadder, LadderError> {
        let m = self.precision();
        if m < 2 {
            return Err(LadderError::PrecisionTooLow);
        }
        let module = self.residual_module()?;
        if f.values().len() != self.images.len() || !is_cocycle(&self.gamma, &module, f)? {
            return Err(LadderError::NotACocycle);
        }
        let r = self.ring();
        let field = r.residue_field();
        let id = Mat::identity(r, 2 * self.datum.n());
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(g, a)| -> Result<Mat, LadderError> {
                let x = self.datum.from_coords(&field, f.value(g)).lift_to(r)?.mul_p_pow(m - 1);
                Ok(&(&id + &x) * a)
            })
            .collect::<Result<Vec<_>, _>>()?;
        LiftLadder::new(
            self.gamma.clone(),
            self.datum.clone(),
            images,
            self.kappa.clone(),
            self.kappa_ring.clone(),
            self.pattern.clone(),
        )
    }
}

fn dot(f: &GaloisRing, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
}
