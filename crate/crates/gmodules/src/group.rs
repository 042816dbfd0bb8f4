use galois_rings::{Elem, GaloisRing, Mat};
use root_data::{RootDatum, Weight};
use symplectic_core::{is_borel, similitude};

use crate::error::GModError;

/// Residual group data: generator images in `B(F_q)`, a designated set of
/// torus generators, and the characters `χ̄` and `κ̄` on generators.
#[derive(Clone, Debug)]
pub struct GroupData {
    n: usize,
    field: GaloisRing,
    labels: Vec<String>,
    images: Vec<Mat>,
    torus: Vec<usize>,
    chi: Vec<Elem>,
    kappa: Vec<Elem>,
}

impl GroupData {
    /// Validates shapes, Borel membership, diagonal torus images and `κ̄ = ν`.
    pub fn new(
        labels: Vec<String>,
        images: Vec<Mat>,
        torus: Vec<usize>,
        chi: Vec<Elem>,
        kappa: Vec<Elem>,
    ) -> Result<Self, GModError> {
        let first = images
            .first()
            .ok_or_else(|| GModError::DimensionMismatch("at least one generator is required".into()))?;
        let field = first.ring().clone();
        if !field.is_field() {
            return Err(GModError::NotAField);
        }
        let n = first.rows() / 2;
        let k = images.len();
        if labels.len() != k || chi.len() != k || kappa.len() != k {
            return Err(GModError::DimensionMismatch(format!(
                "{k} images but {} labels, {} chi values, {} kappa values",
                labels.len(),
                chi.len(),
                kappa.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.rows() != 2 * n || img.cols() != 2 * n {
                return Err(GModError::DimensionMismatch(format!("image of {} has wrong shape", labels[i])));
            }
            if !is_borel(img) {
                return Err(GModError::NotBorel(labels[i].clone()));
            }
            if similitude(img)? != kappa[i] {
                return Err(GModError::SimilitudeMismatch(labels[i].clone()));
            }
        }
        for &t in &torus {
            let img = images
                .get(t)
                .ok_or_else(|| GModError::DimensionMismatch(format!("torus index {t} out of range")))?;
            if !img.is_diagonal() {
                return Err(GModError::NotDiagonal(labels[t].clone()));
            }
        }
        Ok(GroupData { n, field, labels, images, torus, chi, kappa })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn field(&self) -> &GaloisRing {
        &self.field
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn images(&self) -> &[Mat] {
        &self.images
    }
    pub fn torus(&self) -> &[usize] {
        &self.torus
    }
    pub fn chi(&self) -> &[Elem] {
        &self.chi
    }
    pub fn kappa(&self) -> &[Elem] {
        &self.kappa
    }
    pub fn len(&self) -> usize {
        self.images.len()
    }
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Values of `σ_λ = ω_λ ∘ ρ̄` on every generator, read from the diagonal.
    pub fn sigma(&self, w: &Weight) -> Vec<Elem> {
        let f = &self.field;
        match w {
            Weight::One => vec![f.one(); self.len()],
            Weight::Root(r) => {
                let (i, j) = r.pivot();
                self.images
                    .iter()
                    .map(|m| f.div(m.get(i, i), m.get(j, j)).expect("Borel diagonal is invertible"))
                    .collect()
            }
        }
    }

    /// `χ̄ · σ_λ` on every generator.
    pub fn chi_sigma(&self, w: &Weight) -> Vec<Elem> {
        let f = &self.field;
        self.sigma(w).iter().zip(&self.chi).map(|(a, b)| f.mul(a, b)).collect()
    }

    /// All weights `Φ ∪ {1}` with `1` listed once.
    pub fn all_weights(datum: &RootDatum) -> Vec<Weight> {
        let mut w = vec![Weight::One];
        w.extend(datum.roots().iter().cloned().map(Weight::Root));
        w
    }

    /// Restriction to a subset of generators (e.g. a decomposition group).
    pub fn restrict(&self, idx: &[usize]) -> Result<GroupData, GModError> {
        let pick = |v: &Vec<Elem>| idx.iter().map(|&i| v[i].clone()).collect::<Vec<_>>();
        let torus = idx.iter().enumerate().filter(|(_, g)| self.torus.contains(g)).map(|(k, _)| k).collect();
        GroupData::new(
            idx.iter().map(|&i| self.labels[i].clone()).collect(),
            idx.iter().map(|&i| self.images[i].clone()).collect(),
            torus,
            pick(&self.chi),
            pick(&self.kappa),
        )
    }
}
