use galois_rings::{linalg, Elem, GaloisRing, Mat, Subspace};
use root_data::RootDatum;

use crate::error::GModError;

/// A finite-dimensional `F_q`-module for a finitely generated group, given by
/// one action matrix per generator (acting on column vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMod {
    field: GaloisRing,
    dim: usize,
    actions: Vec<Mat>,
}

impl GMod {
    pub fn from_actions(field: &GaloisRing, dim: usize, actions: Vec<Mat>) -> Result<Self, GModError> {
        if !field.is_field() {
            return Err(GModError::NotAField);
        }
        for a in &actions {
            if a.rows() != dim || a.cols() != dim {
                return Err(GModError::DimensionMismatch(format!(
                    "action is {}x{}, module has dimension {dim}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        Ok(GMod { field: field.clone(), dim, actions })
    }

    pub fn trivial(field: &GaloisRing, dim: usize, gens: usize) -> Self {
        GMod { field: field.clone(), dim, actions: vec![Mat::identity(field, dim); gens] }
    }

    /// `Ad^0`: `g·X = ρ̄(g) X ρ̄(g)^{-1}` in the adjoint basis of `datum`.
    pub fn adjoint(datum: &RootDatum, images: &[Mat]) -> Result<Self, GModError> {
        let field = images
            .first()
            .map(|m| m.ring().clone())
            .ok_or_else(|| GModError::DimensionMismatch("no generators".into()))?;
        let basis = datum.basis(&field);
        let d = datum.dim();
        let mut actions = Vec::with_capacity(images.len());
        for img in images {
            let inv = img.inverse()?;
            let mut a = Mat::zeros(&field, d, d);
            for (j, b) in basis.iter().enumerate() {
                let c = datum.coords(&(&(img * b) * &inv))?;
                for (i, x) in c.into_iter().enumerate() {
                    a.set(i, j, x);
                }
            }
            actions.push(a);
        }
        Self::from_actions(&field, d, actions)
    }

    /// `Ad^0*`: `(g·f)(X) = χ̄(g) f(g^{-1}·X)`, in dual coordinates.
    pub fn dual(datum: &RootDatum, images: &[Mat], chi: &[Elem]) -> Result<Self, GModError> {
        let ad = Self::adjoint(datum, images)?;
        ad.dual_of(chi)
    }

    /// Contragredient twisted by `chi`: `χ(g) (A_g^{-1})^t`.
    pub fn dual_of(&self, chi: &[Elem]) -> Result<Self, GModError> {
        if chi.len() != self.actions.len() {
            return Err(GModError::DimensionMismatch("one character value per generator".into()));
        }
        let actions = self
            .actions
            .iter()
            .zip(chi)
            .map(|(a, c)| Ok(a.inverse()?.transpose().scale(c)))
            .collect::<Result<Vec<_>, GModError>>()?;
        Self::from_actions(&self.field, self.dim, actions)
    }

    /// Tensor with the one-dimensional character `chi`.
    pub fn twist(&self, chi: &[Elem]) -> Self {
        let actions = self.actions.iter().zip(chi).map(|(a, c)| a.scale(c)).collect();
        GMod { field: self.field.clone(), dim: self.dim, actions }
    }

    pub fn field(&self) -> &GaloisRing {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn actions(&self) -> &[Mat] {
        &self.actions
    }
    pub fn action(&self, g: usize) -> &Mat {
        &self.actions[g]
    }
    pub fn num_generators(&self) -> usize {
        self.actions.len()
    }

    /// The same module viewed as a module for the listed generators only.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        GMod { field: self.field.clone(), dim: self.dim, actions: idx.iter().map(|&i| self.actions[i].clone()).collect() }
    }

    pub fn is_stable(&self, s: &Subspace) -> bool {
        self.actions.iter().all(|a| s.is_stable_under(a))
    }

    /// Smallest stable subspace containing `seeds`.
    pub fn stable_closure(&self, seeds: &[Vec<Elem>]) -> Subspace {
        let mut s = Subspace::zero(&self.field, self.dim);
        let mut queue: Vec<Vec<Elem>> = Vec::new();
        for v in seeds {
            if !s.contains(v) {
                s = s.add_vectors(std::slice::from_ref(v));
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for a in &self.actions {
                let w = a.apply(&v);
                if !s.contains(&w) {
                    s = s.add_vectors(std::slice::from_ref(&w));
                    queue.push(w);
                }
            }
        }
        s
    }

    /// Simultaneous fixed space of the given module endomorphisms.
    pub fn fixed_subspace(&self, elements: &[Mat]) -> Subspace {
        if elements.is_empty() {
            return Subspace::full(&self.field, self.dim);
        }
        let id = Mat::identity(&self.field, self.dim);
        let mut stacked = Mat::zeros(&self.field, self.dim * elements.len(), self.dim);
        for (k, e) in elements.iter().enumerate() {
            stacked.set_block(k * self.dim, 0, &e.sub(&id));
        }
        Subspace::span(&self.field, self.dim, &linalg::kernel(&stacked))
    }

    /// `M^Γ`, fixed by every generator.
    pub fn invariants(&self) -> Subspace {
        self.fixed_subspace(&self.actions)
    }

    /// The submodule on a stable subspace, in the coordinates of its RREF basis.
    pub fn submodule(&self, s: &Subspace) -> Result<GMod, GModError> {
        if !self.is_stable(s) {
            return Err(GModError::NotStable);
        }
        let k = s.dim();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let mut m = Mat::zeros(&self.field, k, k);
                for (j, b) in s.basis().iter().enumerate() {
                    let c = s.coords(&a.apply(b)).expect("stable");
                    for (i, x) in c.into_iter().enumerate() {
                        m.set(i, j, x);
                    }
                }
                m
            })
            .collect();
        Ok(GMod { field: self.field.clone(), dim: k, actions })
    }

    /// `M / S`, using the non-pivot coordinates of `S` as a basis of the quotient.
    pub fn quotient(&self, s: &Subspace) -> Result<GMod, GModError> {
        if !self.is_stable(s) {
            return Err(GModError::NotStable);
        }
        let free: Vec<usize> = (0..self.dim).filter(|i| !s.pivots().contains(i)).collect();
        let k = free.len();
        let f = &self.field;
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let mut m = Mat::zeros(f, k, k);
                for (j, &fj) in free.iter().enumerate() {
                    let mut e = vec![f.zero(); self.dim];
                    e[fj] = f.one();
                    let w = reduce_mod(s, &a.apply(&e));
                    for (i, &fi) in free.iter().enumerate() {
                        m.set(i, j, w[fi].clone());
                    }
                }
                m
            })
            .collect();
        Ok(GMod { field: f.clone(), dim: k, actions })
    }
}

/// Representative of `v + S` vanishing at the pivot columns of `S`.
pub fn reduce_mod(s: &Subspace, v: &[Elem]) -> Vec<Elem> {
    let f = s.ring();
    let mut w = v.to_vec();
    for (b, &p) in s.basis().iter().zip(s.pivots()) {
        let c = w[p].clone();
        if f.is_zero(&c) {
            continue;
        }
        for (x, y) in w.iter_mut().zip(b) {
            *x = f.sub(x, &f.mul(&c, y));
        }
    }
    w
}
