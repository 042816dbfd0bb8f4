//! Exact linear algebra over the residue field `F_q`.
//!
//! Every routine here expects a precision-1 ring; vectors are plain
//! `Vec<Elem>` and matrices are [`Mat`].

use crate::matrix::Mat;
use crate::ring::{Elem, GaloisRing};

fn assert_field(ring: &GaloisRing) {
    assert!(ring.is_field(), "linear algebra requires a precision-1 ring");
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let f = m.ring().clone();
    assert_field(&f);
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(piv) = (row..a.rows()).find(|&i| !f.is_zero(a.get(i, col))) else {
            continue;
        };
        a.swap_rows(row, piv);
        let s = f.inv(a.get(row, col)).expect("nonzero field element");
        a.scale_row(row, &s);
        for i in 0..a.rows() {
            if i != row && !f.is_zero(a.get(i, col)) {
                let c = f.neg(a.get(i, col));
                a.add_row_multiple(i, row, &c);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Mat) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &Mat) -> Vec<Vec<Elem>> {
    let f = m.ring().clone();
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            v
        })
        .collect()
}

/// Basis of the left kernel `{y : y^T m = 0}`.
pub fn left_kernel(m: &Mat) -> Vec<Vec<Elem>> {
    kernel(&m.transpose())
}

/// One solution of `m x = b`, or `None` if the system is inconsistent.
pub fn solve(m: &Mat, b: &[Elem]) -> Option<Vec<Elem>> {
    let f = m.ring().clone();
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let n = m.cols();
    let mut aug = Mat::zeros(&f, m.rows(), n + 1);
    aug.set_block(0, 0, m);
    for (i, x) in b.iter().enumerate() {
        aug.set(i, n, x.clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![f.zero(); n];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(i, n).clone();
    }
    Some(x)
}

/// Matrix whose rows are the given vectors.
pub fn rows_to_mat(ring: &GaloisRing, dim: usize, vs: &[Vec<Elem>]) -> Mat {
    let mut m = Mat::zeros(ring, vs.len(), dim);
    for (i, v) in vs.iter().enumerate() {
        assert_eq!(v.len(), dim, "vector length mismatch");
        for (j, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    m
}

/// Matrix whose columns are the given vectors.
pub fn cols_to_mat(ring: &GaloisRing, dim: usize, vs: &[Vec<Elem>]) -> Mat {
    rows_to_mat(ring, dim, vs).transpose()
}

/// A subspace of `F_q^d`, stored as a canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ring: GaloisRing,
    ambient: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ring: &GaloisRing, ambient: usize) -> Self {
        assert_field(ring);
        Subspace { ring: ring.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ring: &GaloisRing, ambient: usize) -> Self {
        let vs: Vec<Vec<Elem>> = (0..ambient)
            .map(|i| {
                let mut v = vec![ring.zero(); ambient];
                v[i] = ring.one();
                v
            })
            .collect();
        Self::span(ring, ambient, &vs)
    }

    pub fn span(ring: &GaloisRing, ambient: usize, vs: &[Vec<Elem>]) -> Self {
        assert_field(ring);
        if vs.is_empty() {
            return Self::zero(ring, ambient);
        }
        let (r, pivots) = rref(&rows_to_mat(ring, ambient, vs));
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { ring: ring.clone(), ambient, basis, pivots }
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let f = &self.ring;
        let c: Vec<Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            for (r, x) in rest.iter_mut().zip(b) {
                *r = f.sub(r, &f.mul(ci, x));
            }
        }
        rest.iter().all(|x| f.is_zero(x)).then_some(c)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn add(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(&self.ring, self.ambient, &vs)
    }

    pub fn add_vectors(&self, vs: &[Vec<Elem>]) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(vs.iter().cloned());
        Self::span(&self.ring, self.ambient, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let f = &self.ring;
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(f, self.ambient);
        }
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| f.neg(x)).collect()));
        let m = cols_to_mat(f, self.ambient, &cols);
        let k = self.dim();
        let vs: Vec<Vec<Elem>> = kernel(&m)
            .into_iter()
            .map(|sol| {
                let mut v = vec![f.zero(); self.ambient];
                for (c, b) in sol[..k].iter().zip(&self.basis) {
                    for (o, x) in v.iter_mut().zip(b) {
                        *o = f.add(o, &f.mul(c, x));
                    }
                }
                v
            })
            .collect();
        Self::span(f, self.ambient, &vs)
    }

    /// Image under a linear map given as a `d' x d` matrix.
    pub fn image(&self, m: &Mat) -> Subspace {
        let vs: Vec<Vec<Elem>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Self::span(&self.ring, m.rows(), &vs)
    }

    pub fn is_stable_under(&self, m: &Mat) -> bool {
        self.basis.iter().all(|v| self.contains(&m.apply(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &GaloisRing, xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = GaloisRing::zp(7, 1).unwrap();
        let m = Mat::from_ints(&f, &[vec![1, 2, 3, 4], vec![0, 1, 2, 3]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(m.apply(x).iter().all(|e| f.is_zero(e)));
        }
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let f = GaloisRing::zp(5, 1).unwrap();
        let m = Mat::from_ints(&f, &[vec![1, 1], vec![2, 2]]);
        assert!(solve(&m, &v(&f, &[1, 3])).is_none());
        let x = solve(&m, &v(&f, &[1, 2])).unwrap();
        assert_eq!(m.apply(&x), v(&f, &[1, 2]));
    }

    #[test]
    fn intersection_dimension_formula() {
        let f = GaloisRing::zp(3, 1).unwrap();
        let a = Subspace::span(&f, 4, &[v(&f, &[1, 0, 0, 0]), v(&f, &[0, 1, 0, 0]), v(&f, &[0, 0, 1, 0])]);
        let b = Subspace::span(&f, 4, &[v(&f, &[0, 1, 1, 1]), v(&f, &[0, 0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(a.dim() + b.dim(), a.add(&b).dim() + i.dim());
        assert!(i.contains(&v(&f, &[0, 1, 1, 0])));
    }

    #[test]
    fn coords_reconstruct() {
        let f = GaloisRing::zp(11, 1).unwrap();
        let s = Subspace::span(&f, 3, &[v(&f, &[2, 3, 5]), v(&f, &[1, 0, 7])]);
        let w = v(&f, &[4, 6, 10]);
        let c = s.coords(&w).unwrap();
        assert_eq!(c.len(), 2);
        assert!(!s.contains(&v(&f, &[0, 0, 1])));
    }
}
