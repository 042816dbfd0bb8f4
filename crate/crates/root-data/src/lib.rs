//! The type `C_n` root system of `sp_2n`: roots, heights, root vectors,
//! the height filtration of the adjoint module and its dual basis.
//!
//! Conventions: the torus is diagonal, `H_i = e_{i,i} - e_{n+i,n+i}`,
//! simple roots are `L_i - L_{i+1}` (`i < n`) and `2L_n`, and the root vectors
//! for negative roots are transposes of the positive ones.

use std::fmt;

use galois_rings::{Elem, GaloisRing, Mat, Subspace};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("{0:?} is not a root of C_n")]
    NotARoot(Vec<i64>),
    #[error("matrix does not lie in sp_2n")]
    NotInSp,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A root, stored by its coefficients on `L_1, ..., L_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    /// Validates membership in `C_n`.
    pub fn new(coeffs: Vec<i64>) -> Result<Self, RootError> {
        if is_root(&coeffs) {
            Ok(Root(coeffs))
        } else {
            Err(RootError::NotARoot(coeffs))
        }
    }

    /// `2L_i` (1-based `i`).
    pub fn long(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 2;
        Root(c)
    }

    /// `L_i - L_j` (1-based, `i != j`).
    pub fn diff(n: usize, i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        let mut c = vec![0; n];
        c[i - 1] = 1;
        c[j - 1] = -1;
        Root(c)
    }

    /// `L_i + L_j` (1-based, `i != j`).
    pub fn sum(n: usize, i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        let mut c = vec![0; n];
        c[i - 1] = 1;
        c[j - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// `self + other` if that is again a root.
    pub fn add(&self, other: &Root) -> Option<Root> {
        let c: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        is_root(&c).then_some(Root(c))
    }

    /// Coefficients in the simple-root basis `L_1-L_2, ..., L_{n-1}-L_n, 2L_n`.
    pub fn simple_coeffs(&self) -> Vec<i64> {
        let n = self.0.len();
        let mut c = vec![0i64; n];
        for i in 0..n {
            let prev = if i == 0 { 0 } else { c[i - 1] };
            c[i] = if i + 1 == n { (self.0[i] + prev) / 2 } else { self.0[i] + prev };
        }
        c
    }

    pub fn height(&self) -> i64 {
        self.simple_coeffs().iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    /// Position `(row, col)` of the distinguished nonzero entry of `X_self`.
    pub fn pivot(&self) -> (usize, usize) {
        let n = self.0.len();
        let nz: Vec<(usize, i64)> =
            self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        match nz.as_slice() {
            [(i, 2)] => (*i, n + i),
            [(i, -2)] => (n + i, *i),
            [(i, a), (j, b)] => match (a, b) {
                (1, -1) => (*i, *j),
                (-1, 1) => (*j, *i),
                (1, 1) => (*i, n + j),
                (-1, -1) => (n + j, *i),
                _ => unreachable!("validated root"),
            },
            _ => unreachable!("validated root"),
        }
    }

    /// Integer entries of `X_self`, as a list of `((row, col), value)`.
    pub fn vector_entries(&self) -> Vec<((usize, usize), i64)> {
        let n = self.0.len();
        let (r, c) = self.pivot();
        let nz: Vec<(usize, i64)> =
            self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        match nz.as_slice() {
            [_] => vec![((r, c), 1)],
            [(i, a), (j, b)] => match (a, b) {
                (1, -1) => vec![((*i, *j), 1), ((n + j, n + i), -1)],
                (-1, 1) => vec![((*j, *i), 1), ((n + i, n + j), -1)],
                (1, 1) => vec![((*i, n + j), 1), ((*j, n + i), 1)],
                (-1, -1) => vec![((n + j, *i), 1), ((n + i, *j), 1)],
                _ => unreachable!(),
            },
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<(usize, i64)> =
            self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i + 1, c)).collect();
        match nz.as_slice() {
            [(i, 2)] => write!(f, "2L{i}"),
            [(i, -2)] => write!(f, "-2L{i}"),
            [(i, 1), (j, -1)] => write!(f, "L{i}-L{j}"),
            [(i, -1), (j, 1)] => write!(f, "-(L{i}-L{j})"),
            [(i, 1), (j, 1)] => write!(f, "L{i}+L{j}"),
            [(i, -1), (j, -1)] => write!(f, "-(L{i}+L{j})"),
            _ => write!(f, "{:?}", self.0),
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Membership in `C_n = {±2L_i} ∪ {±L_i ± L_j, i<j}`.
pub fn is_root(c: &[i64]) -> bool {
    let nz: Vec<i64> = c.iter().copied().filter(|&x| x != 0).collect();
    match nz.as_slice() {
        [a] => a.abs() == 2,
        [a, b] => a.abs() == 1 && b.abs() == 1,
        _ => false,
    }
}

/// A weight label: a root or the formal symbol `1` (the torus, height 0).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Weight {
    One,
    Root(Root),
}

impl Weight {
    pub fn height(&self) -> i64 {
        match self {
            Weight::One => 0,
            Weight::Root(r) => r.height(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::One => write!(f, "1"),
            Weight::Root(r) => write!(f, "{r}"),
        }
    }
}

/// Everything attached to `C_n` for a fixed `n`.
///
/// The adjoint basis is `H_1, ..., H_n` followed by the roots in the total
/// order of [`RootDatum::roots`]. Dual coordinates use the dual basis
/// `H*_i, X*_λ` in the same order, so a functional with dual coordinates `f`
/// evaluates on `x` as `ζ Σ f_i x_i`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    n: usize,
    roots: Vec<Root>,
    zeta: i64,
}

impl RootDatum {
    pub fn new(n: usize) -> Self {
        Self::with_zeta(n, 1)
    }

    /// `zeta` must be nonzero in every residue field the datum is used with.
    pub fn with_zeta(n: usize, zeta: i64) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        assert!(zeta != 0, "zeta must be nonzero");
        let mut roots = Vec::with_capacity(2 * n * n);
        for i in 1..=n {
            roots.push(Root::long(n, i));
            roots.push(Root::long(n, i).neg());
            for j in i + 1..=n {
                for r in [Root::diff(n, i, j), Root::sum(n, i, j)] {
                    roots.push(r.neg());
                    roots.push(r);
                }
            }
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
        RootDatum { n, roots, zeta }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn zeta(&self) -> i64 {
        self.zeta
    }
    /// `n(2n+1)`.
    pub fn dim(&self) -> usize {
        self.n * (2 * self.n + 1)
    }

    /// All `2n^2` roots, ordered by height then lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots.iter().filter(|r| r.is_positive()).cloned().collect()
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        let n = self.n;
        let mut s: Vec<Root> = (1..n).map(|i| Root::diff(n, i, i + 1)).collect();
        s.push(Root::long(n, n));
        s
    }

    /// The unique root of maximal height `2n-1`.
    pub fn highest_root(&self) -> Root {
        Root::long(self.n, 1)
    }

    /// Basis labels in order: `1` (n times, for `H_i`) then roots.
    pub fn weights(&self) -> Vec<Weight> {
        let mut w = vec![Weight::One; self.n];
        w.extend(self.roots.iter().cloned().map(Weight::Root));
        w
    }

    /// Index of `X_λ` in the adjoint basis.
    pub fn index_of(&self, r: &Root) -> usize {
        self.n + self.roots.iter().position(|x| x == r).expect("root of this datum")
    }

    /// Index of `H_i` (1-based `i`).
    pub fn torus_index(&self, i: usize) -> usize {
        i - 1
    }

    pub fn parse_root(&self, coeffs: &[i64]) -> Result<Root, RootError> {
        if coeffs.len() != self.n {
            return Err(RootError::DimensionMismatch(format!(
                "root has {} coefficients, rank is {}",
                coeffs.len(),
                self.n
            )));
        }
        Root::new(coeffs.to_vec())
    }

    pub fn root_vector(&self, ring: &GaloisRing, r: &Root) -> Mat {
        assert_eq!(r.rank(), self.n);
        let mut m = Mat::zeros(ring, 2 * self.n, 2 * self.n);
        for ((i, j), v) in r.vector_entries() {
            m.set(i, j, ring.from_int(v));
        }
        m
    }

    /// `H_i = e_{i,i} - e_{n+i,n+i}` (1-based `i`).
    pub fn torus_vector(&self, ring: &GaloisRing, i: usize) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(ring, 2 * n, 2 * n);
        m.set(i - 1, i - 1, ring.one());
        m.set(n + i - 1, n + i - 1, ring.from_int(-1));
        m
    }

    /// The adjoint basis matrices in basis order.
    pub fn basis(&self, ring: &GaloisRing) -> Vec<Mat> {
        let mut b: Vec<Mat> = (1..=self.n).map(|i| self.torus_vector(ring, i)).collect();
        b.extend(self.roots.iter().map(|r| self.root_vector(ring, r)));
        b
    }

    /// Coordinates of `x ∈ sp_2n` in the adjoint basis.
    pub fn coords(&self, x: &Mat) -> Result<Vec<Elem>, RootError> {
        let n = self.n;
        if x.rows() != 2 * n || x.cols() != 2 * n {
            return Err(RootError::DimensionMismatch(format!(
                "expected {0}x{0}, got {1}x{2}",
                2 * n,
                x.rows(),
                x.cols()
            )));
        }
        let mut c: Vec<Elem> = (0..n).map(|i| x.get(i, i).clone()).collect();
        c.extend(self.roots.iter().map(|r| {
            let (i, j) = r.pivot();
            x.get(i, j).clone()
        }));
        if &self.from_coords(x.ring(), &c) != x {
            return Err(RootError::NotInSp);
        }
        Ok(c)
    }

    pub fn from_coords(&self, ring: &GaloisRing, c: &[Elem]) -> Mat {
        assert_eq!(c.len(), self.dim());
        let n = self.n;
        let mut m = Mat::zeros(ring, 2 * n, 2 * n);
        for i in 0..n {
            m.set(i, i, c[i].clone());
            m.set(n + i, n + i, ring.neg(&c[i]));
        }
        for (k, r) in self.roots.iter().enumerate() {
            let a = &c[n + k];
            if ring.is_zero(a) {
                continue;
            }
            for ((i, j), v) in r.vector_entries() {
                let cur = m.get(i, j).clone();
                m.set(i, j, ring.add(&cur, &ring.mul_int(a, v)));
            }
        }
        m
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, a: &Mat, b: &Mat) -> Mat {
        a.bracket(b)
    }

    /// Roots `β` with `[X_α, X_β] ≠ 0`, read off from the stored root vectors.
    pub fn phi_alpha(&self, alpha: &Root) -> Vec<Root> {
        let ring = GaloisRing::zp(large_prime(), 1).expect("prime");
        let xa = self.root_vector(&ring, alpha);
        self.roots
            .iter()
            .filter(|b| !xa.bracket(&self.root_vector(&ring, b)).is_zero())
            .cloned()
            .collect()
    }

    /// Basis indices spanning `(Ad^0)_k`: roots of height `>= k`, plus the torus when `k <= 0`.
    pub fn filtration_indices(&self, k: i64) -> Vec<usize> {
        let mut idx: Vec<usize> = if k <= 0 { (0..self.n).collect() } else { Vec::new() };
        idx.extend(
            self.roots.iter().enumerate().filter(|(_, r)| r.height() >= k).map(|(i, _)| self.n + i),
        );
        idx
    }

    /// `(Ad^0)_k` as a subspace of adjoint coordinates over the field `f`.
    pub fn filtration(&self, f: &GaloisRing, k: i64) -> Subspace {
        self.coordinate_span(f, &self.filtration_indices(k))
    }

    /// `(Ad^0)_k^⊥` in dual coordinates: functionals vanishing on `(Ad^0)_k`.
    pub fn filtration_perp(&self, f: &GaloisRing, k: i64) -> Subspace {
        let inside = self.filtration_indices(k);
        let outside: Vec<usize> = (0..self.dim()).filter(|i| !inside.contains(i)).collect();
        self.coordinate_span(f, &outside)
    }

    fn coordinate_span(&self, f: &GaloisRing, idx: &[usize]) -> Subspace {
        let d = self.dim();
        let vs: Vec<Vec<Elem>> = idx
            .iter()
            .map(|&i| {
                let mut v = vec![f.zero(); d];
                v[i] = f.one();
                v
            })
            .collect();
        Subspace::span(f, d, &vs)
    }

    /// Evaluation `f(x) = ζ Σ f_i x_i` of a dual-coordinate functional.
    pub fn pair(&self, ring: &GaloisRing, f: &[Elem], x: &[Elem]) -> Elem {
        let s = f.iter().zip(x).fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)));
        ring.mul_int(&s, self.zeta)
    }

    /// Dual coordinates of `X*_λ`.
    pub fn dual_root(&self, ring: &GaloisRing, r: &Root) -> Vec<Elem> {
        let mut v = vec![ring.zero(); self.dim()];
        v[self.index_of(r)] = ring.one();
        v
    }

    /// Dual coordinates of `H*_i` (1-based `i`).
    pub fn dual_torus(&self, ring: &GaloisRing, i: usize) -> Vec<Elem> {
        let mut v = vec![ring.zero(); self.dim()];
        v[i - 1] = ring.one();
        v
    }
}

/// A prime large enough that small structure constants never vanish.
fn large_prime() -> u64 {
    1_000_003
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heights_for_rank_two() {
        let n = 2;
        assert_eq!(Root::long(n, 1).height(), 3);
        assert_eq!(Root::long(n, 2).height(), 1);
        assert_eq!(Root::diff(n, 1, 2).height(), 1);
        assert_eq!(Root::sum(n, 1, 2).height(), 2);
        assert_eq!(Root::sum(n, 1, 2).neg().height(), -2);
    }

    #[test]
    fn order_refines_height() {
        let d = RootDatum::new(3);
        assert_eq!(d.roots().len(), 18);
        for w in d.roots().windows(2) {
            assert!(w[0].height() <= w[1].height());
        }
    }

    #[test]
    fn display_labels() {
        assert_eq!(Root::long(2, 1).to_string(), "2L1");
        assert_eq!(Root::diff(2, 1, 2).neg().to_string(), "-(L1-L2)");
        assert_eq!(Root::sum(2, 1, 2).neg().to_string(), "-(L1+L2)");
    }

    #[test]
    fn coords_roundtrip_and_rejection() {
        let d = RootDatum::new(2);
        let r = GaloisRing::zp(7, 2).unwrap();
        let c: Vec<Elem> = (0..10).map(|i| r.from_int(3 * i + 1)).collect();
        let x = d.from_coords(&r, &c);
        assert_eq!(d.coords(&x).unwrap(), c);
        let bad = Mat::unit(&r, 4, 0, 1);
        assert_eq!(d.coords(&bad), Err(RootError::NotInSp));
    }

    #[test]
    fn phi_alpha_for_highest_root() {
        let d = RootDatum::new(2);
        let mut got = d.phi_alpha(&Root::long(2, 1));
        got.sort();
        let mut want = vec![Root::long(2, 1).neg(), Root::sum(2, 1, 2).neg(), Root::diff(2, 1, 2).neg()];
        want.sort();
        assert_eq!(got, want);
    }
}
