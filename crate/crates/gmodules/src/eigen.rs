use galois_rings::{linalg, Elem, Mat, Subspace};

use crate::error::GModError;
use crate::module::GMod;

/// A simultaneous eigenspace: one eigenvalue per designated generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    pub values: Vec<Elem>,
    pub space: Subspace,
}

/// Splits `M` into simultaneous eigenspaces of the designated generators.
///
/// Fails with `NotSemisimple` unless the generators are simultaneously
/// diagonalizable over `F_q`.
pub fn eigenspace_decomposition(m: &GMod, torus: &[usize]) -> Result<Vec<Eigenspace>, GModError> {
    let f = m.field().clone();
    let d = m.dim();
    let mut pieces = vec![Eigenspace { values: Vec::new(), space: Subspace::full(&f, d) }];
    let units: Vec<Elem> = f.elements().into_iter().filter(|x| !f.is_zero(x)).collect();
    for &g in torus {
        let a = m.action(g);
        let mut next = Vec::new();
        for piece in &pieces {
            for lam in &units {
                let shifted = a.sub(&Mat::scalar(&f, d, lam));
                let ker = Subspace::span(&f, d, &linalg::kernel(&shifted));
                let s = piece.space.intersect(&ker);
                if s.dim() > 0 {
                    let mut values = piece.values.clone();
                    values.push(lam.clone());
                    next.push(Eigenspace { values, space: s });
                }
            }
        }
        pieces = next;
    }
    let total: usize = pieces.iter().map(|p| p.space.dim()).sum();
    if total != d {
        return Err(GModError::NotSemisimple);
    }
    Ok(pieces)
}

/// Projection of `v` onto each eigenspace (same order as `pieces`).
pub fn eigen_components(pieces: &[Eigenspace], v: &[Elem]) -> Vec<Vec<Elem>> {
    let Some(first) = pieces.first() else {
        return Vec::new();
    };
    let f = first.space.ring().clone();
    let d = first.space.ambient_dim();
    let cols: Vec<Vec<Elem>> = pieces.iter().flat_map(|p| p.space.basis().iter().cloned()).collect();
    let basis = linalg::cols_to_mat(&f, d, &cols);
    let c = linalg::solve(&basis, v).expect("eigenspaces span the module");
    let mut out = Vec::with_capacity(pieces.len());
    let mut k = 0;
    for p in pieces {
        let mut w = vec![f.zero(); d];
        for b in p.space.basis() {
            for (x, y) in w.iter_mut().zip(b) {
                *x = f.add(x, &f.mul(&c[k], y));
            }
            k += 1;
        }
        out.push(w);
    }
    out
}
