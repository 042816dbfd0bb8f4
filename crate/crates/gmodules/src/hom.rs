use galois_rings::{linalg, Elem, GaloisRing, Mat};

use crate::error::GModError;
use crate::module::GMod;

/// `F_p`-matrix of multiplication by `a` on `F_q` in the basis `1, x, ..., x^{M-1}`.
pub fn mult_matrix(f: &GaloisRing, fp: &GaloisRing, a: &Elem) -> Mat {
    let deg = f.degree();
    let mut m = Mat::zeros(fp, deg, deg);
    let mut basis = vec![0i64; deg];
    for j in 0..deg {
        basis.iter_mut().for_each(|x| *x = 0);
        basis[j] = 1;
        let prod = f.mul(a, &f.from_coeffs(&basis));
        for (i, &c) in prod.coeffs().iter().enumerate() {
            m.set(i, j, fp.from_int(c as i64));
        }
    }
    m
}

/// The same module regarded over `F_p` (dimension multiplied by `M`).
pub fn restrict_scalars(m: &GMod) -> GMod {
    let f = m.field();
    let fp = GaloisRing::zp(f.p(), 1).expect("prime field");
    let deg = f.degree();
    let d = m.dim();
    let actions = m
        .actions()
        .iter()
        .map(|a| {
            let mut big = Mat::zeros(&fp, d * deg, d * deg);
            for i in 0..d {
                for j in 0..d {
                    big.set_block(i * deg, j * deg, &mult_matrix(f, &fp, a.get(i, j)));
                }
            }
            big
        })
        .collect();
    GMod::from_actions(&fp, d * deg, actions).expect("shapes agree")
}

/// Vector of `F_p` coordinates for a vector of `F_q` elements.
pub fn restrict_vector(fp: &GaloisRing, v: &[Elem]) -> Vec<Elem> {
    v.iter().flat_map(|x| x.coeffs().iter().map(|&c| fp.from_int(c as i64)).collect::<Vec<_>>()).collect()
}

/// `dim_{F_p} Hom_{F_p}(M_1, M_2)^Γ`, by solving `T A_g = B_g T` for all generators.
pub fn hom_invariants(m1: &GMod, m2: &GMod) -> Result<usize, GModError> {
    if m1.num_generators() != m2.num_generators() {
        return Err(GModError::DimensionMismatch("modules for different generator sets".into()));
    }
    let a = restrict_scalars(m1);
    let b = restrict_scalars(m2);
    let (d1, d2) = (a.dim(), b.dim());
    if d1 == 0 || d2 == 0 {
        return Ok(0);
    }
    let fp = a.field().clone();
    let unknowns = d1 * d2;
    // T[i][j] is unknown index i*d1 + j
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (ag, bg) in a.actions().iter().zip(b.actions()) {
        for i in 0..d2 {
            for j in 0..d1 {
                // (T A)_{ij} - (B T)_{ij}
                let mut row = vec![fp.zero(); unknowns];
                for k in 0..d1 {
                    let idx = i * d1 + k;
                    row[idx] = fp.add(&row[idx], ag.get(k, j));
                }
                for k in 0..d2 {
                    let idx = k * d1 + j;
                    row[idx] = fp.sub(&row[idx], bg.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(unknowns);
    }
    let sys = linalg::rows_to_mat(&fp, unknowns, &rows);
    Ok(unknowns - linalg::rank(&sys))
}
