use galois_rings::{Elem, GaloisRing, Mat};

use crate::error::SympError;

/// The standard alternating form `J = [[0, Id_n], [-Id_n, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SympForm {
    n: usize,
}

impl SympForm {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        SympForm { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self, ring: &GaloisRing) -> Mat {
        let n = self.n;
        let mut j = Mat::zeros(ring, 2 * n, 2 * n);
        for i in 0..n {
            j.set(i, n + i, ring.one());
            j.set(n + i, i, ring.from_int(-1));
        }
        j
    }

    /// Whether `x^t J + J x = 0`.
    pub fn is_in_lie_algebra(&self, x: &Mat) -> bool {
        let j = self.matrix(x.ring());
        (&x.transpose() * &j).add(&(&j * x)).is_zero()
    }
}

fn check_shape(x: &Mat) -> Result<usize, SympError> {
    if !x.is_square() || x.rows() % 2 != 0 || x.rows() == 0 {
        return Err(SympError::BadShape { expected: x.rows().max(2), rows: x.rows(), cols: x.cols() });
    }
    Ok(x.rows() / 2)
}

/// `ν(X)` with `X^t J X = ν(X) J`.
pub fn similitude(x: &Mat) -> Result<Elem, SympError> {
    let n = check_shape(x)?;
    let r = x.ring();
    let j = SympForm::new(n).matrix(r);
    let g = &(&x.transpose() * &j) * x;
    let nu = g.get(0, n).clone();
    if !r.is_unit(&nu) || g != j.scale(&nu) {
        return Err(SympError::NotSymplectic);
    }
    Ok(nu)
}

/// A validated element of `GSp_2n(R)` with its similitude factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympMatrix {
    mat: Mat,
    nu: Elem,
}

impl SympMatrix {
    pub fn new(mat: Mat) -> Result<Self, SympError> {
        let nu = similitude(&mat)?;
        Ok(SympMatrix { mat, nu })
    }

    pub fn identity(ring: &GaloisRing, n: usize) -> Self {
        SympMatrix { mat: Mat::identity(ring, 2 * n), nu: ring.one() }
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }
    pub fn into_mat(self) -> Mat {
        self.mat
    }
    pub fn nu(&self) -> &Elem {
        &self.nu
    }
    pub fn n(&self) -> usize {
        self.mat.rows() / 2
    }
    pub fn ring(&self) -> &GaloisRing {
        self.mat.ring()
    }

    pub fn mul(&self, other: &SympMatrix) -> SympMatrix {
        SympMatrix { mat: &self.mat * &other.mat, nu: self.ring().mul(&self.nu, &other.nu) }
    }

    pub fn inverse(&self) -> SympMatrix {
        let r = self.ring();
        // X^{-1} = ν^{-1} J^{-1} X^t J
        let j = SympForm::new(self.n()).matrix(r);
        let nu_inv = r.inv(&self.nu).expect("similitude is a unit");
        let inv = (&(&j.neg() * &self.mat.transpose()) * &j).scale(&nu_inv);
        SympMatrix { mat: inv, nu: nu_inv }
    }

    pub fn reduce_to(&self, target: &GaloisRing) -> Result<SympMatrix, SympError> {
        Ok(SympMatrix {
            mat: self.mat.reduce_to(target)?,
            nu: self.ring().reduce(&self.nu, target)?,
        })
    }
}

/// The diagonal torus element `diag(t_1, ..., t_n, ν/t_1, ..., ν/t_n)`.
pub fn torus_element(ring: &GaloisRing, t: &[Elem], nu: &Elem) -> Result<SympMatrix, SympError> {
    let mut d: Vec<Elem> = t.to_vec();
    for x in t {
        d.push(ring.div(nu, x)?);
    }
    Ok(SympMatrix { mat: Mat::diagonal(ring, &d), nu: nu.clone() })
}

/// Whether `x` is symplectic with Borel block shape.
pub fn is_borel(x: &Mat) -> bool {
    BorelElement::new(x.clone()).is_ok()
}

/// An element of the Borel subgroup in block form `[[C, CD], [0, ξ (C^t)^{-1}]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelElement {
    inner: SympMatrix,
    c: Mat,
    d: Mat,
}

impl BorelElement {
    pub fn new(x: Mat) -> Result<Self, SympError> {
        let s = SympMatrix::new(x)?;
        let n = s.n();
        let r = s.ring().clone();
        let m = s.mat();
        if !m.block(n, 0, n, n).is_zero() {
            return Err(SympError::NotBorel("lower-left block is nonzero".into()));
        }
        let c = m.block(0, 0, n, n);
        for i in 0..n {
            for j in 0..i {
                if !r.is_zero(c.get(i, j)) {
                    return Err(SympError::NotBorel("C is not upper triangular".into()));
                }
            }
        }
        let c_inv = c.inverse().map_err(|_| SympError::NotBorel("C is not invertible".into()))?;
        let d = &c_inv * &m.block(0, n, n, n);
        if d != d.transpose() {
            return Err(SympError::NotBorel("D is not symmetric".into()));
        }
        let expected = c_inv.transpose().scale(s.nu());
        if m.block(n, n, n, n) != expected {
            return Err(SympError::NotBorel("lower-right block is not ξ(C^t)^{-1}".into()));
        }
        Ok(BorelElement { inner: s, c, d })
    }

    pub fn c(&self) -> &Mat {
        &self.c
    }
    pub fn d(&self) -> &Mat {
        &self.d
    }
    pub fn xi(&self) -> &Elem {
        self.inner.nu()
    }
    pub fn as_symp(&self) -> &SympMatrix {
        &self.inner
    }

    pub fn mul(&self, other: &BorelElement) -> BorelElement {
        BorelElement::new(self.inner.mul(&other.inner).into_mat()).expect("Borel is a subgroup")
    }

    pub fn inverse(&self) -> BorelElement {
        BorelElement::new(self.inner.inverse().into_mat()).expect("Borel is a subgroup")
    }
}
