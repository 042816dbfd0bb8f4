//! Dense matrices over a Galois ring.

use std::fmt;

use crate::error::RingError;
use crate::ring::{Elem, GaloisRing};

/// Row-major dense matrix carrying its coefficient ring.
#[derive(Clone)]
pub struct Mat {
    ring: GaloisRing,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
impl Eq for Mat {}

impl std::hash::Hash for Mat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {:?}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.ring.render(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(ring: &GaloisRing, rows: usize, cols: usize) -> Self {
        Mat { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &GaloisRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(ring: &GaloisRing, n: usize, c: &Elem) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(ring: &GaloisRing, d: &[Elem]) -> Self {
        let mut m = Self::zeros(ring, d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_elems(ring: &GaloisRing, rows: usize, cols: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "element count does not match shape");
        Mat { ring: ring.clone(), rows, cols, data }
    }

    /// Builds a matrix from integer rows, reducing into the ring.
    pub fn from_ints(ring: &GaloisRing, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged integer matrix");
                row.iter().map(|&v| ring.from_int(v))
            })
            .collect();
        Mat { ring: ring.clone(), rows: r, cols: c, data }
    }

    /// Column vector from elements.
    pub fn column(ring: &GaloisRing, v: &[Elem]) -> Self {
        Self::from_elems(ring, v.len(), 1, v.to_vec())
    }

    /// Elementary matrix `e_{i,j}` (0-based indices).
    pub fn unit(ring: &GaloisRing, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        m.set(i, j, ring.one());
        m
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    /// All coefficients flattened row-major; a compact hash key.
    pub fn flat_key(&self) -> Vec<u64> {
        self.data.iter().flat_map(|e| e.coeffs().iter().copied()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.ring, self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.ring.is_zero(self.get(i, j))))
    }

    pub fn diag(&self) -> Vec<Elem> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    fn check_same_shape(&self, other: &Mat) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.check_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Mat { data, ..self.shallow() }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.check_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.sub(a, b)).collect();
        Mat { data, ..self.shallow() }
    }

    pub fn neg(&self) -> Mat {
        let data = self.data.iter().map(|a| self.ring.neg(a)).collect();
        Mat { data, ..self.shallow() }
    }

    pub fn scale(&self, c: &Elem) -> Mat {
        let data = self.data.iter().map(|a| self.ring.mul(a, c)).collect();
        Mat { data, ..self.shallow() }
    }

    pub fn scale_int(&self, k: i64) -> Mat {
        self.scale(&self.ring.from_int(k))
    }

    fn shallow(&self) -> Mat {
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: Vec::new() }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let r = &self.ring;
        let mut data = vec![r.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    data[idx] = r.add(&data[idx], &r.mul(a, b));
                }
            }
        }
        Mat { ring: r.clone(), rows: self.rows, cols: other.cols, data }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        let r = &self.ring;
        (0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !r.is_zero(a) && !r.is_zero(x) {
                        acc = r.add(&acc, &r.mul(a, x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Commutator bracket `AB - BA`.
    pub fn bracket(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Elem {
        let r = &self.ring;
        (0..self.rows).fold(r.zero(), |acc, i| r.add(&acc, self.get(i, i)))
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.ring, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_signed(&self, e: i64) -> Result<Mat, RingError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Inverse over a local ring by Gauss-Jordan with unit pivots.
    pub fn inverse(&self) -> Result<Mat, RingError> {
        if !self.is_square() {
            return Err(RingError::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let r = &self.ring;
        let mut a = self.clone();
        let mut inv = Mat::identity(r, n);
        for col in 0..n {
            let piv = (col..n).find(|&i| r.is_unit(a.get(i, col))).ok_or(RingError::NotInvertible)?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let s = r.inv(a.get(col, col))?;
            a.scale_row(col, &s);
            inv.scale_row(col, &s);
            for i in 0..n {
                if i != col && !r.is_zero(a.get(i, col)) {
                    let f = a.get(i, col).clone();
                    a.add_row_multiple(i, col, &r.neg(&f));
                    inv.add_row_multiple(i, col, &r.neg(&f));
                }
            }
        }
        Ok(inv)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, i: usize, s: &Elem) {
        for c in 0..self.cols {
            let v = self.ring.mul(self.get(i, c), s);
            self.set(i, c, v);
        }
    }

    /// `row_i += f * row_j`.
    pub fn add_row_multiple(&mut self, i: usize, j: usize, f: &Elem) {
        for c in 0..self.cols {
            let v = self.ring.add(self.get(i, c), &self.ring.mul(self.get(j, c), f));
            self.set(i, c, v);
        }
    }

    /// Reduces entries to a lower precision of the same residue field.
    pub fn reduce_to(&self, target: &GaloisRing) -> Result<Mat, RingError> {
        let data = self
            .data
            .iter()
            .map(|x| self.ring.reduce(x, target))
            .collect::<Result<_, _>>()?;
        Ok(Mat { ring: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Coefficient-wise set-theoretic lift to a higher precision.
    pub fn lift_to(&self, target: &GaloisRing) -> Result<Mat, RingError> {
        if !self.ring.same_residue_field(target) {
            return Err(RingError::SpecMismatch);
        }
        let data = self.data.iter().map(|x| target.lift_unchecked(x)).collect();
        Ok(Mat { ring: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Exact division of every entry by `p^k`, landing in `target`.
    pub fn shift_down(&self, k: u32, target: &GaloisRing) -> Mat {
        let data = self.data.iter().map(|x| self.ring.shift_down(x, k, target)).collect();
        Mat { ring: target.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Multiplies every entry by `p^k`.
    pub fn mul_p_pow(&self, k: u32) -> Mat {
        let data = self.data.iter().map(|x| self.ring.mul_p_pow(x, k)).collect();
        Mat { data, ..self.shallow() }
    }

    /// Minimum `p`-adic valuation over all entries (`None` for the zero matrix).
    pub fn valuation(&self) -> Option<u32> {
        self.data.iter().filter_map(|x| self.ring.valuation(x)).min()
    }

    /// Block extraction `rows r0..r0+h`, `cols c0..c0+w`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Mat {
        let mut b = Mat::zeros(&self.ring, h, w);
        for i in 0..h {
            for j in 0..w {
                b.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        b
    }

    /// Writes `b` into `self` at offset `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    /// Entries rendered as strings, row-major.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.ring.render(self.get(i, j))).collect())
            .collect()
    }

    /// Signed integer entries (degree-1 rings only), row-major.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.ring.to_signed(self.get(i, j))).collect())
            .collect()
    }
}

impl std::ops::Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        Mat::mul(self, rhs)
    }
}

impl std::ops::Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        Mat::add(self, rhs)
    }
}

impl std::ops::Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        Mat::sub(self, rhs)
    }
}
