use std::fmt;

use galois_rings::{GaloisRing, Mat};
use root_data::RootDatum;

use crate::error::SympError;
use crate::form::SympMatrix;

fn check_prime(ring: &GaloisRing, n: usize) -> Result<(), SympError> {
    if ring.p() <= 2 * n as u64 {
        return Err(SympError::PrimeTooSmall { p: ring.p(), n });
    }
    Ok(())
}

/// `Σ_{j<2n} Y^j / j!` for nilpotent `Y ∈ sp_2n`; requires `p > 2n`.
pub fn exp_nilpotent(y: &Mat) -> Result<SympMatrix, SympError> {
    let r = y.ring().clone();
    let n = y.rows() / 2;
    check_prime(&r, n)?;
    if !y.pow(2 * n as u64).is_zero() {
        return Err(SympError::NotNilpotent);
    }
    let mut acc = Mat::identity(&r, 2 * n);
    let mut term = Mat::identity(&r, 2 * n);
    for j in 1..2 * n {
        term = (&term * y).scale(&r.inv(&r.from_int(j as i64))?);
        acc = acc.add(&term);
    }
    SympMatrix::new(acc)
}

/// Exponential of `Y ∈ (Ad^0)_k` for `k >= 1`.
pub fn exp_filtered(datum: &RootDatum, y: &Mat, k: i64) -> Result<SympMatrix, SympError> {
    check_prime(y.ring(), datum.n())?;
    let c = datum.coords(y)?;
    let r = y.ring();
    let allowed = datum.filtration_indices(k.max(1));
    if c.iter().enumerate().any(|(i, x)| !r.is_zero(x) && !allowed.contains(&i)) {
        return Err(SympError::NotInFiltration(k));
    }
    exp_nilpotent(y)
}

/// `log U = Σ_{j=1}^{2n-1} (-1)^{j+1} (U - 1)^j / j` for unipotent `U`.
pub fn log_unipotent(u: &Mat) -> Result<Mat, SympError> {
    let r = u.ring().clone();
    let n = u.rows() / 2;
    check_prime(&r, n)?;
    let nmat = u.sub(&Mat::identity(&r, 2 * n));
    if !nmat.pow(2 * n as u64).is_zero() {
        return Err(SympError::NotUnipotent);
    }
    let mut acc = Mat::zeros(&r, 2 * n, 2 * n);
    let mut power = Mat::identity(&r, 2 * n);
    for j in 1..2 * n {
        power = &power * &nmat;
        let sign = if j % 2 == 1 { 1 } else { -1 };
        acc = acc.add(&power.scale(&r.inv(&r.from_int(sign * j as i64))?));
    }
    Ok(acc)
}

/// Filtration level of an element of `U_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Finite(i64),
    /// The identity, which lies in every `U_k`.
    Infinite,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(k) => write!(f, "{k}"),
            Level::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest `k >= 1` with `log U ∈ (Ad^0)_k`.
pub fn filtration_level(datum: &RootDatum, u: &Mat) -> Result<Level, SympError> {
    let y = log_unipotent(u).map_err(|e| match e {
        SympError::NotUnipotent => SympError::NotInU1,
        other => other,
    })?;
    let c = datum.coords(&y).map_err(|_| SympError::NotInU1)?;
    let r = u.ring();
    let mut level: Option<i64> = None;
    for (i, w) in datum.weights().iter().enumerate() {
        if r.is_zero(&c[i]) {
            continue;
        }
        let h = w.height();
        if h < 1 {
            return Err(SympError::NotInU1);
        }
        level = Some(level.map_or(h, |l| l.min(h)));
    }
    Ok(level.map_or(Level::Infinite, Level::Finite))
}
