//! Residue-field descriptions `F_q = F_p[x]/(f)` with validated moduli.

use crate::error::RingError;

/// A finite field `F_{p^M}` presented by a monic irreducible polynomial over `F_p`.
///
/// The modulus is stored low-to-high, with `modulus.len() == degree + 1`
/// and a leading coefficient of 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    degree: usize,
    modulus: Vec<u64>,
}

impl FieldSpec {
    /// The prime field `F_p` with modulus `x`.
    pub fn prime(p: u64) -> Result<Self, RingError> {
        make_field(p, 1, &[0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Extension degree `M` with `q = p^M`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field size `q = p^M`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }
}

/// Validates and builds a [`FieldSpec`].
///
/// `modulus` lists coefficients from the constant term upwards and must be
/// monic of degree `degree`.
pub fn make_field(p: u64, degree: usize, modulus: &[u64]) -> Result<FieldSpec, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if p == 2 {
        return Err(RingError::EvenCharacteristic);
    }
    if degree == 0 {
        return Err(RingError::BadModulus("extension degree must be at least 1".into()));
    }
    if modulus.len() != degree + 1 {
        return Err(RingError::BadModulus(format!(
            "expected {} coefficients for a degree-{degree} modulus, got {}",
            degree + 1,
            modulus.len()
        )));
    }
    if modulus[degree] % p != 1 {
        return Err(RingError::BadModulus("modulus must be monic".into()));
    }
    let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
    if !fp_poly::is_irreducible(&modulus, p) {
        return Err(RingError::ReducibleModulus);
    }
    Ok(FieldSpec { p, degree, modulus })
}

/// Deterministic trial-division primality test; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense polynomial helpers over `F_p`, low-to-high coefficient order.
pub(crate) mod fp_poly {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        crate::ring::inv_mod_u64(a, p).expect("nonzero residue is invertible")
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let len = a.len().max(b.len());
        let mut out = vec![0u64; len];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            if c != 0 {
                let shift = top - dm;
                for (i, &mi) in m.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
                }
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, m, p)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// Rabin-style test: `f` of degree `M` is irreducible iff
    /// `gcd(f, x^{p^i} - x) = 1` for all `1 <= i <= M/2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        if deg == 1 {
            return true;
        }
        let x = vec![0, 1];
        let mut xp = x.clone();
        for _ in 1..=deg / 2 {
            let mut acc = vec![1u64];
            for _ in 0..p {
                acc = mulmod(&acc, &xp, f, p);
            }
            xp = acc;
            let diff = sub(&xp, &x, p);
            let g = gcd(f, &diff, p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
    }

    #[test]
    fn prime_field_accepts_linear_modulus() {
        let f = make_field(5, 1, &[0, 1]).unwrap();
        assert_eq!(f.q(), 5);
    }

    #[test]
    fn f9_from_x2_plus_1() {
        assert!(!has_root(&[1, 0, 1], 3));
        let f = make_field(3, 2, &[1, 0, 1]).unwrap();
        assert_eq!(f.q(), 9);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(make_field(4, 1, &[0, 1]), Err(RingError::NotPrime(4)));
    }

    #[test]
    fn reducible_quadratic_rejected() {
        // x^2 - 1 = (x-1)(x+1) over F_5
        assert_eq!(make_field(5, 2, &[4, 0, 1]), Err(RingError::ReducibleModulus));
    }

    #[test]
    fn quartic_without_roots_can_still_be_reducible() {
        // (x^2+1)^2 over F_3 has no root but is reducible.
        let f = [1, 0, 2, 0, 1];
        assert!(!has_root(&f, 3));
        assert_eq!(make_field(3, 4, &f), Err(RingError::ReducibleModulus));
    }

    #[test]
    fn irreducibility_matches_root_count_for_cubics() {
        let p = 5;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let f = [c, b, a, 1];
                    assert_eq!(make_field(p, 3, &f).is_ok(), !has_root(&f, p));
                }
            }
        }
    }
}
