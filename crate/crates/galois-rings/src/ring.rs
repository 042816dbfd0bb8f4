//! The Galois ring `W(F_q)/p^m`, realised as `(Z/p^m)[x]/(f~)` where `f~`
//! is the coefficient lift of the residue-field modulus.

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::RingError;
use crate::field::FieldSpec;

/// Default maximal precision accepted by [`GaloisRing::new`].
pub const DEFAULT_PRECISION_CEILING: u32 = 8;

/// Coefficient vector of a ring element (length `M`, entries in `[0, p^m)`).
///
/// Elements carry no reference to their ring; all arithmetic goes through a
/// [`GaloisRing`] context.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) SmallVec<[u64; 4]>);

impl Elem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "{:?}", self.0.as_slice())
        }
    }
}

struct Inner {
    spec: FieldSpec,
    m: u32,
    pm: u64,
}

/// Arithmetic context for `W(F_q)/p^m`. Cloning is cheap.
#[derive(Clone)]
pub struct GaloisRing {
    inner: Arc<Inner>,
}

impl PartialEq for GaloisRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.m == other.inner.m && self.inner.spec == other.inner.spec)
    }
}
impl Eq for GaloisRing {}

impl fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GaloisRing(p={}, M={}, m={})",
            self.p(),
            self.degree(),
            self.precision()
        )
    }
}

pub(crate) fn inv_mod_u64(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    if t < 0 {
        t += n as i128;
    }
    Some(t as u64)
}

impl GaloisRing {
    /// Builds `W(F_q)/p^m` with the default precision ceiling.
    pub fn new(spec: FieldSpec, m: u32) -> Result<Self, RingError> {
        Self::with_ceiling(spec, m, DEFAULT_PRECISION_CEILING)
    }

    /// Builds `W(F_q)/p^m`, rejecting `m` outside `1..=ceiling`.
    pub fn with_ceiling(spec: FieldSpec, m: u32, ceiling: u32) -> Result<Self, RingError> {
        if m == 0 || m > ceiling {
            return Err(RingError::PrecisionOutOfRange { requested: m, ceiling });
        }
        let pm = spec
            .p()
            .checked_pow(m)
            .filter(|v| *v < (1u64 << 62))
            .ok_or(RingError::PrecisionOutOfRange { requested: m, ceiling })?;
        Ok(GaloisRing { inner: Arc::new(Inner { spec, m, pm }) })
    }

    /// Prime-field convenience: `Z/p^m`.
    pub fn zp(p: u64, m: u32) -> Result<Self, RingError> {
        Self::new(FieldSpec::prime(p)?, m)
    }

    /// Same residue field, different precision (no ceiling check beyond 62 bits).
    pub fn at_precision(&self, m: u32) -> Result<Self, RingError> {
        Self::with_ceiling(self.inner.spec.clone(), m, m.max(DEFAULT_PRECISION_CEILING))
    }

    /// The residue field `F_q` (precision 1).
    pub fn residue_field(&self) -> Self {
        if self.inner.m == 1 {
            self.clone()
        } else {
            self.at_precision(1).expect("precision 1 is always valid")
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }
    pub fn p(&self) -> u64 {
        self.inner.spec.p()
    }
    pub fn degree(&self) -> usize {
        self.inner.spec.degree()
    }
    pub fn precision(&self) -> u32 {
        self.inner.m
    }
    /// `p^m`, the characteristic of the ring.
    pub fn modulus_int(&self) -> u64 {
        self.inner.pm
    }
    pub fn q(&self) -> u64 {
        self.inner.spec.q()
    }
    pub fn is_field(&self) -> bool {
        self.inner.m == 1
    }
    pub fn same_residue_field(&self, other: &GaloisRing) -> bool {
        self.inner.spec == other.inner.spec
    }

    // ---- construction -------------------------------------------------

    pub fn zero(&self) -> Elem {
        Elem(SmallVec::from_elem(0, self.degree()))
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Elem {
        let mut e = self.zero();
        e.0[0] = (v as i128).rem_euclid(self.inner.pm as i128) as u64;
        e
    }

    /// Reduces arbitrary integer coefficients (low-to-high powers of `x`).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Elem {
        let pm = self.inner.pm as i128;
        let mut acc: Vec<u128> = coeffs
            .iter()
            .map(|c| (*c as i128).rem_euclid(pm) as u128)
            .collect();
        self.reduce_poly(&mut acc)
    }

    /// Multiplicative generator of `F_q^x` found by search (precision 1 semantics).
    pub fn primitive_element(&self) -> Elem {
        let f = self.residue_field();
        let order = f.q() - 1;
        let factors = prime_factors(order);
        for a in f.elements() {
            if f.is_zero(&a) {
                continue;
            }
            if factors.iter().all(|&r| f.pow(&a, order / r) != f.one()) {
                return a;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    /// All `q` elements of the residue field, in lexicographic coefficient order.
    pub fn elements(&self) -> Vec<Elem> {
        let p = self.p();
        let deg = self.degree();
        let q = self.q();
        (0..q)
            .map(|mut idx| {
                let mut e = self.zero();
                for i in 0..deg {
                    e.0[i] = idx % p;
                    idx /= p;
                }
                e
            })
            .collect()
    }

    // ---- predicates ---------------------------------------------------

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    /// Units are exactly the elements with nonzero residue.
    pub fn is_unit(&self, a: &Elem) -> bool {
        let p = self.p();
        a.0.iter().any(|&c| c % p != 0)
    }

    /// Largest `k < m` with `p^k | a`, or `None` for zero.
    pub fn valuation(&self, a: &Elem) -> Option<u32> {
        if self.is_zero(a) {
            return None;
        }
        let p = self.p();
        let mut k = 0;
        loop {
            let pk = p.pow(k + 1);
            if a.0.iter().all(|&c| c % pk == 0) {
                k += 1;
            } else {
                return Some(k);
            }
        }
    }

    /// Integer value of an element of `Z/p^m` (degree-1 rings only).
    pub fn to_int(&self, a: &Elem) -> u64 {
        debug_assert_eq!(self.degree(), 1);
        a.0[0]
    }

    /// Symmetric representative in `(-p^m/2, p^m/2]` (degree-1 rings only).
    pub fn to_signed(&self, a: &Elem) -> i64 {
        let v = a.0[0];
        let pm = self.inner.pm;
        if v > pm / 2 {
            v as i64 - pm as i64
        } else {
            v as i64
        }
    }

    // ---- arithmetic -----------------------------------------------------

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let pm = self.inner.pm;
        let mut out = a.clone();
        for (o, &y) in out.0.iter_mut().zip(b.0.iter()) {
            *o = (*o + y) % pm;
        }
        out
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        let pm = self.inner.pm;
        let mut out = a.clone();
        for (o, &y) in out.0.iter_mut().zip(b.0.iter()) {
            *o = (*o + pm - y) % pm;
        }
        out
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        let pm = self.inner.pm;
        let mut out = a.clone();
        for o in out.0.iter_mut() {
            *o = (pm - *o) % pm;
        }
        out
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let pm = self.inner.pm as u128;
        let deg = self.degree();
        if deg == 1 {
            let v = (a.0[0] as u128 * b.0[0] as u128) % pm;
            return Elem(SmallVec::from_elem(v as u64, 1));
        }
        let mut prod = vec![0u128; 2 * deg - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % pm;
            }
        }
        self.reduce_poly(&mut prod)
    }

    /// Multiplies by an integer.
    pub fn mul_int(&self, a: &Elem, k: i64) -> Elem {
        self.mul(a, &self.from_int(k))
    }

    /// Multiplies by `p^k`.
    pub fn mul_p_pow(&self, a: &Elem, k: u32) -> Elem {
        if k >= self.inner.m {
            return self.zero();
        }
        self.mul_int(a, self.p().pow(k) as i64)
    }

    fn reduce_poly(&self, acc: &mut [u128]) -> Elem {
        let deg = self.degree();
        let pm = self.inner.pm as u128;
        let modulus = self.inner.spec.modulus();
        for top in (deg..acc.len()).rev() {
            let c = acc[top] % pm;
            if c == 0 {
                continue;
            }
            acc[top] = 0;
            let shift = top - deg;
            for (i, &mi) in modulus[..deg].iter().enumerate() {
                acc[shift + i] = (acc[shift + i] + (pm - c) * mi as u128) % pm;
            }
        }
        let mut out = self.zero();
        for i in 0..deg.min(acc.len()) {
            out.0[i] = (acc[i] % pm) as u64;
        }
        out
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; negative exponents require a unit.
    pub fn pow_signed(&self, a: &Elem, e: i64) -> Result<Elem, RingError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow(&inv, e.unsigned_abs()))
        }
    }

    /// Inverse of a unit: residue inverse then Newton iteration `x <- x(2 - ax)`.
    pub fn inv(&self, a: &Elem) -> Result<Elem, RingError> {
        if !self.is_unit(a) {
            return Err(RingError::NotInvertible);
        }
        let mut x = if self.degree() == 1 {
            let v = inv_mod_u64(a.0[0] % self.p(), self.p()).ok_or(RingError::NotInvertible)?;
            self.from_int(v as i64)
        } else {
            let f = self.residue_field();
            let ar = f.reduce_unchecked(a);
            let r = f.pow(&ar, f.q() - 2);
            self.lift_unchecked(&r)
        };
        let two = self.from_int(2);
        let mut prec = 1;
        while prec < self.inner.m {
            x = self.mul(&x, &self.sub(&two, &self.mul(a, &x)));
            prec *= 2;
        }
        Ok(x)
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem, RingError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Frobenius `a -> a^p`; an automorphism on the residue field.
    pub fn frobenius(&self, a: &Elem) -> Elem {
        self.pow(a, self.p())
    }

    /// Square root of a unit, via residue search and Hensel lifting.
    pub fn sqrt(&self, a: &Elem) -> Result<Elem, RingError> {
        if !self.is_unit(a) {
            return Err(RingError::NoSquareRoot);
        }
        let f = self.residue_field();
        let ar = f.reduce_unchecked(a);
        let r = f
            .elements()
            .into_iter()
            .find(|x| f.mul(x, x) == ar)
            .ok_or(RingError::NoSquareRoot)?;
        let mut x = self.lift_unchecked(&r);
        let two = self.from_int(2);
        for _ in 0..self.inner.m {
            let fx = self.sub(&self.mul(&x, &x), a);
            let step = self.div(&fx, &self.mul(&two, &x))?;
            x = self.sub(&x, &step);
        }
        Ok(x)
    }

    // ---- precision maps -----------------------------------------------

    /// Teichmuller lift of a residue-field element: the unique `x` with
    /// `x^q = x` reducing to `a`. Computed by iterating `x -> x^q`.
    pub fn teichmuller(&self, a: &Elem) -> Elem {
        let mut x = self.lift_unchecked(a);
        let q = self.q();
        loop {
            let next = self.pow(&x, q);
            if next == x {
                return x;
            }
            x = next;
        }
    }

    /// Ring homomorphism `W/p^m -> W/p^{m'}` for `m' <= m`.
    pub fn reduce(&self, a: &Elem, target: &GaloisRing) -> Result<Elem, RingError> {
        if !self.same_residue_field(target) {
            return Err(RingError::SpecMismatch);
        }
        if target.precision() > self.precision() {
            return Err(RingError::PrecisionIncrease {
                from: self.precision(),
                to: target.precision(),
            });
        }
        Ok(target.reduce_unchecked(a))
    }

    /// Reduces coefficients from a higher-precision ring into `self`.
    pub fn reduce_unchecked(&self, a: &Elem) -> Elem {
        let pm = self.inner.pm;
        Elem(a.0.iter().map(|&c| c % pm).collect())
    }

    /// Coefficient-wise set-theoretic lift into `self` (not a homomorphism).
    pub fn lift_unchecked(&self, a: &Elem) -> Elem {
        let pm = self.inner.pm;
        Elem(a.0.iter().map(|&c| c % pm).collect())
    }

    /// Exact division by `p^k` followed by reduction into `target`.
    ///
    /// Panics if some coefficient is not divisible by `p^k`.
    pub fn shift_down(&self, a: &Elem, k: u32, target: &GaloisRing) -> Elem {
        let pk = self.p().pow(k);
        let pm = target.inner.pm;
        Elem(
            a.0.iter()
                .map(|&c| {
                    assert!(c % pk == 0, "coefficient {c} not divisible by p^{k}");
                    (c / pk) % pm
                })
                .collect(),
        )
    }

    /// Human-readable rendering (integer for prime rings, polynomial otherwise).
    pub fn render(&self, a: &Elem) -> String {
        if self.degree() == 1 {
            return a.0[0].to_string();
        }
        let terms: Vec<String> = a
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of a unit of the residue field.
pub fn residue_order(f: &GaloisRing, a: &Elem) -> u64 {
    let n = f.q() - 1;
    let mut order = n;
    for r in prime_factors(n) {
        while order % r == 0 && f.pow(a, order / r) == f.one() {
            order /= r;
        }
    }
    order
}

/// Discrete logarithm of `a` to base `g` in `F_q^x` by exhaustive search.
pub fn discrete_log(f: &GaloisRing, g: &Elem, a: &Elem) -> Option<u64> {
    let mut acc = f.one();
    for k in 0..f.q() - 1 {
        if &acc == a {
            return Some(k);
        }
        acc = f.mul(&acc, g);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u64, m: u32) -> GaloisRing {
        GaloisRing::zp(p, m).unwrap()
    }

    #[test]
    fn teichmuller_of_two_mod_25() {
        let r = z(5, 2);
        let f = r.residue_field();
        let t = r.teichmuller(&f.from_int(2));
        assert_eq!(r.to_int(&t), 7);
        assert_eq!(r.pow(&t, 4), r.one());
    }

    #[test]
    fn teichmuller_fixes_zero_and_one() {
        for m in 1..=5 {
            let r = z(7, m);
            let f = r.residue_field();
            assert_eq!(r.teichmuller(&f.zero()), r.zero());
            assert_eq!(r.teichmuller(&f.one()), r.one());
        }
    }

    #[test]
    fn reduction_examples() {
        let r = z(5, 2);
        let f = r.residue_field();
        assert_eq!(r.reduce(&r.from_int(7), &f).unwrap(), f.from_int(2));
        let x = r.from_int(13);
        assert_eq!(r.reduce(&x, &r).unwrap(), x);
        assert_eq!(r.reduce(&r.from_int(5 * 3), &f).unwrap(), f.zero());
        assert!(matches!(
            f.reduce(&f.one(), &r),
            Err(RingError::PrecisionIncrease { from: 1, to: 2 })
        ));
    }

    #[test]
    fn inverse_in_extension_ring() {
        let spec = crate::make_field(3, 2, &[1, 0, 1]).unwrap();
        let r = GaloisRing::new(spec, 3).unwrap();
        for a in r.residue_field().elements() {
            let x = r.add(&r.lift_unchecked(&a), &r.mul_p_pow(&r.from_coeffs(&[1, 2]), 1));
            match r.inv(&x) {
                Ok(y) => assert_eq!(r.mul(&x, &y), r.one()),
                Err(_) => assert!(!r.is_unit(&x)),
            }
        }
    }

    #[test]
    fn precision_ceiling_enforced() {
        let spec = FieldSpec::prime(5).unwrap();
        assert!(GaloisRing::new(spec.clone(), 8).is_ok());
        assert!(GaloisRing::new(spec.clone(), 9).is_err());
        assert!(GaloisRing::new(spec, 0).is_err());
    }

    #[test]
    fn sqrt_roundtrip_and_failure() {
        let r = z(7, 3);
        let two = r.from_int(2);
        let s = r.sqrt(&two).unwrap();
        assert_eq!(r.mul(&s, &s), two);
        assert_eq!(r.sqrt(&r.from_int(3)), Err(RingError::NoSquareRoot));
    }

    #[test]
    fn primitive_element_has_full_order() {
        let f = z(23, 1);
        let g = f.primitive_element();
        assert_eq!(residue_order(&f, &g), 22);
        assert_eq!(discrete_log(&f, &g, &f.pow(&g, 9)), Some(9));
    }
}
