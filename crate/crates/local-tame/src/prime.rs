use crate::error::LocalError;

/// `v ≡ 1 mod p` and `v ≢ 1 mod p²`.
///
/// Primality of `v` and the splitting condition are the caller's responsibility.
pub fn is_trivial_prime(v: u64, p: u64) -> bool {
    v % p == 1 % p && v % (p * p) != 1 % (p * p)
}

/// A prime `v` that is trivial relative to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrivialPrime {
    v: u64,
    p: u64,
}

impl TrivialPrime {
    pub fn new(v: u64, p: u64) -> Result<Self, LocalError> {
        if !is_trivial_prime(v, p) {
            return Err(LocalError::NotTrivialPrime { v, p });
        }
        Ok(TrivialPrime { v, p })
    }
    pub fn v(&self) -> u64 {
        self.v
    }
    pub fn p(&self) -> u64 {
        self.p
    }
}
