//! Arithmetic in the prime field `F_p`.

use crate::error::{Error, Result};

/// Default working prime.
pub const DEFAULT_PRIME: u32 = 32003;
/// Default second prime used for cross-validation runs.
pub const DEFAULT_CHECK_PRIME: u32 = 65521;

/// A prime field `F_p` with `p < 2^31`, so that every product of two
/// residues fits in a `u64` without overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 3 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::Argument(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer to its residue.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a - c*b`, the row operation used everywhere in elimination.
    #[inline]
    pub fn sub_mul(&self, a: u32, c: u32, b: u32) -> u32 {
        self.sub(a, self.mul(c, b))
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on i64
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        t.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(2).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let k = PrimeField::default();
        for a in [1u32, 2, 3, 17, 32002, 12345] {
            assert_eq!(k.mul(a, k.inv(a)), 1);
        }
        assert_eq!(k.from_i64(-1), 32002);
        assert_eq!(k.signed(32002), -1);
    }
}
