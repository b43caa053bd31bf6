use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u8; 6] = [2, 3, 5, 7, 11, 13];

/// A prime field `𝔽_p`, `p ∈ {2, 3, 5, 7, 11, 13}`. Scalars are residues in
/// `0..p` stored as `u8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match u8::try_from(p) {
            Ok(q) if SUPPORTED_PRIMES.contains(&q) => Ok(Self { p: q }),
            _ => Err(Error::UnsupportedPrime(p)),
        }
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn order(self) -> u64 {
        self.p as u64
    }

    pub fn residue(self, value: u64) -> Result<u8> {
        if value >= self.p as u64 {
            return Err(Error::ResidueOutOfRange { value, p: self.p });
        }
        Ok(value as u8)
    }

    /// Reduces an arbitrary signed integer.
    pub fn reduce(self, value: i64) -> u8 {
        value.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (s % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + self.p as u16 - b as u16;
        (s % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0);
        // a^(p-2)
        let mut result = 1u8;
        for _ in 0..self.p - 2 {
            result = self.mul(result, a);
        }
        result
    }

    /// All nonzero residues, in increasing order.
    pub fn units(self) -> impl Iterator<Item = u8> {
        1..self.p
    }
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> Self {
        f.p as u64
    }
}
