//! Exact arithmetic over the prime field F_p with a centered-integer view.
//!
//! Elements are canonical residues in [0, p-1] stored as `u64`; products go
//! through `u128` so nothing overflows for p up to 2^31 - 1. The centered
//! view realizes F_p as the integers of absolute value at most (p-1)/2.

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Largest supported modulus.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// The prime field F_p. Construction checks primality deterministically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p > MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of an arbitrary u64.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn from_signed(&self, c: i64) -> u64 {
        c.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        let c = a + b;
        if c >= self.p {
            c - self.p
        } else {
            c
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// a^(p-2) mod p, by Fermat.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// The centered representative c of x: |c| <= (p-1)/2 and c = x (mod p).
    #[inline]
    pub fn centered(&self, x: u64) -> i64 {
        debug_assert!(x < self.p);
        if x <= (self.p - 1) / 2 {
            x as i64
        } else {
            x as i64 - self.p as i64
        }
    }

    /// The set gamma * [-t, t], sorted as canonical residues. It has exactly
    /// 2t+1 elements, which requires 2t+1 <= p; gamma must be nonzero.
    pub fn interval_set(&self, spec: IntervalSpec) -> Result<Vec<u64>> {
        let IntervalSpec { gamma, t } = spec;
        if gamma == 0 || gamma >= self.p {
            return Err(Error::ZeroScale);
        }
        if 2 * t + 1 > self.p {
            return Err(Error::IntervalTooWide { t, p: self.p });
        }
        let mut out = Vec::with_capacity(2 * t as usize + 1);
        for m in -(t as i64)..=t as i64 {
            out.push(self.mul(gamma, self.from_signed(m)));
        }
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
        Ok(out)
    }

    /// Sumset {a + b : a in A, b in B}, sorted canonical residues.
    pub fn sumset(&self, a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut out: Vec<u64> = Vec::with_capacity(a.len() * b.len());
        for &x in a {
            for &y in b {
                out.push(self.add(x, y));
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// {gamma * a : a in A}, sorted canonical residues.
    pub fn scale_set(&self, gamma: u64, a: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = a.iter().map(|&x| self.mul(gamma, x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// {start + i*step : 0 <= i < len}, sorted canonical residues.
    pub fn arithmetic_progression(&self, start: u64, step: u64, len: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(len);
        let mut x = self.reduce(start);
        let step = self.reduce(step);
        for _ in 0..len {
            out.push(x);
            x = self.add(x, step);
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The pair (gamma, t) describing the set gamma * [-t, t].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalSpec {
    pub gamma: u64,
    pub t: u64,
}
