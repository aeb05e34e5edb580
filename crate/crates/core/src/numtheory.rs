//! Integer helpers: primality, integer roots, and the lcm lower bound.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Deterministic primality test by trial division. Exact for all u64 inputs;
/// the moduli used by this crate are capped at 2^31 - 1 so this is fast.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Floor of the square root, exact.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64 + 1;
    while x * x > n {
        x -= 1;
    }
    x
}

/// Floor of the e-th root, exact. `e >= 1`.
pub fn nth_root_floor(n: u64, e: u32) -> u64 {
    assert!(e >= 1);
    if e == 1 || n < 2 {
        return n;
    }
    let mut lo = 1u64;
    let mut hi = 2u64;
    while pow_at_most(hi, e, n) {
        lo = hi;
        hi *= 2;
    }
    // invariant: lo^e <= n < hi^e
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pow_at_most(mid, e, n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn pow_at_most(base: u64, e: u32, limit: u64) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc *= base as u128;
        if acc > limit as u128 {
            return false;
        }
    }
    true
}

/// Number of bits needed to index s values: ceil(log2 s). Zero for s <= 1.
pub fn ceil_log2(s: u64) -> u32 {
    if s <= 1 {
        0
    } else {
        64 - (s - 1).leading_zeros()
    }
}

/// Exact lcm of a tuple together with the product-over-pairwise-gcds lower
/// bound and the multiplicative gcd inequality checked against a probe value.
#[derive(Debug, Clone)]
pub struct LcmBoundReport {
    /// lcm(a_1, ..., a_s), exact.
    pub lcm: BigUint,
    /// Numerator of the reduced lower-bound fraction prod(a_i) / prod(gcd(a_i, a_j)).
    pub bound_numer: BigUint,
    /// Denominator of the reduced lower-bound fraction.
    pub bound_denom: BigUint,
    /// lcm >= bound, which must always hold.
    pub bound_holds: bool,
    /// The probe b used for the gcd inequality.
    pub probe: u64,
    /// gcd(b, prod(a_i)) <= prod(gcd(b, a_i)), which must always hold.
    pub gcd_claim_ok: bool,
}

/// Computes the lcm of `values` (all >= 1, at least two of them), the lower
/// bound prod(a_i) / prod_{i<j} gcd(a_i, a_j) as a reduced fraction, and
/// checks gcd(b, prod(a_i)) <= prod_i gcd(b, a_i) for the probe `b`
/// (defaults to sum(a_i) + 1 when not supplied).
pub fn lcm_product_bound(values: &[u64], probe: Option<u64>) -> Result<LcmBoundReport> {
    if values.len() < 2 {
        return Err(Error::TooFewEntries {
            got: values.len(),
            min: 2,
        });
    }
    if values.iter().any(|&v| v == 0) {
        return Err(Error::NonPositiveEntry);
    }

    let big: Vec<BigUint> = values.iter().map(|&v| BigUint::from(v)).collect();
    let lcm = big.iter().fold(BigUint::from(1u32), |acc, v| acc.lcm(v));

    let mut numer: BigUint = big.iter().product();
    let mut denom = BigUint::from(1u32);
    for i in 0..big.len() {
        for j in i + 1..big.len() {
            denom *= big[i].gcd(&big[j]);
        }
    }
    let g = numer.gcd(&denom);
    numer /= &g;
    denom /= &g;
    let bound_holds = &lcm * &denom >= numer;

    let b = probe.unwrap_or_else(|| {
        values
            .iter()
            .fold(0u64, |acc, &v| acc.wrapping_add(v))
            .wrapping_add(1)
            .max(1)
    });
    let b_big = BigUint::from(b);
    let product: BigUint = big.iter().product();
    let lhs = b_big.gcd(&product);
    let rhs: BigUint = big.iter().map(|v| b_big.gcd(v)).product();
    let gcd_claim_ok = lhs <= rhs;

    Ok(LcmBoundReport {
        lcm,
        bound_numer: numer,
        bound_denom: denom,
        bound_holds,
        probe: b,
        gcd_claim_ok,
    })
}
