//! Independent oracles shared by the integration suites. These deliberately
//! avoid the library's enumeration path: membership is tested against
//! explicitly constructed sets and polynomials are evaluated by Horner.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rs_repair::{IntervalSpec, Polynomial, PrimeField, RepairScheme};

/// Decides validity by enumerating all p^k polynomials of degree < k:
/// valid iff every polynomial confined to gamma_j * [-t, t] at each helper
/// vanishes at the failed point. Returns the first violating polynomial.
pub fn oracle_validate_all_polys(scheme: &RepairScheme) -> (bool, Option<Polynomial>) {
    let field = scheme.code().field();
    let p = field.modulus();
    let k = scheme.code().k();
    let constraint_sets: Vec<Vec<u64>> = scheme
        .gammas()
        .iter()
        .map(|&g| field.interval_set(IntervalSpec { gamma: g, t: scheme.t() }).unwrap())
        .collect();
    let helper_points: Vec<u64> = scheme.helpers().iter().map(|&h| scheme.code().point(h)).collect();
    let failed_point = scheme.code().point(scheme.failed());

    let mut coeffs = vec![0u64; k];
    loop {
        let poly = Polynomial::new(field, coeffs.clone());
        let confined = helper_points
            .iter()
            .zip(&constraint_sets)
            .all(|(&x, set)| set.binary_search(&poly.eval(x)).is_ok());
        if confined && poly.eval(failed_point) != 0 {
            return (false, Some(poly));
        }
        let mut i = 0;
        loop {
            if i == k {
                return (true, None);
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, field: PrimeField, k: usize) -> Polynomial {
    let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..field.modulus())).collect();
    Polynomial::new(field, coeffs)
}

/// A uniformly random nonempty subset of F_p (size uniform in 1..=p).
pub fn random_subset(rng: &mut ChaCha8Rng, p: u64) -> Vec<u64> {
    let size = rng.gen_range(1..=p) as usize;
    let mut pool: Vec<u64> = (0..p).collect();
    for i in 0..size {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
    }
    pool.truncate(size);
    pool.sort_unstable();
    pool
}

/// Encodes a polynomial, collects the helper messages, and repairs; the
/// result must equal the polynomial's value at the failed point.
pub fn roundtrip_once(scheme: &RepairScheme, poly: &Polynomial, budget: u64) -> bool {
    let cw = scheme.code().encode(poly).unwrap();
    let messages = scheme.messages_from_codeword(&cw).unwrap();
    match scheme.repair(&messages, budget) {
        Ok(v) => v == poly.eval(scheme.code().point(scheme.failed())),
        Err(_) => false,
    }
}
