//! Bandwidth accounting and lower bounds: the cut-set bound, the tighter
//! prime-field bound from sumset expansion, trivial-repair cost, the value-set
//! diagnostic behind the bound, and the secret-sharing leakage demonstration.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::Polynomial;
use crate::constructions::{calibrate_t, orbit_helper_sets, orbit_member_scheme, orbit_reduced_code};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::numtheory::ceil_log2;
use crate::repair::RepairScheme;

/// Achieved bandwidth of a scheme next to the relevant bounds, all in bits
/// (log base 2; fractional values unrounded).
#[derive(Clone, Debug)]
pub struct RepairReport {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Subpacketization: base-field coordinates per code symbol.
    pub ell: u32,
    pub t: u64,
    pub s: u64,
    /// ceil(log2 s), what one helper actually sends per coordinate.
    pub per_helper_bits: u32,
    /// d * ell * per_helper_bits.
    pub total_bits: u64,
    /// d * ell * log2(s), before rounding cells to whole bits.
    pub total_bits_unrounded: f64,
    /// Cut-set bound d * ell * log2(p) / (d + 1 - k).
    pub cutset_bits: f64,
    /// Prime-field per-helper bound (log2(k*p) - 1) / (d - k + 1).
    pub improved_per_helper_bits: f64,
    /// Trivial repair: k full symbols, k * ell * ceil(log2 p).
    pub trivial_bits: u64,
    /// (3n/2 - 2) * log2(p), the subpacketization-2 comparison point;
    /// meaningful (and present) only when d = n - 1.
    pub gw_comparison_bits: Option<f64>,
    pub validated: bool,
}

/// Report for a concrete scheme (subpacketization 1).
pub fn bandwidth_report(scheme: &RepairScheme, validated: bool) -> RepairReport {
    report_from_params(
        scheme.code().field().modulus(),
        Some(scheme.code().n()),
        scheme.code().k(),
        scheme.d(),
        1,
        scheme.t(),
        validated,
    )
    .expect("scheme parameters are in range by construction")
}

/// Report from raw parameters; `n` is only needed for the d = n-1 comparison.
pub fn report_from_params(
    p: u64,
    n: Option<usize>,
    k: usize,
    d: usize,
    ell: u32,
    t: u64,
    validated: bool,
) -> Result<RepairReport> {
    if k == 0 || d < k {
        return Err(Error::HelperCountOutOfRange { d, k, max: usize::MAX });
    }
    if t == 0 || t >= p {
        return Err(Error::CellLengthOutOfRange { t, p });
    }
    let s = p.div_ceil(t);
    let log2p = (p as f64).log2();
    let per_helper_bits = ceil_log2(s);
    let dl = d as f64 * ell as f64;
    Ok(RepairReport {
        p,
        n: n.unwrap_or(0),
        k,
        d,
        ell,
        t,
        s,
        per_helper_bits,
        total_bits: d as u64 * ell as u64 * per_helper_bits as u64,
        total_bits_unrounded: dl * (s as f64).log2(),
        cutset_bits: dl * log2p / (d + 1 - k) as f64,
        improved_per_helper_bits: ((k as f64 * p as f64).log2() - 1.0) / (d - k + 1) as f64,
        trivial_bits: k as u64 * ell as u64 * ceil_log2(p) as u64,
        gw_comparison_bits: n
            .filter(|&n| n >= 2 && d == n - 1)
            .map(|n| (1.5 * n as f64 - 2.0) * log2p),
        validated,
    })
}

/// Every valid symmetric scheme must satisfy s^(d-k+1) >= k*p/2, i.e. the
/// per-helper cost log2(s) is at least (log2(kp) - 1)/(d-k+1). Checked
/// exactly over the integers as 2 * s^(d-k+1) >= k * p.
pub fn improved_bound_holds(p: u64, k: usize, d: usize, s: u64) -> bool {
    let mut acc: u128 = 2;
    for _ in 0..(d - k + 1) {
        acc = acc.saturating_mul(s as u128);
    }
    acc >= k as u128 * p as u128
}

/// `improved_bound_holds` for a concrete scheme.
pub fn improved_bound_consistency(scheme: &RepairScheme) -> bool {
    improved_bound_holds(
        scheme.code().field().modulus(),
        scheme.code().k(),
        scheme.d(),
        scheme.s(),
    )
}

/// The set U of values at the failed point over all polynomials confined to
/// the given cells, computed through the inverse Vandermonde column, plus its
/// sumset lower bound.
#[derive(Clone, Debug)]
pub struct USetDiagnostic {
    /// First column of V^-1 for V_ij = (alpha_j - alpha)^(i-1); all nonzero.
    pub coefficients: Vec<u64>,
    /// U = sum_i coefficients[i] * cells[i], sorted.
    pub u_set: Vec<u64>,
    /// min(sum |A_i| - (k-1), p), from iterating the sumset inequality.
    pub size_lower_bound: u64,
}

/// Builds the Vandermonde matrix on (alpha_j - alpha), inverts it exactly over
/// F_p, and returns the exact sumset sum_i (V^-1)_i1 * A_i. The first column
/// of the inverse is provably nonzero; a zero entry aborts.
pub fn u_set(field: PrimeField, cells: &[Vec<u64>], points: &[u64], failed: u64) -> Result<USetDiagnostic> {
    let k = cells.len();
    if k == 0 {
        return Err(Error::EmptySet);
    }
    if points.len() != k {
        return Err(Error::InvalidConstruction("need exactly one cell per evaluation point"));
    }
    if cells.iter().any(|c| c.is_empty()) {
        return Err(Error::EmptySet);
    }
    let mut distinct = points.to_vec();
    distinct.push(failed);
    distinct.sort_unstable();
    if distinct.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoints);
    }

    let diffs: Vec<u64> = points.iter().map(|&a| field.sub(a, failed)).collect();
    let coefficients = vandermonde_inverse_first_column(field, &diffs)?;
    assert!(
        coefficients.iter().all(|&c| c != 0),
        "first column of the inverse Vandermonde must be nonzero"
    );

    let mut u = vec![0u64];
    for (i, cell) in cells.iter().enumerate() {
        u = field.sumset(&u, &field.scale_set(coefficients[i], cell))?;
    }
    let total: u64 = cells.iter().map(|c| c.len() as u64).sum();
    Ok(USetDiagnostic {
        coefficients,
        u_set: u,
        size_lower_bound: (total - (k as u64 - 1)).min(field.modulus()),
    })
}

/// Solves V x = e_1 by Gaussian elimination; x is the first column of V^-1.
fn vandermonde_inverse_first_column(field: PrimeField, diffs: &[u64]) -> Result<Vec<u64>> {
    let k = diffs.len();
    let mut m = vec![vec![0u64; k + 1]; k];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, &x) in diffs.iter().enumerate() {
            row[j] = field.pow(x, i as u64);
        }
    }
    m[0][k] = 1;
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| m[r][col] != 0)
            .ok_or(Error::DuplicatePoints)?;
        m.swap(col, pivot);
        let inv = field.inv(m[col][col])?;
        for j in col..=k {
            m[col][j] = field.mul(m[col][j], inv);
        }
        for r in 0..k {
            if r != col && m[r][col] != 0 {
                let factor = m[r][col];
                for j in col..=k {
                    m[r][j] = field.sub(m[r][j], field.mul(factor, m[col][j]));
                }
            }
        }
    }
    Ok((0..k).map(|i| m[i][k]).collect())
}

/// One run of the secret-sharing leakage attack: the dealer shares a random
/// secret, the adversary picks an orbit helper set for the share point 0,
/// sees only each chosen share's cell index, and reconstructs the secret.
#[derive(Clone, Debug)]
pub struct LeakageDemo {
    pub p: u64,
    pub k: usize,
    pub d: usize,
    pub secret: u64,
    pub reconstructed: u64,
    /// ceil(log2 s): image size of the leakage function, in bits.
    pub bits_leaked_per_share: u32,
    pub t: u64,
    pub s: u64,
    /// The shares the adversary taps (evaluation points).
    pub helper_points: Vec<u64>,
    pub member_scale: u64,
    /// Calibration fell back to t = 1 with no valid scheme; never expected.
    pub calibration_trivial: bool,
}

/// Runs the attack end to end with seeded randomness. Errors if the
/// reconstruction misses (which a validated scheme rules out).
pub fn leakage_attack_demo(p: u64, k: usize, d: usize, seed: u64, budget: u64) -> Result<LeakageDemo> {
    let field = PrimeField::new(p)?;
    let family = orbit_helper_sets(p, k, d, 0)?;
    // one calibration covers every member: they all reduce to this code
    let reduced = orbit_reduced_code(p, k, d)?;
    let reduced_helpers: Vec<usize> = (d..2 * d).collect();
    let cal = calibrate_t(&reduced, 0, &reduced_helpers, budget)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let member = &family.members[rng.gen_range(0..family.members.len())];
    let scheme = orbit_member_scheme(&family, member, cal.t)?;

    let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
    let poly = Polynomial::new(field, coeffs);
    let secret = poly.eval(0);

    let shares: Vec<u64> = member.points.iter().map(|&x| poly.eval(x)).collect();
    let messages = scheme.messages_from_helper_values(&shares)?;
    let reconstructed = scheme.repair(&messages, budget)?;
    if reconstructed != secret {
        return Err(Error::SecretMismatch { secret, reconstructed });
    }

    Ok(LeakageDemo {
        p,
        k,
        d,
        secret,
        reconstructed,
        bits_leaked_per_share: ceil_log2(scheme.s()),
        t: cal.t,
        s: scheme.s(),
        helper_points: member.points.clone(),
        member_scale: member.scale,
        calibration_trivial: cal.trivial_fallback,
    })
}

/// Number of distinct secrets f(0) among all degree-<k polynomials matching
/// the fully revealed (point, share) pairs. Exhaustive over p^k polynomials;
/// with k-1 shares revealed this is p (perfect privacy). Small p only.
pub fn consistent_secret_count(field: PrimeField, k: usize, revealed: &[(u64, u64)]) -> u64 {
    let p = field.modulus();
    let mut secrets: BTreeSet<u64> = BTreeSet::new();
    let mut coeffs = vec![0u64; k];
    loop {
        let poly = Polynomial::new(field, coeffs.clone());
        if revealed.iter().all(|&(x, y)| poly.eval(x) == y) {
            secrets.insert(poly.eval(0));
        }
        let mut i = 0;
        loop {
            if i == k {
                return secrets.len() as u64;
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
