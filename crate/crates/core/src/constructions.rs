//! Explicit codes and repair schemes: the four-node demonstration code, the
//! two-half construction with its gamma design, orbit helper families for
//! full-length codes, the folded variant repairable by any d helpers, and a
//! randomized existence search for dimension-2 codes.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{AffineMap, Polynomial, RsCode};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::numtheory::{ceil_log2, isqrt, nth_root_floor};
use crate::repair::RepairScheme;

/// A [4, 2] code over F_p with one validated-by-construction scheme per node.
#[derive(Clone, Debug)]
pub struct ToyFixture {
    pub code: RsCode,
    /// `schemes[i]` repairs node i using the other three nodes.
    pub schemes: Vec<RepairScheme>,
    pub t: u64,
}

/// Builds the [4, 2] code on the points 0, -1, (p-1)/2, -(2t+1) with
/// t = floor(sqrt(p)/5), and for each failed node i the scheme with
/// gamma_j = alpha_j - alpha_i for the three remaining nodes.
pub fn toy_code_and_schemes(p: u64) -> Result<ToyFixture> {
    let field = PrimeField::new(p)?;
    let t = isqrt(p) / 5;
    if t == 0 {
        return Err(Error::InvalidConstruction("prime too small: t = floor(sqrt(p)/5) vanishes"));
    }
    let points = vec![
        0,
        field.from_signed(-1),
        (p - 1) / 2,
        field.from_signed(-(2 * t as i64 + 1)),
    ];
    let code = RsCode::new(field, 2, points).map_err(|e| match e {
        Error::DuplicatePoints => Error::InvalidConstruction("prime too small: evaluation points collide"),
        other => other,
    })?;
    let mut schemes = Vec::with_capacity(4);
    for failed in 0..4 {
        let pairs: Vec<(usize, u64)> = (0..4)
            .filter(|&j| j != failed)
            .map(|j| (j, field.sub(code.point(j), code.point(failed))))
            .collect();
        schemes.push(RepairScheme::new(code.clone(), failed, &pairs, t)?);
    }
    Ok(ToyFixture { code, schemes, t })
}

/// An [n, k] code on the points {1, ..., n/2} and {r+1, ..., r+n/2} with
/// r = floor(p^(1/(d-k+1))). A node in one half is repairable by any d
/// helpers from the other half.
#[derive(Clone, Debug)]
pub struct HalvedCode {
    code: RsCode,
    n: usize,
    k: usize,
    d: usize,
    r: u64,
}

pub fn halved_code(n: usize, k: usize, d: usize, p: u64) -> Result<HalvedCode> {
    let field = PrimeField::new(p)?;
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidConstruction("n must be positive and even"));
    }
    if k == 0 || k >= d || d > n / 2 {
        return Err(Error::InvalidConstruction("need 0 < k < d <= n/2"));
    }
    let r = nth_root_floor(p, (d - k + 1) as u32);
    let half = (n / 2) as u64;
    if r < half {
        return Err(Error::InvalidConstruction("halves collide: r < n/2"));
    }
    if r + half >= p {
        return Err(Error::InvalidConstruction("second half wraps around the modulus"));
    }
    let mut points: Vec<u64> = (1..=half).collect();
    points.extend((1..=half).map(|i| r + i));
    let code = RsCode::new(field, k, points)?;
    Ok(HalvedCode { code, n, k, d, r })
}

impl HalvedCode {
    pub fn code(&self) -> &RsCode {
        &self.code
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn is_first_half(&self, index: usize) -> bool {
        index < self.n / 2
    }

    /// Indices of the half not containing `index`.
    pub fn opposite_half(&self, index: usize) -> Vec<usize> {
        if self.is_first_half(index) {
            (self.n / 2..self.n).collect()
        } else {
            (0..self.n / 2).collect()
        }
    }
}

/// The gamma design for repairing `delta_point` from d helpers across the
/// halves. Helper points must be ascending; position i (1-based) gets
///   (-1)^k (a_i - delta) prod_{j != i} (a_j - a_i)    for i <= k-1,
///   (a_i - delta) prod_{j < k} (a_i - a_j)            for i >= k.
fn cross_half_gammas(field: PrimeField, k: usize, delta_point: u64, helper_points: &[u64]) -> Vec<u64> {
    let sign = if k % 2 == 0 { 1 } else { field.from_signed(-1) };
    helper_points
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let base = field.sub(ai, delta_point);
            if i + 1 <= k.saturating_sub(1) {
                let mut prod = 1u64;
                for (j, &aj) in helper_points.iter().enumerate() {
                    if j != i {
                        prod = field.mul(prod, field.sub(aj, ai));
                    }
                }
                field.mul(field.mul(sign, base), prod)
            } else {
                let mut prod = 1u64;
                for &aj in &helper_points[..k - 1] {
                    prod = field.mul(prod, field.sub(ai, aj));
                }
                field.mul(base, prod)
            }
        })
        .collect()
}

/// The scheme repairing `delta` from exactly d helpers in the opposite half,
/// with gammas from the cross-half design and the caller's t.
pub fn halved_scheme(hc: &HalvedCode, delta: usize, helpers: &[usize], t: u64) -> Result<RepairScheme> {
    if delta >= hc.n {
        return Err(Error::IndexOutOfRange { index: delta, n: hc.n });
    }
    if helpers.len() != hc.d {
        return Err(Error::InvalidConstruction("helper set must have exactly d nodes"));
    }
    let delta_first = hc.is_first_half(delta);
    for &h in helpers {
        if h >= hc.n {
            return Err(Error::IndexOutOfRange { index: h, n: hc.n });
        }
        if hc.is_first_half(h) == delta_first {
            return Err(Error::InvalidConstruction("helpers must come from the half opposite the failed node"));
        }
    }
    let mut sorted = helpers.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateHelper(sorted[0]));
    }
    // within a half, ascending index is ascending point
    let points: Vec<u64> = sorted.iter().map(|&h| hc.code.point(h)).collect();
    let gammas = cross_half_gammas(hc.code.field(), hc.k, hc.code.point(delta), &points);
    let pairs: Vec<(usize, u64)> = sorted.into_iter().zip(gammas).collect();
    RepairScheme::new(hc.code.clone(), delta, &pairs, t)
}

/// t = ceil(xi * p^(1 - 1/(d-k+1))) for a caller-chosen constant xi > 0.
pub fn suggested_t(p: u64, k: usize, d: usize, xi: f64) -> u64 {
    let e = (d - k + 1) as f64;
    (xi * (p as f64).powf(1.0 - 1.0 / e)).ceil().max(1.0) as u64
}

/// Result of calibrating the largest usable cell length.
#[derive(Clone, Copy, Debug)]
pub struct CalibratedT {
    pub t: u64,
    /// ceil(log2 ceil(p/t)) at the calibrated t.
    pub per_helper_bits: u32,
    /// Even t = 1 fails the validity condition; t = 1 is returned but only as
    /// a flagged trivial-equivalent fallback.
    pub trivial_fallback: bool,
    /// The search stopped at the largest t whose enumeration fits the budget,
    /// not at an invalidity threshold.
    pub budget_capped: bool,
    /// Number of oracle validations the search spent.
    pub probes: u32,
}

/// Largest t in [1, (p-1)/2] for which the scheme validates, found by doubling
/// then bisection (validity is monotone: shrinking t only shrinks the
/// constraint sets). The search never enumerates past `budget`; if the
/// threshold lies beyond the budget-feasible range, the largest feasible
/// (still valid) t is returned with `budget_capped` set.
pub fn calibrate_t(hc: &HalvedCode, delta: usize, helpers: &[usize], budget: u64) -> Result<CalibratedT> {
    let p = hc.code.field().modulus();
    let cap = enumeration_cap(hc.k, p, budget)?;

    let mut probes = 0u32;
    let mut is_valid = |t: u64| -> Result<bool> {
        probes += 1;
        Ok(halved_scheme(hc, delta, helpers, t)?.validate(budget)?.valid)
    };

    if !is_valid(1)? {
        return Ok(CalibratedT {
            t: 1,
            per_helper_bits: ceil_log2(p),
            trivial_fallback: true,
            budget_capped: false,
            probes,
        });
    }

    let mut lo = 1u64; // largest known-valid
    let mut first_invalid: Option<u64> = None;
    let mut probe = 2u64;
    while probe < cap {
        if is_valid(probe)? {
            lo = probe;
            probe = probe.saturating_mul(2);
        } else {
            first_invalid = Some(probe);
            break;
        }
    }
    if first_invalid.is_none() && cap > lo {
        if is_valid(cap)? {
            lo = cap;
        } else {
            first_invalid = Some(cap);
        }
    }

    let budget_capped = match first_invalid {
        None => true, // valid all the way to the feasible cap
        Some(mut hi) => {
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if is_valid(mid)? {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            false
        }
    };

    Ok(CalibratedT {
        t: lo,
        per_helper_bits: ceil_log2(p.div_ceil(lo)),
        trivial_fallback: false,
        budget_capped,
        probes,
    })
}

/// Largest t <= (p-1)/2 with (2t+1)^k within the budget.
fn enumeration_cap(k: usize, p: u64, budget: u64) -> Result<u64> {
    let fits = |t: u64| -> bool {
        let mut acc: u128 = 1;
        for _ in 0..k {
            acc = acc.saturating_mul((2 * t + 1) as u128);
        }
        acc <= budget as u128
    };
    if !fits(1) {
        return Err(Error::BudgetExceeded { candidates: 3u128.pow(k as u32), budget });
    }
    let mut lo = 1u64;
    let mut hi = (p - 1) / 2;
    if fits(hi) {
        return Ok(hi);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// One helper set in the orbit of the base set under the affine stabilizer of
/// the failed point.
#[derive(Clone, Debug)]
pub struct OrbitMember {
    /// Scale a of the stabilizer element producing this member.
    pub scale: u64,
    /// Affine map sending 1 to the failed point and [r+1, r+d] onto `points`.
    pub transform: AffineMap,
    /// Helper points in the image order of r+1, ..., r+d.
    pub points: Vec<u64>,
}

/// All distinct images of the base helper set under the stabilizer of delta.
#[derive(Clone, Debug)]
pub struct OrbitHelperFamily {
    pub p: u64,
    pub k: usize,
    pub d: usize,
    pub delta: u64,
    pub r: u64,
    /// h([r+1, r+d]) for h(x) = x + (delta - 1), in image order.
    pub base_set: Vec<u64>,
    pub members: Vec<OrbitMember>,
    /// Guaranteed minimum number of distinct members: ceil((p-1)/d).
    pub count_lower_bound: u64,
}

/// Enumerates the orbit {g(base set) : g fixes delta} of helper sets for the
/// full-length code, deduplicated by sorted point lists, each paired with the
/// transform reducing it onto the canonical configuration (1, [r+1, r+d]).
pub fn orbit_helper_sets(p: u64, k: usize, d: usize, delta: u64) -> Result<OrbitHelperFamily> {
    let field = PrimeField::new(p)?;
    if k == 0 || k >= d {
        return Err(Error::InvalidConstruction("need 0 < k < d"));
    }
    let r = nth_root_floor(p, (d - k + 1) as u32);
    if r + d as u64 >= p {
        return Err(Error::InvalidConstruction("interval [r+1, r+d] wraps around the modulus"));
    }
    let delta = field.reduce(delta);
    let base_interval: Vec<u64> = (1..=d as u64).map(|i| r + i).collect();

    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut members = Vec::new();
    let mut base_set = Vec::new();
    for a in 1..p {
        // g_a(x) = a*x + delta*(1-a) fixes delta; composed with h(x) = x + (delta-1)
        // this is x -> a*x + (delta - a), which sends 1 to delta.
        let transform = AffineMap::new(field, a, field.sub(delta, a))?;
        let points: Vec<u64> = base_interval.iter().map(|&x| transform.apply(x)).collect();
        if points.contains(&delta) {
            return Err(Error::InvalidConstruction("helper set touches the failed point"));
        }
        if a == 1 {
            base_set = points.clone();
        }
        let mut key = points.clone();
        key.sort_unstable();
        if seen.insert(key) {
            members.push(OrbitMember { scale: a, transform, points });
        }
    }

    Ok(OrbitHelperFamily {
        p,
        k,
        d,
        delta,
        r,
        base_set,
        members,
        count_lower_bound: (p - 1).div_ceil(d as u64),
    })
}

/// The scheme repairing `delta` with one orbit member's points. The gammas are
/// the cross-half design of the reduced configuration (failed point 1, helpers
/// r+1, ..., r+d); symbol values are untouched by the reduction, so the same
/// partitions apply verbatim.
pub fn orbit_member_scheme(family: &OrbitHelperFamily, member: &OrbitMember, t: u64) -> Result<RepairScheme> {
    let field = PrimeField::new(family.p)?;
    let base_interval: Vec<u64> = (1..=family.d as u64).map(|i| family.r + i).collect();
    let gammas = cross_half_gammas(field, family.k, 1, &base_interval);
    let mut points = vec![family.delta];
    points.extend_from_slice(&member.points);
    let code = RsCode::new(field, family.k, points)?;
    let pairs: Vec<(usize, u64)> = (1..=family.d).zip(gammas).collect();
    RepairScheme::new(code, 0, &pairs, t)
}

/// The reduced two-half code behind every orbit member: [2d, k] on the points
/// {1, ..., d} and {r+1, ..., r+d}. Calibrating it calibrates all members.
pub fn orbit_reduced_code(p: u64, k: usize, d: usize) -> Result<HalvedCode> {
    halved_code(2 * d, k, d, p)
}

/// An [n, k] code of super-symbols (f(i), f(i+r)) over a [2n, 2k] two-half
/// base code; every node is repairable by any d other nodes.
#[derive(Clone, Debug)]
pub struct FoldedCode {
    base: HalvedCode,
    n: usize,
    k: usize,
    d: usize,
}

pub fn folded_code(n: usize, k: usize, d: usize, p: u64) -> Result<FoldedCode> {
    if k == 0 || 2 * k >= d || d >= n {
        return Err(Error::InvalidConstruction("need 0 < 2k < d < n"));
    }
    let base = halved_code(2 * n, 2 * k, d, p)?;
    Ok(FoldedCode { base, n, k, d })
}

impl FoldedCode {
    pub fn base(&self) -> &HalvedCode {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> u64 {
        self.base.r
    }

    /// Super-symbols of the codeword of f (degree < 2k): node i holds
    /// (f(i+1), f(i+1+r)), 0-based i.
    pub fn super_symbols(&self, f: &Polynomial) -> Result<Vec<(u64, u64)>> {
        let cw = self.base.code().encode(f)?;
        Ok((0..self.n).map(|i| (cw.value(i), cw.value(self.n + i))).collect())
    }

    /// Plans the repair of `node` from the super-symbols of `helpers`: the
    /// first coordinate f(i) is repaired from the helpers' second coordinates
    /// f(j+r) (opposite-half points), and vice versa. With `t = None` both
    /// sub-schemes are calibrated and run at the smaller calibrated t.
    pub fn repair_plan(
        &self,
        node: usize,
        helpers: &[usize],
        t: Option<u64>,
        budget: u64,
    ) -> Result<FoldedRepairPlan> {
        if node >= self.n {
            return Err(Error::IndexOutOfRange { index: node, n: self.n });
        }
        if helpers.len() != self.d {
            return Err(Error::InvalidConstruction("helper set must have exactly d nodes"));
        }
        let mut nodes = helpers.to_vec();
        nodes.sort_unstable();
        if nodes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateHelper(nodes[0]));
        }
        for &j in &nodes {
            if j >= self.n {
                return Err(Error::IndexOutOfRange { index: j, n: self.n });
            }
            if j == node {
                return Err(Error::FailedAmongHelpers);
            }
        }
        let first_helpers: Vec<usize> = nodes.iter().map(|&j| self.n + j).collect();
        let second_helpers = nodes.clone();
        let t = match t {
            Some(t) => t,
            None => {
                let a = calibrate_t(&self.base, node, &first_helpers, budget)?;
                let b = calibrate_t(&self.base, self.n + node, &second_helpers, budget)?;
                if a.trivial_fallback || b.trivial_fallback {
                    return Err(Error::InvalidConstruction("a sub-repair has no valid cell length"));
                }
                a.t.min(b.t)
            }
        };
        let first = halved_scheme(&self.base, node, &first_helpers, t)?;
        let second = halved_scheme(&self.base, self.n + node, &second_helpers, t)?;
        Ok(FoldedRepairPlan { node, helper_nodes: nodes, first, second, t })
    }
}

/// Two cross-half sub-schemes reconstructing one super-symbol.
#[derive(Clone, Debug)]
pub struct FoldedRepairPlan {
    pub node: usize,
    /// Helper node indices, ascending.
    pub helper_nodes: Vec<usize>,
    /// Repairs f(i+1) from the helpers' second coordinates.
    pub first: RepairScheme,
    /// Repairs f(i+1+r) from the helpers' first coordinates.
    pub second: RepairScheme,
    pub t: u64,
}

impl FoldedRepairPlan {
    /// `helper_supers[j]` is the super-symbol held by `helper_nodes[j]`.
    pub fn repair(&self, helper_supers: &[(u64, u64)], budget: u64) -> Result<(u64, u64)> {
        let second_coords: Vec<u64> = helper_supers.iter().map(|&(_, hi)| hi).collect();
        let messages = self.first.messages_from_helper_values(&second_coords)?;
        let lo = self.first.repair(&messages, budget)?;

        let first_coords: Vec<u64> = helper_supers.iter().map(|&(lo, _)| lo).collect();
        let messages = self.second.messages_from_helper_values(&first_coords)?;
        let hi = self.second.repair(&messages, budget)?;
        Ok((lo, hi))
    }

    /// Transmitted bits across both sub-repairs: 2 * d * ceil(log2 ceil(p/t)).
    pub fn total_bits(&self) -> u64 {
        self.first.total_bits() + self.second.total_bits()
    }
}

/// Outcome of the randomized search over dimension-2 evaluation sets.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub trials: u64,
    pub valid_count: u64,
    pub fraction: f64,
    /// Valid evaluation sets as sorted point lists, in discovery order.
    pub valid_sets: Vec<Vec<u64>>,
}

/// Samples `trials` uniformly random n-tuples of distinct points (tuples with
/// repeats are resampled, never counted) and checks, for every failed index
/// and every d-subset of the rest, the scheme with gamma_i = alpha_i -
/// alpha_failed at cell length t. Fully determined by (p, n, d, t, trials, seed).
pub fn search_k2(
    p: u64,
    n: usize,
    d: usize,
    t: u64,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<SearchOutcome> {
    let field = PrimeField::new(p)?;
    if !(2 <= d && d < n) {
        return Err(Error::InvalidConstruction("need 2 <= d < n"));
    }
    if n as u64 > p {
        return Err(Error::InvalidDimension { k: 2, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut valid_sets = Vec::new();
    for _ in 0..trials {
        let mut points: Vec<u64> = Vec::with_capacity(n);
        while points.len() < n {
            let x = rng.gen_range(0..p);
            if !points.contains(&x) {
                points.push(x);
            }
        }
        if tuple_repairs_everywhere(field, &points, d, t, budget)? {
            let mut canonical = points.clone();
            canonical.sort_unstable();
            valid_sets.push(canonical);
        }
    }
    let valid_count = valid_sets.len() as u64;
    Ok(SearchOutcome {
        trials,
        valid_count,
        fraction: if trials == 0 { 0.0 } else { valid_count as f64 / trials as f64 },
        valid_sets,
    })
}

fn tuple_repairs_everywhere(field: PrimeField, points: &[u64], d: usize, t: u64, budget: u64) -> Result<bool> {
    let n = points.len();
    let code = RsCode::new(field, 2, points.to_vec())?;
    for failed in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&i| i != failed).collect();
        for combo in combinations(&rest, d) {
            let pairs: Vec<(usize, u64)> = combo
                .iter()
                .map(|&i| (i, field.sub(points[i], points[failed])))
                .collect();
            let scheme = RepairScheme::new(code.clone(), failed, &pairs, t)?;
            if !scheme.validate(budget)?.valid {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The t suggested by the counting argument for the dimension-2 search:
/// ceil(eps * p^((d-2)/(d-1)) / (10 * n^((d+1)/(d-1)))), at least 1.
pub fn search_suggested_t(p: u64, n: usize, d: usize, eps: f64) -> u64 {
    let dd = d as f64;
    let v = eps * (p as f64).powf((dd - 2.0) / (dd - 1.0))
        / (10.0 * (n as f64).powf((dd + 1.0) / (dd - 1.0)));
    v.ceil().max(1.0) as u64
}

/// All d-element subsets of `pool`, in lexicographic order.
pub fn combinations(pool: &[usize], d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d > pool.len() {
        return out;
    }
    let mut current = Vec::with_capacity(d);
    fn rec(pool: &[usize], d: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == d {
            out.push(current.clone());
            return;
        }
        let needed = d - current.len();
        for i in start..=pool.len() - needed {
            current.push(pool[i]);
            rec(pool, d, i + 1, current, out);
            current.pop();
        }
    }
    rec(pool, d, 0, &mut current, &mut out);
    out
}
