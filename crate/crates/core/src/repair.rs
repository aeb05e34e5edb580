//! The partition repair framework: arithmetic-progression partitions of F_p,
//! helper messages, exhaustive scheme validation, and repair execution.
//!
//! A scheme for a failed node i with helpers D assigns each helper j a nonzero
//! gamma_j and a cell length t. Helper j transmits the index of the cell of
//! the partition gamma_j*A_0, ..., gamma_j*A_{s-1} containing its symbol,
//! where s = ceil(p/t). The scheme is valid when every polynomial of degree
//! below k confined to gamma_j*[-t, t] at all helpers vanishes at the failed
//! point; validity is decided here by exhaustive enumeration, and repair runs
//! the same enumeration restricted to the signaled cells.

use crate::code::{interpolate, Codeword, Polynomial, RsCode};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::numtheory::ceil_log2;

/// Default cap on the number of enumerated interpolation candidates.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// The partition of F_p into s = ceil(p/t) cells: A_m = {mt, ..., mt+t-1} for
/// m <= s-2 and A_{s-1} = {(s-1)t, ..., p-1} (between 1 and t elements).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardPartition {
    p: u64,
    t: u64,
    s: u64,
}

impl StandardPartition {
    pub fn new(p: u64, t: u64) -> Result<Self> {
        if t == 0 || t >= p {
            return Err(Error::CellLengthOutOfRange { t, p });
        }
        Ok(StandardPartition { p, t, s: p.div_ceil(t) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Number of cells.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// The residues of cell m, ascending.
    pub fn cell(&self, m: usize) -> Vec<u64> {
        assert!((m as u64) < self.s, "cell index out of range");
        let start = m as u64 * self.t;
        let end = (start + self.t).min(self.p);
        (start..end).collect()
    }

    pub fn cells(&self) -> Vec<Vec<u64>> {
        (0..self.s as usize).map(|m| self.cell(m)).collect()
    }

    /// Index of the cell containing the residue x.
    #[inline]
    pub fn residue_cell(&self, x: u64) -> usize {
        debug_assert!(x < self.p);
        (x / self.t).min(self.s - 1) as usize
    }
}

/// The unique m with x in gamma*A_m, i.e. the cell of gamma^-1 * x.
pub fn cell_of(field: PrimeField, x: u64, gamma: u64, partition: &StandardPartition) -> Result<usize> {
    let inv = field.inv(field.reduce(gamma)).map_err(|_| Error::ZeroScale)?;
    Ok(partition.residue_cell(field.mul(inv, field.reduce(x))))
}

/// One helper's transmission: the cell index of its symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HelperMessage {
    pub helper: usize,
    pub cell: usize,
}

/// Outcome of exhaustive validation. When invalid, `counterexample` is a
/// polynomial meeting every helper constraint with a nonzero value at the
/// failed point (the first one in enumeration order).
#[derive(Clone, Debug)]
pub struct SchemeValidation {
    pub valid: bool,
    pub counterexample: Option<Polynomial>,
    /// Number of enumeration candidates the check covers: (2t+1)^k.
    pub candidates: u64,
}

/// A repair scheme: failed node, helper set with per-helper gammas, and t.
#[derive(Clone, Debug)]
pub struct RepairScheme {
    code: RsCode,
    failed: usize,
    helpers: Vec<usize>,
    gammas: Vec<u64>,
    t: u64,
    partition: StandardPartition,
}

impl RepairScheme {
    /// `helper_gammas` pairs each helper index with its nonzero gamma; they
    /// are stored sorted by helper index. Requires k <= d <= n-1 and 2t+1 <= p.
    pub fn new(
        code: RsCode,
        failed: usize,
        helper_gammas: &[(usize, u64)],
        t: u64,
    ) -> Result<Self> {
        let n = code.n();
        let k = code.k();
        let p = code.field().modulus();
        if failed >= n {
            return Err(Error::IndexOutOfRange { index: failed, n });
        }
        let d = helper_gammas.len();
        if d < k || d > n - 1 {
            return Err(Error::HelperCountOutOfRange { d, k, max: n - 1 });
        }
        if t == 0 || 2 * t + 1 > p {
            return Err(Error::CellLengthOutOfRange { t, p });
        }
        let mut pairs: Vec<(usize, u64)> = helper_gammas.to_vec();
        pairs.sort_unstable_by_key(|&(h, _)| h);
        let mut helpers = Vec::with_capacity(d);
        let mut gammas = Vec::with_capacity(d);
        for &(h, g) in &pairs {
            if h >= n {
                return Err(Error::IndexOutOfRange { index: h, n });
            }
            if h == failed {
                return Err(Error::FailedAmongHelpers);
            }
            if helpers.last() == Some(&h) {
                return Err(Error::DuplicateHelper(h));
            }
            let g = code.field().reduce(g);
            if g == 0 {
                return Err(Error::ZeroScale);
            }
            helpers.push(h);
            gammas.push(g);
        }
        let partition = StandardPartition::new(p, t)?;
        Ok(RepairScheme { code, failed, helpers, gammas, t, partition })
    }

    pub fn code(&self) -> &RsCode {
        &self.code
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    /// Helper indices, ascending.
    pub fn helpers(&self) -> &[usize] {
        &self.helpers
    }

    /// Gammas aligned with `helpers()`.
    pub fn gammas(&self) -> &[u64] {
        &self.gammas
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn s(&self) -> u64 {
        self.partition.s()
    }

    pub fn d(&self) -> usize {
        self.helpers.len()
    }

    pub fn partition(&self) -> &StandardPartition {
        &self.partition
    }

    /// Bits one helper transmits: ceil(log2 s).
    pub fn per_helper_bits(&self) -> u32 {
        ceil_log2(self.s())
    }

    /// Total transmitted bits: d * ceil(log2 s).
    pub fn total_bits(&self) -> u64 {
        self.d() as u64 * self.per_helper_bits() as u64
    }

    /// The message helper `helper` sends for its symbol.
    pub fn message_for(&self, helper: usize, symbol: u64) -> Result<HelperMessage> {
        let pos = self
            .helpers
            .binary_search(&helper)
            .map_err(|_| Error::MessageForUnknownHelper(helper))?;
        let cell = cell_of(self.code.field(), symbol, self.gammas[pos], &self.partition)?;
        Ok(HelperMessage { helper, cell })
    }

    /// Messages for helper symbols given in `helpers()` order.
    pub fn messages_from_helper_values(&self, values: &[u64]) -> Result<Vec<HelperMessage>> {
        if values.len() != self.helpers.len() {
            return Err(Error::MissingMessage(self.helpers[values.len().min(self.helpers.len() - 1)]));
        }
        self.helpers
            .iter()
            .zip(values)
            .map(|(&h, &v)| self.message_for(h, v))
            .collect()
    }

    /// Messages computed from a full codeword of the scheme's code.
    pub fn messages_from_codeword(&self, codeword: &Codeword) -> Result<Vec<HelperMessage>> {
        let values = codeword.restrict(&self.helpers);
        self.messages_from_helper_values(&values)
    }

    /// Exhaustively decides validity: enumerates every value assignment in
    /// gamma_j*[-t, t] for the first k helpers (ascending index), and checks
    /// that each interpolated polynomial that also meets the remaining d-k
    /// membership constraints vanishes at the failed point.
    pub fn validate(&self, budget: u64) -> Result<SchemeValidation> {
        let field = self.code.field();
        let k = self.code.k();
        let p = field.modulus();
        let t = self.t;

        let mut candidates = Vec::with_capacity(k);
        for pos in 0..k {
            let gamma = self.gammas[pos];
            let mut list = Vec::with_capacity(2 * t as usize + 1);
            for m in -(t as i64)..=t as i64 {
                list.push(field.mul(gamma, field.from_signed(m)));
            }
            candidates.push(list);
        }
        let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
        if total > budget as u128 {
            return Err(Error::BudgetExceeded { candidates: total, budget });
        }

        let enumeration = self.enumeration(&candidates)?;
        let inv_gammas: Vec<u64> = (k..self.d())
            .map(|pos| field.inv(self.gammas[pos]).expect("gammas are nonzero"))
            .collect();

        let mut witness: Option<Vec<(u64, u64)>> = None;
        enumeration.for_each(field, |values, f_at_checks| {
            for (c, &inv_g) in inv_gammas.iter().enumerate() {
                let r = field.mul(inv_g, f_at_checks[c]);
                if !(r <= t || r >= p - t) {
                    return true; // hypothesis not met; irrelevant candidate
                }
            }
            let at_failed = *f_at_checks.last().expect("failed point is always checked");
            if at_failed != 0 {
                witness = Some(
                    enumeration
                        .designated_points
                        .iter()
                        .copied()
                        .zip(values.iter().copied())
                        .collect(),
                );
                return false;
            }
            true
        });

        let counterexample = match witness {
            Some(pairs) => Some(interpolate(field, &pairs)?),
            None => None,
        };
        Ok(SchemeValidation {
            valid: counterexample.is_none(),
            counterexample,
            candidates: total as u64,
        })
    }

    /// Recovers the failed symbol from one message per helper. Enumerates the
    /// candidate values inside the signaled cells for the first k helpers
    /// (at most t^k interpolations), keeps the candidates consistent with all
    /// remaining cells, and returns their common value at the failed point.
    pub fn repair(&self, messages: &[HelperMessage], budget: u64) -> Result<u64> {
        let field = self.code.field();
        let k = self.code.k();
        let d = self.d();

        let mut cells: Vec<Option<usize>> = vec![None; d];
        for msg in messages {
            let pos = self
                .helpers
                .binary_search(&msg.helper)
                .map_err(|_| Error::MessageForUnknownHelper(msg.helper))?;
            if msg.cell as u64 >= self.partition.s() {
                return Err(Error::CellOutOfRange { cell: msg.cell, s: self.partition.s() });
            }
            if cells[pos].is_some() {
                return Err(Error::DuplicateHelper(msg.helper));
            }
            cells[pos] = Some(msg.cell);
        }
        let cells: Vec<usize> = cells
            .into_iter()
            .enumerate()
            .map(|(pos, c)| c.ok_or(Error::MissingMessage(self.helpers[pos])))
            .collect::<Result<_>>()?;

        let mut candidates = Vec::with_capacity(k);
        for pos in 0..k {
            let gamma = self.gammas[pos];
            let list: Vec<u64> = self
                .partition
                .cell(cells[pos])
                .into_iter()
                .map(|a| field.mul(gamma, a))
                .collect();
            candidates.push(list);
        }
        let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
        if total > budget as u128 {
            return Err(Error::BudgetExceeded { candidates: total, budget });
        }

        let enumeration = self.enumeration(&candidates)?;
        let inv_gammas: Vec<u64> = (k..d)
            .map(|pos| field.inv(self.gammas[pos]).expect("gammas are nonzero"))
            .collect();

        let mut recovered: Option<u64> = None;
        let mut ambiguous = false;
        enumeration.for_each(field, |_values, f_at_checks| {
            for (c, &inv_g) in inv_gammas.iter().enumerate() {
                let cell = self.partition.residue_cell(field.mul(inv_g, f_at_checks[c]));
                if cell != cells[k + c] {
                    return true;
                }
            }
            let at_failed = *f_at_checks.last().expect("failed point is always checked");
            match recovered {
                None => recovered = Some(at_failed),
                Some(v) if v != at_failed => {
                    ambiguous = true;
                    return false;
                }
                Some(_) => {}
            }
            true
        });

        if ambiguous {
            return Err(Error::AmbiguousRepair);
        }
        recovered.ok_or(Error::NoConsistentCodeword)
    }

    /// Repairs one extension-field symbol coordinate-wise: row j holds the
    /// helper symbols (in `helpers()` order) of the j-th basis coordinate,
    /// itself a base-field codeword. Total bits are m times the base cost.
    pub fn extension_repair(&self, rows: &[Vec<u64>], budget: u64) -> Result<Vec<u64>> {
        rows.iter()
            .enumerate()
            .map(|(row, values)| {
                let wrap = |source: Error| Error::RowRepair { row, source: Box::new(source) };
                let messages = self.messages_from_helper_values(values).map_err(wrap)?;
                self.repair(&messages, budget).map_err(wrap)
            })
            .collect()
    }

    fn enumeration(&self, candidates: &[Vec<u64>]) -> Result<Enumeration> {
        let k = self.code.k();
        let designated_points: Vec<u64> =
            self.helpers[..k].iter().map(|&h| self.code.point(h)).collect();
        let mut check_points: Vec<u64> =
            self.helpers[k..].iter().map(|&h| self.code.point(h)).collect();
        check_points.push(self.code.point(self.failed));
        let basis = lagrange_rows(self.code.field(), &designated_points, &check_points)?;
        Ok(Enumeration {
            designated_points,
            candidates: candidates.to_vec(),
            basis,
        })
    }
}

/// Precomputed Lagrange data for enumerating degree-<k polynomials by their
/// values at k designated points: basis[c][j] = L_j(y_c), so a value tuple v
/// gives f(y_c) as the dot product of v with row c.
struct Enumeration {
    designated_points: Vec<u64>,
    candidates: Vec<Vec<u64>>,
    basis: Vec<Vec<u64>>,
}

impl Enumeration {
    /// Visits every candidate tuple with its evaluations at the check points.
    /// The visitor returns false to stop early.
    fn for_each(&self, field: PrimeField, mut visit: impl FnMut(&[u64], &[u64]) -> bool) {
        let k = self.candidates.len();
        let mut values = vec![0u64; k];
        let mut sums = vec![vec![0u64; self.basis.len()]; k + 1];
        walk(&field, &self.candidates, &self.basis, 0, &mut values, &mut sums, &mut visit);
    }
}

fn walk(
    field: &PrimeField,
    candidates: &[Vec<u64>],
    basis: &[Vec<u64>],
    level: usize,
    values: &mut [u64],
    sums: &mut [Vec<u64>],
    visit: &mut impl FnMut(&[u64], &[u64]) -> bool,
) -> bool {
    if level == candidates.len() {
        return visit(values, &sums[level]);
    }
    for ci in 0..candidates[level].len() {
        let v = candidates[level][ci];
        values[level] = v;
        let (done, rest) = sums.split_at_mut(level + 1);
        let prev = &done[level];
        let next = &mut rest[0];
        for (c, row) in basis.iter().enumerate() {
            next[c] = field.add(prev[c], field.mul(v, row[level]));
        }
        if !walk(field, candidates, basis, level + 1, values, sums, visit) {
            return false;
        }
    }
    true
}

/// rows[c][j] = L_j(y_c) for the Lagrange basis over `designated`; the check
/// points must avoid the designated points.
fn lagrange_rows(field: PrimeField, designated: &[u64], checks: &[u64]) -> Result<Vec<Vec<u64>>> {
    let k = designated.len();
    let mut inv_denoms = Vec::with_capacity(k);
    for j in 0..k {
        let mut denom = 1u64;
        for i in 0..k {
            if i != j {
                denom = field.mul(denom, field.sub(designated[j], designated[i]));
            }
        }
        inv_denoms.push(field.inv(denom)?);
    }
    checks
        .iter()
        .map(|&y| {
            let mut master = 1u64;
            for &x in designated {
                master = field.mul(master, field.sub(y, x));
            }
            (0..k)
                .map(|j| {
                    let inv_lin = field.inv(field.sub(y, designated[j]))?;
                    Ok(field.mul(field.mul(master, inv_lin), inv_denoms[j]))
                })
                .collect()
        })
        .collect()
}

/// Extra bits any base-field-linear scheme pays over the lifted scheme for an
/// extension of degree m with d helpers: (ceil(dm/(d-1)) - dm/(d-1)) * log2(p).
pub fn linear_gap(d: u64, m: u64, p: u64) -> f64 {
    assert!(d >= 2 && m >= 1);
    let rem = (d * m) % (d - 1);
    if rem == 0 {
        return 0.0;
    }
    (d - 1 - rem) as f64 / (d - 1) as f64 * (p as f64).log2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn partition_examples() {
        let part = StandardPartition::new(7, 2).unwrap();
        assert_eq!(part.s(), 4);
        assert_eq!(part.cells(), vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6]]);

        let part = StandardPartition::new(7, 1).unwrap();
        assert_eq!(part.s(), 7);
        assert!(part.cells().iter().all(|c| c.len() == 1));

        let part = StandardPartition::new(11, 4).unwrap();
        assert_eq!(part.s(), 3);
        assert_eq!(part.cell(2), vec![8, 9, 10]);

        assert!(StandardPartition::new(7, 7).is_err());
        assert!(StandardPartition::new(7, 0).is_err());
    }

    #[test]
    fn partition_covers_field_exactly() {
        for (p, t) in [(7u64, 2u64), (7, 1), (11, 4), (13, 5), (101, 7), (101, 100)] {
            let part = StandardPartition::new(p, t).unwrap();
            let mut all: Vec<u64> = part.cells().into_iter().flatten().collect();
            assert_eq!(all.len() as u64, p, "cells must tile F_{p}");
            all.sort_unstable();
            all.dedup();
            assert_eq!(all, (0..p).collect::<Vec<_>>());
            let sizes: Vec<usize> = part.cells().iter().map(|c| c.len()).collect();
            assert!(sizes[..sizes.len() - 1].iter().all(|&l| l as u64 == t));
            let last = *sizes.last().unwrap() as u64;
            assert!((1..=t).contains(&last));
        }
    }

    #[test]
    fn cell_of_examples() {
        let part = StandardPartition::new(7, 2).unwrap();
        assert_eq!(cell_of(f(7), 3, 1, &part).unwrap(), 1);
        assert_eq!(cell_of(f(7), 6, 2, &part).unwrap(), 1); // 2^-1 * 6 = 3
        let part11 = StandardPartition::new(11, 4).unwrap();
        assert_eq!(cell_of(f(11), 10, 1, &part11).unwrap(), 2);
        assert!(cell_of(f(7), 3, 0, &part).is_err());
    }

    fn scheme(
        p: u64,
        k: usize,
        points: Vec<u64>,
        failed: usize,
        gammas: &[(usize, u64)],
        t: u64,
    ) -> RepairScheme {
        let code = RsCode::new(f(p), k, points).unwrap();
        RepairScheme::new(code, failed, gammas, t).unwrap()
    }

    #[test]
    fn vacuous_constraints_are_invalid() {
        // gamma_j = 1 and t = (p-1)/2 make every constraint set all of F_p,
        // so any polynomial with a nonzero value at the failed point violates
        // the condition.
        let s = scheme(13, 2, vec![0, 1, 2, 3], 3, &[(0, 1), (1, 1), (2, 1)], 6);
        let v = s.validate(DEFAULT_ENUM_BUDGET).unwrap();
        assert!(!v.valid);
        let ce = v.counterexample.expect("invalid schemes carry a witness");
        assert!(ce.degree().map_or(0, |d| d) < 2);
        for (&h, &g) in s.helpers().iter().zip(s.gammas()) {
            let val = ce.eval(s.code().point(h));
            let r = f(13).mul(f(13).inv(g).unwrap(), val);
            assert!(r <= 6 || r >= 13 - 6);
        }
        assert_ne!(ce.eval(s.code().point(3)), 0);
    }

    #[test]
    fn constant_code_matches_brute_force() {
        // k = 1: the valid schemes are exactly those where the intersection
        // of the helper constraint sets is {0}.
        let p = 13u64;
        let fp = f(p);
        for gammas in [[1u64, 1], [1, 2], [2, 3], [5, 8], [1, 12]] {
            let s = scheme(p, 1, vec![0, 1, 2], 2, &[(0, gammas[0]), (1, gammas[1])], 1);
            let verdict = s.validate(DEFAULT_ENUM_BUDGET).unwrap();
            // brute force over all p constant polynomials
            let mut brute_valid = true;
            for c in 0..p {
                let in_all = s.gammas().iter().all(|&g| {
                    let r = fp.mul(fp.inv(g).unwrap(), c);
                    r <= 1 || r >= p - 1
                });
                if in_all && c != 0 {
                    brute_valid = false;
                }
            }
            assert_eq!(verdict.valid, brute_valid, "gammas {gammas:?}");
        }
    }

    #[test]
    fn repair_roundtrip_k1() {
        // valid k=1 scheme: constraint sets {0,1,12} and {0,2,11} meet in {0}
        let s = scheme(13, 1, vec![0, 1, 2], 2, &[(0, 1), (1, 2)], 1);
        assert!(s.validate(DEFAULT_ENUM_BUDGET).unwrap().valid);
        for c in 0..13u64 {
            let poly = Polynomial::new(f(13), vec![c]);
            let cw = s.code().encode(&poly).unwrap();
            let messages = s.messages_from_codeword(&cw).unwrap();
            assert_eq!(s.repair(&messages, DEFAULT_ENUM_BUDGET).unwrap(), c);
        }
    }

    #[test]
    fn unvalidated_scheme_can_be_ambiguous() {
        // d = k = 1 with a coarse partition cannot distinguish the constants
        // inside one cell.
        let s = scheme(13, 1, vec![0, 1], 0, &[(1, 1)], 6);
        let msg = [HelperMessage { helper: 1, cell: 0 }];
        assert!(matches!(s.repair(&msg, DEFAULT_ENUM_BUDGET), Err(Error::AmbiguousRepair)));
    }

    #[test]
    fn inconsistent_messages_are_rejected() {
        let s = scheme(13, 1, vec![0, 1, 2], 2, &[(0, 1), (1, 2)], 1);
        // helper 0 signals symbol 1; helper 1's cell for the constant 1 is
        // cell_of(1, gamma=2) = 7, so cell 0 is unachievable.
        let msgs = [
            HelperMessage { helper: 0, cell: 1 },
            HelperMessage { helper: 1, cell: 0 },
        ];
        assert!(matches!(
            s.repair(&msgs, DEFAULT_ENUM_BUDGET),
            Err(Error::NoConsistentCodeword)
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let s = scheme(101, 2, vec![0, 1, 2, 3], 3, &[(0, 1), (1, 1), (2, 1)], 50);
        // (2*50+1)^2 = 10201 candidates
        assert!(matches!(
            s.validate(10_000),
            Err(Error::BudgetExceeded { candidates: 10201, .. })
        ));
        assert!(s.validate(10_201).is_ok());
    }

    #[test]
    fn extension_repair_is_rowwise() {
        let s = scheme(13, 1, vec![0, 1, 2], 2, &[(0, 1), (1, 2)], 1);
        let rows = vec![vec![5u64, 5], vec![0, 0], vec![9, 9]];
        assert_eq!(s.extension_repair(&rows, DEFAULT_ENUM_BUDGET).unwrap(), vec![5, 0, 9]);
        // zero rows, m = 2
        let rows = vec![vec![0u64, 0], vec![0, 0]];
        assert_eq!(s.extension_repair(&rows, DEFAULT_ENUM_BUDGET).unwrap(), vec![0, 0]);
    }

    #[test]
    fn scheme_shape_is_checked() {
        let code = RsCode::new(f(13), 2, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(
            RepairScheme::new(code.clone(), 3, &[(0, 1)], 1),
            Err(Error::HelperCountOutOfRange { .. })
        ));
        assert!(matches!(
            RepairScheme::new(code.clone(), 3, &[(0, 1), (3, 1)], 1),
            Err(Error::FailedAmongHelpers)
        ));
        assert!(matches!(
            RepairScheme::new(code.clone(), 3, &[(0, 1), (1, 0)], 1),
            Err(Error::ZeroScale)
        ));
        // 2t+1 = 13 <= p still fits; 2t+1 = 15 wraps
        assert!(RepairScheme::new(code.clone(), 3, &[(0, 1), (1, 1)], 6).is_ok());
        assert!(matches!(
            RepairScheme::new(code, 3, &[(0, 1), (1, 1)], 7),
            Err(Error::CellLengthOutOfRange { .. })
        ));
    }

    #[test]
    fn linear_gap_examples() {
        let p = 1024u64; // log2 = 10
        assert_eq!(linear_gap(3, 3, p), 5.0); // (5 - 4.5) * 10
        assert_eq!(linear_gap(3, 2, p), 0.0);
        assert!((linear_gap(4, 2, p) - 10.0 / 3.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn cell_of_is_consistent(x in 0u64..101, g in 1u64..101, t in 1u64..50) {
            // x belongs to gamma * A_{cell_of(x)}
            let fp = f(101);
            let part = StandardPartition::new(101, t).unwrap();
            let m = cell_of(fp, x, g, &part).unwrap();
            let members = fp.scale_set(g, &part.cell(m));
            prop_assert!(members.binary_search(&x).is_ok());
        }

        #[test]
        fn residue_cell_inverts_cells(x in 0u64..101, t in 1u64..101) {
            let part = StandardPartition::new(101, t).unwrap();
            let m = part.residue_cell(x);
            prop_assert!(part.cell(m).contains(&x));
        }
    }
}
