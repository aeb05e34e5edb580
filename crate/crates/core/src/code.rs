//! Reed-Solomon codes over F_p: encoding, Lagrange interpolation, puncturing,
//! and affine reparameterization of evaluation sets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A polynomial over F_p, lowest-degree coefficient first. Trailing zeros are
/// permitted; equality is mathematical (trailing zeros ignored).
#[derive(Clone, Debug)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// Coefficients are reduced into canonical residues.
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        Polynomial { field, coeffs }
    }

    pub fn from_signed(field: PrimeField, coeffs: &[i64]) -> Self {
        Polynomial {
            field,
            coeffs: coeffs.iter().map(|&c| field.from_signed(c)).collect(),
        }
    }

    pub fn zero(field: PrimeField) -> Self {
        Polynomial { field, coeffs: vec![] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add(self.field.mul(acc, x), c);
        }
        acc
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field {
            return false;
        }
        let d = self.coeffs.len().max(other.coeffs.len());
        (0..d).all(|i| {
            self.coeffs.get(i).copied().unwrap_or(0) == other.coeffs.get(i).copied().unwrap_or(0)
        })
    }
}

impl Eq for Polynomial {}

/// An [n, k] RS code given by n distinct evaluation points over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsCode {
    field: PrimeField,
    k: usize,
    points: Vec<u64>,
}

impl RsCode {
    pub fn new(field: PrimeField, k: usize, points: Vec<u64>) -> Result<Self> {
        let n = points.len();
        if k == 0 || k >= n || n as u64 > field.modulus() {
            return Err(Error::InvalidDimension { k, n });
        }
        if points.iter().any(|&x| x >= field.modulus()) {
            return Err(Error::IndexOutOfRange {
                index: 0,
                n: field.modulus() as usize,
            });
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoints);
        }
        Ok(RsCode { field, k, points })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }

    pub fn point(&self, index: usize) -> u64 {
        self.points[index]
    }

    /// The evaluation vector (f(alpha_1), ..., f(alpha_n)).
    pub fn encode(&self, f: &Polynomial) -> Result<Codeword<'_>> {
        if f.coeffs().len() > self.k {
            return Err(Error::DegreeTooHigh {
                len: f.coeffs().len(),
                k: self.k,
            });
        }
        let values = self.points.iter().map(|&x| f.eval(x)).collect();
        Ok(Codeword { code: self, values })
    }

    /// Restricts the code to the points at `keep` (original order preserved).
    /// Returns the punctured code and the old-index -> new-index mapping.
    pub fn puncture(&self, keep: &[usize]) -> Result<(RsCode, BTreeMap<usize, usize>)> {
        let mut seen = vec![false; self.n()];
        for &i in keep {
            if i >= self.n() {
                return Err(Error::IndexOutOfRange { index: i, n: self.n() });
            }
            if seen[i] {
                return Err(Error::DuplicateHelper(i));
            }
            seen[i] = true;
        }
        if keep.len() <= self.k {
            return Err(Error::PunctureTooSmall {
                kept: keep.len(),
                k: self.k,
            });
        }
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        let points = kept.iter().map(|&i| self.points[i]).collect();
        let mapping = kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        Ok((RsCode::new(self.field, self.k, points)?, mapping))
    }

    /// The code on the points {a*alpha + b}. RS codes are invariant under this
    /// reparameterization: for every f there is a g with g(a*alpha+b) = f(alpha).
    pub fn affine_map(&self, a: u64, b: u64) -> Result<(RsCode, AffineMap)> {
        let map = AffineMap::new(self.field, a, b)?;
        let points = self.points.iter().map(|&x| map.apply(x)).collect();
        Ok((RsCode::new(self.field, self.k, points)?, map))
    }
}

/// An evaluation vector aligned with its code's points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword<'c> {
    code: &'c RsCode,
    values: Vec<u64>,
}

impl<'c> Codeword<'c> {
    pub fn code(&self) -> &'c RsCode {
        self.code
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, index: usize) -> u64 {
        self.values[index]
    }

    /// Values at the given indices, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Vec<u64> {
        indices.iter().map(|&i| self.values[i]).collect()
    }
}

/// The bijection x -> a*x + b on F_p, a != 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineMap {
    field: PrimeField,
    pub a: u64,
    pub b: u64,
}

impl AffineMap {
    pub fn new(field: PrimeField, a: u64, b: u64) -> Result<Self> {
        let a = field.reduce(a);
        let b = field.reduce(b);
        if a == 0 {
            return Err(Error::ZeroScale);
        }
        Ok(AffineMap { field, a, b })
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        self.field.add(self.field.mul(self.a, x), self.b)
    }

    /// The inverse map y -> (y - b) / a.
    pub fn inverse(&self) -> AffineMap {
        let inv_a = self.field.inv(self.a).expect("a != 0 by construction");
        AffineMap {
            field: self.field,
            a: inv_a,
            b: self.field.neg(self.field.mul(inv_a, self.b)),
        }
    }
}

/// The unique polynomial of degree < pairs.len() through the given
/// (point, value) pairs. Lagrange form with per-call denominators.
pub fn interpolate(field: PrimeField, pairs: &[(u64, u64)]) -> Result<Polynomial> {
    if pairs.is_empty() {
        return Err(Error::EmptySet);
    }
    {
        let mut xs: Vec<u64> = pairs.iter().map(|&(x, _)| x).collect();
        xs.sort_unstable();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoints);
        }
    }
    let k = pairs.len();

    // master = prod (x - x_i), degree k
    let mut master = vec![0u64; k + 1];
    master[0] = 1;
    let mut deg = 0;
    for &(x, _) in pairs {
        // multiply by (X - x)
        master[deg + 1] = master[deg];
        for j in (1..=deg).rev() {
            master[j] = field.sub(master[j - 1], field.mul(x, master[j]));
        }
        master[0] = field.mul(field.neg(x), master[0]);
        deg += 1;
    }

    let mut acc = vec![0u64; k];
    let mut quotient = vec![0u64; k];
    for &(x, y) in pairs {
        // quotient = master / (X - x), by synthetic division
        let mut carry = 0u64;
        for j in (0..k).rev() {
            let c = field.add(master[j + 1], field.mul(carry, x));
            quotient[j] = c;
            carry = c;
        }
        // denominator = quotient(x) = prod_{i != j} (x_j - x_i)
        let mut denom = 0u64;
        for &q in quotient.iter().rev() {
            denom = field.add(field.mul(denom, x), q);
        }
        let w = field.mul(y, field.inv(denom)?);
        for j in 0..k {
            acc[j] = field.add(acc[j], field.mul(w, quotient[j]));
        }
    }
    Ok(Polynomial { field, coeffs: acc })
}
