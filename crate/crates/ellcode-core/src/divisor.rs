//! Divisors supported on rational places: affine points and P∞, with
//! integer multiplicities. Support is kept sorted (lexicographic point
//! order, P∞ last) so downstream matrix layouts are deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::curve::{CurvePoint, EllipticCurve};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    curve: EllipticCurve,
    /// Nonzero multiplicities only.
    coeffs: BTreeMap<CurvePoint, i64>,
}

impl Divisor {
    pub fn zero(curve: &EllipticCurve) -> Self {
        Divisor { curve: curve.clone(), coeffs: BTreeMap::new() }
    }

    /// Builds from (point, multiplicity) pairs; multiplicities at repeated
    /// points accumulate, zero entries are dropped. Every support point
    /// must lie on the curve.
    pub fn new(curve: &EllipticCurve, entries: &[(CurvePoint, i64)]) -> Result<Self> {
        let mut d = Divisor::zero(curve);
        for (p, m) in entries {
            if !curve.is_on_curve(p)? {
                return Err(Error::PointNotOnCurve);
            }
            d.bump(p.clone(), *m);
        }
        Ok(d)
    }

    pub fn single(curve: &EllipticCurve, p: CurvePoint, mult: i64) -> Result<Self> {
        Divisor::new(curve, &[(p, mult)])
    }

    fn bump(&mut self, p: CurvePoint, m: i64) {
        let e = self.coeffs.entry(p).or_insert(0);
        *e += m;
        if *e == 0 {
            // keep the invariant: support excludes zero coefficients
            let key = self
                .coeffs
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.coeffs.remove(&k);
            }
        }
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    pub fn multiplicity(&self, p: &CurvePoint) -> i64 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Support in deterministic order (affine points sorted by coefficient
    /// vectors, P∞ last).
    pub fn support(&self) -> Vec<&CurvePoint> {
        self.coeffs.keys().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CurvePoint, i64)> {
        self.coeffs.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Divisor) -> Result<Divisor> {
        self.curve.same_curve(&rhs.curve)?;
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.bump(p.clone(), m);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Divisor {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = -*v;
        }
        out
    }

    pub fn sub(&self, rhs: &Divisor) -> Result<Divisor> {
        self.add(&rhs.neg())
    }

    pub fn disjoint(&self, rhs: &Divisor) -> Result<bool> {
        self.curve.same_curve(&rhs.curve)?;
        Ok(!self.coeffs.keys().any(|p| rhs.coeffs.contains_key(p)))
    }
}
