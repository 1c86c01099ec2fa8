//! Univariate polynomials over an extension field, little-endian
//! coefficients with trailing zeros trimmed. Pure helper layer for the
//! function-field and code modules.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    /// coeffs[i] is the coefficient of X^i; invariant: no trailing zeros
    /// (the zero polynomial is an empty vector).
    pub coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(f: &ExtField, coeffs: Vec<FieldElement>) -> Self {
        let mut p = Poly { coeffs };
        p.trim(f);
        p
    }

    pub fn constant(f: &ExtField, c: FieldElement) -> Self {
        Poly::from_coeffs(f, vec![c])
    }

    pub fn one(f: &ExtField) -> Self {
        Poly::constant(f, f.one())
    }

    /// X - r
    pub fn x_minus(f: &ExtField, r: &FieldElement) -> Self {
        Poly::from_coeffs(f, vec![f.neg(r), f.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lead(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    fn trim(&mut self, _f: &ExtField) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, f: &ExtField, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            out.push(f.add(&a, &b));
        }
        Poly::from_coeffs(f, out)
    }

    pub fn sub(&self, f: &ExtField, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            out.push(f.sub(&a, &b));
        }
        Poly::from_coeffs(f, out)
    }

    pub fn neg(&self, f: &ExtField) -> Poly {
        Poly::from_coeffs(f, self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn mul(&self, f: &ExtField, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, out)
    }

    pub fn scale(&self, f: &ExtField, c: &FieldElement) -> Poly {
        Poly::from_coeffs(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn pow(&self, f: &ExtField, e: usize) -> Poly {
        let mut result = Poly::one(f);
        for _ in 0..e {
            result = result.mul(f, self);
        }
        result
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, f: &ExtField, rhs: &Poly) -> Result<(Poly, Poly)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = rhs.deg().unwrap();
        let linv = f.inv(rhs.lead().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quo = vec![f.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = f.mul(&rem[k], &linv);
            if c.is_zero() {
                continue;
            }
            quo[k - db] = c.clone();
            for i in 0..=db {
                let s = f.mul(&c, &rhs.coeffs[i]);
                rem[k - db + i] = f.sub(&rem[k - db + i], &s);
            }
        }
        Ok((Poly::from_coeffs(f, quo), Poly::from_coeffs(f, rem)))
    }

    /// Monic gcd.
    pub fn gcd(&self, f: &ExtField, rhs: &Poly) -> Poly {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        while !r1.is_zero() {
            let (_, r) = r0.divrem(f, &r1).expect("nonzero divisor");
            r0 = r1;
            r1 = r;
        }
        r0.monic(f)
    }

    /// Scales so the leading coefficient is 1 (zero polynomial unchanged).
    pub fn monic(&self, f: &ExtField) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let linv = f.inv(l).expect("leading coefficient nonzero");
                self.scale(f, &linv)
            }
        }
    }

    pub fn eval(&self, f: &ExtField, x: &FieldElement) -> FieldElement {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Multiplicity of `r` as a root, by repeated exact division.
    pub fn root_multiplicity(&self, f: &ExtField, r: &FieldElement) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::x_minus(f, r);
        let mut mult = 0;
        let mut cur = self.clone();
        loop {
            let (q, rem) = cur.divrem(f, &lin).unwrap();
            if !rem.is_zero() {
                return mult;
            }
            mult += 1;
            cur = q;
        }
    }

    /// Distinct roots in the field with multiplicities, plus the non-split
    /// remainder (degree 0 iff the polynomial splits into linear factors).
    pub fn roots(&self, f: &ExtField) -> (Vec<(FieldElement, usize)>, Poly) {
        let mut out = Vec::new();
        let mut cur = self.clone();
        if cur.is_zero() {
            return (out, cur);
        }
        for x in f.iter() {
            if cur.deg() == Some(0) {
                break;
            }
            let m = cur.root_multiplicity(f, &x);
            if m > 0 {
                let lin = Poly::x_minus(f, &x).pow(f, m);
                cur = cur.divrem(f, &lin).unwrap().0;
                out.push((x, m));
            }
        }
        (out, cur)
    }
}
