//! General-Weierstrass elliptic curves over GF(p^m): point validity, the
//! chord-tangent group law, torsion tests, invariants and exhaustive
//! rational-point enumeration.
//!
//! The full form `Y² + a1·XY + a3·Y = X³ + a2·X² + a4·X + a6` is stored
//! always; the short-form constructors zero the unused coefficients so a
//! single group-law code path serves every characteristic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElement};

/// Default cap on the field order for exhaustive operations.
pub const DEFAULT_ENUM_CAP: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Affine { x: FieldElement, y: FieldElement },
    Infinity,
}

impl CurvePoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn xy(&self) -> Option<(&FieldElement, &FieldElement)> {
        match self {
            CurvePoint::Affine { x, y } => Some((x, y)),
            CurvePoint::Infinity => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurve {
    pub field: ExtField,
    pub a1: FieldElement,
    pub a2: FieldElement,
    pub a3: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
}

impl EllipticCurve {
    /// Full Weierstrass form. Fails on a singular curve.
    pub fn new(
        field: ExtField,
        a1: FieldElement,
        a2: FieldElement,
        a3: FieldElement,
        a4: FieldElement,
        a6: FieldElement,
    ) -> Result<Self> {
        let e = EllipticCurve { field, a1, a2, a3, a4, a6 };
        e.invariants()?;
        Ok(e)
    }

    /// y² = x³ + a4·x + a6 (the a1 = a2 = a3 = 0 short form).
    pub fn short_weierstrass(field: ExtField, a4: FieldElement, a6: FieldElement) -> Result<Self> {
        let z = field.zero();
        EllipticCurve::new(field.clone(), z.clone(), z.clone(), z, a4, a6)
    }

    /// y² + a3·y = x³ + a4·x + a6 (supersingular short form in char 2).
    pub fn char2_supersingular(
        field: ExtField,
        a3: FieldElement,
        a4: FieldElement,
        a6: FieldElement,
    ) -> Result<Self> {
        let z = field.zero();
        EllipticCurve::new(field.clone(), z.clone(), z, a3, a4, a6)
    }

    /// y² + xy = x³ + a2·x² + a6 (ordinary short form in char 2).
    pub fn char2_ordinary(field: ExtField, a2: FieldElement, a6: FieldElement) -> Result<Self> {
        let z = field.zero();
        let one = field.one();
        EllipticCurve::new(field.clone(), one, a2, z.clone(), z, a6)
    }

    fn is(&self, other: &EllipticCurve) -> bool {
        self == other
    }

    pub fn same_curve(&self, other: &EllipticCurve) -> Result<()> {
        if self.is(other) {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    /// Right-hand side x³ + a2·x² + a4·x + a6.
    pub fn rhs(&self, x: &FieldElement) -> FieldElement {
        let f = &self.field;
        let x2 = f.mul(x, x);
        let x3 = f.mul(&x2, x);
        let mut acc = f.add(&x3, &f.mul(&self.a2, &x2));
        acc = f.add(&acc, &f.mul(&self.a4, x));
        f.add(&acc, &self.a6)
    }

    /// Standard Weierstrass quantities (Δ, j). Errors on Δ = 0.
    pub fn invariants(&self) -> Result<(FieldElement, FieldElement)> {
        let f = &self.field;
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let four = f.from_int(4);
        let b2 = f.add(&f.mul(a1, a1), &f.mul(&four, a2));
        let b4 = f.add(&f.mul(&f.from_int(2), a4), &f.mul(a1, a3));
        let b6 = f.add(&f.mul(a3, a3), &f.mul(&four, a6));
        // b8 = a1²a6 + 4a2a6 - a1a3a4 + a2a3² - a4²
        let b8 = {
            let t1 = f.mul(&f.mul(a1, a1), a6);
            let t2 = f.mul(&four, &f.mul(a2, a6));
            let t3 = f.mul(&f.mul(a1, a3), a4);
            let t4 = f.mul(a2, &f.mul(a3, a3));
            let t5 = f.mul(a4, a4);
            f.sub(&f.add(&f.sub(&f.add(&t1, &t2), &t3), &t4), &t5)
        };
        // Δ = -b2²b8 - 8b4³ - 27b6² + 9b2b4b6
        let disc = {
            let t1 = f.mul(&f.mul(&b2, &b2), &b8);
            let t2 = f.mul(&f.from_int(8), &f.mul(&b4, &f.mul(&b4, &b4)));
            let t3 = f.mul(&f.from_int(27), &f.mul(&b6, &b6));
            let t4 = f.mul(&f.from_int(9), &f.mul(&b2, &f.mul(&b4, &b6)));
            f.add(&f.sub(&f.sub(&f.neg(&t1), &t2), &t3), &t4)
        };
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        let c4 = f.sub(&f.mul(&b2, &b2), &f.mul(&f.from_int(24), &b4));
        let j = f.div(&f.mul(&c4, &f.mul(&c4, &c4)), &disc)?;
        Ok((disc, j))
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> Result<bool> {
        match p {
            CurvePoint::Infinity => Ok(true),
            CurvePoint::Affine { x, y } => {
                let f = &self.field;
                if x.coeffs.len() != f.m() || y.coeffs.len() != f.m() {
                    return Err(Error::FieldMismatch);
                }
                // y² + a1xy + a3y
                let lhs = f.add(
                    &f.mul(y, y),
                    &f.add(&f.mul(&self.a1, &f.mul(x, y)), &f.mul(&self.a3, y)),
                );
                Ok(lhs == self.rhs(x))
            }
        }
    }

    fn require_on_curve(&self, p: &CurvePoint) -> Result<()> {
        if self.is_on_curve(p)? {
            Ok(())
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    /// Group negation: (x, y) ↦ (x, -y - a1·x - a3).
    pub fn negate(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        match p {
            CurvePoint::Infinity => Ok(CurvePoint::Infinity),
            CurvePoint::Affine { x, y } => {
                let f = &self.field;
                let ny = f.sub(&f.neg(y), &f.add(&f.mul(&self.a1, x), &self.a3));
                Ok(CurvePoint::affine(x.clone(), ny))
            }
        }
    }

    /// Chord-tangent addition in the full Weierstrass form.
    pub fn add_points(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        let f = &self.field;
        let (x1, y1) = match p.xy() {
            None => return Ok(q.clone()),
            Some(v) => v,
        };
        let (x2, y2) = match q.xy() {
            None => return Ok(p.clone()),
            Some(v) => v,
        };
        if x1 == x2 {
            // q = -p ?
            let neg_y1 = f.sub(&f.neg(y1), &f.add(&f.mul(&self.a1, x1), &self.a3));
            if *y2 == neg_y1 {
                return Ok(CurvePoint::Infinity);
            }
        }
        let (lambda, nu) = if x1 == x2 {
            // tangent: p == q with 2y + a1x + a3 != 0
            let den = f.add(
                &f.mul(&f.from_int(2), y1),
                &f.add(&f.mul(&self.a1, x1), &self.a3),
            );
            let x1sq = f.mul(x1, x1);
            let num_l = {
                let t = f.add(
                    &f.mul(&f.from_int(3), &x1sq),
                    &f.mul(&f.from_int(2), &f.mul(&self.a2, x1)),
                );
                f.sub(&f.add(&t, &self.a4), &f.mul(&self.a1, y1))
            };
            let num_n = {
                let x1cu = f.mul(&x1sq, x1);
                let t = f.add(
                    &f.mul(&self.a4, x1),
                    &f.mul(&f.from_int(2), &self.a6),
                );
                f.sub(&f.add(&f.neg(&x1cu), &t), &f.mul(&self.a3, y1))
            };
            (f.div(&num_l, &den)?, f.div(&num_n, &den)?)
        } else {
            let dx = f.sub(x2, x1);
            let lambda = f.div(&f.sub(y2, y1), &dx)?;
            let nu = f.div(&f.sub(&f.mul(y1, x2), &f.mul(y2, x1)), &dx)?;
            (lambda, nu)
        };
        // x3 = λ² + a1λ - a2 - x1 - x2 ; y3 = -(λ + a1)x3 - ν - a3
        let x3 = {
            let t = f.add(&f.mul(&lambda, &lambda), &f.mul(&self.a1, &lambda));
            f.sub(&f.sub(&f.sub(&t, &self.a2), x1), x2)
        };
        let y3 = {
            let t = f.mul(&f.add(&lambda, &self.a1), &x3);
            f.sub(&f.sub(&f.neg(&t), &nu), &self.a3)
        };
        Ok(CurvePoint::affine(x3, y3))
    }

    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        let (mut n, mut base) = if n < 0 {
            ((-n) as u64, self.negate(p)?)
        } else {
            (n as u64, p.clone())
        };
        let mut acc = CurvePoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_points(&acc, &base)?;
            }
            base = self.add_points(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// True iff n·P = P∞.
    pub fn torsion_test(&self, p: &CurvePoint, n: i64) -> Result<bool> {
        Ok(self.scalar_mul(n, p)?.is_infinity())
    }

    /// All rational points (affine points in lexicographic coefficient
    /// order, then P∞), for fields within the default enumeration cap.
    pub fn enumerate_points(&self) -> Result<Vec<CurvePoint>> {
        self.enumerate_points_capped(DEFAULT_ENUM_CAP)
    }

    pub fn enumerate_points_capped(&self, cap: u128) -> Result<Vec<CurvePoint>> {
        let f = &self.field;
        if f.order() > cap {
            return Err(Error::FieldTooLarge { order: f.order(), cap });
        }
        let mut pts = Vec::new();
        if f.p() == 2 {
            // Artin-Schreier table: z² + z -> z (one representative per pair)
            let mut as_table: BTreeMap<Vec<u64>, FieldElement> = BTreeMap::new();
            for z in f.iter() {
                let key = f.add(&f.mul(&z, &z), &z);
                as_table.entry(key.coeffs.clone()).or_insert(z);
            }
            for x in f.iter() {
                let b = f.add(&f.mul(&self.a1, &x), &self.a3);
                let c = self.rhs(&x);
                if b.is_zero() {
                    // y² = c has the unique root c^(2^(m-1))
                    let mut y = c.clone();
                    for _ in 0..f.m() - 1 {
                        y = f.mul(&y, &y);
                    }
                    pts.push(CurvePoint::affine(x.clone(), y));
                } else {
                    // y = b z with z² + z = c / b²
                    let w = f.div(&c, &f.mul(&b, &b)).unwrap();
                    if let Some(z) = as_table.get(&w.coeffs) {
                        let y1 = f.mul(&b, z);
                        let y2 = f.add(&y1, &b);
                        pts.push(CurvePoint::affine(x.clone(), y1));
                        pts.push(CurvePoint::affine(x.clone(), y2));
                    }
                }
            }
        } else {
            // square table: y² -> ±y
            let mut sq: BTreeMap<Vec<u64>, Vec<FieldElement>> = BTreeMap::new();
            for y in f.iter() {
                sq.entry(f.mul(&y, &y).coeffs.clone()).or_default().push(y);
            }
            let inv2 = f.inv(&f.from_int(2)).unwrap();
            for x in f.iter() {
                // complete the square: (2y + a1x + a3)² = disc
                let b = f.add(&f.mul(&self.a1, &x), &self.a3);
                let disc = f.add(&f.mul(&b, &b), &f.mul(&f.from_int(4), &self.rhs(&x)));
                if let Some(roots) = sq.get(&disc.coeffs) {
                    for s in roots {
                        let y = f.mul(&f.sub(s, &b), &inv2);
                        pts.push(CurvePoint::affine(x.clone(), y));
                    }
                }
            }
        }
        pts.sort();
        pts.dedup();
        pts.push(CurvePoint::Infinity);
        // Hasse window check on the count
        let n = pts.len() as u128;
        let (lo, hi) = self.hasse_window();
        debug_assert!(lo <= n && n <= hi);
        Ok(pts)
    }

    /// Hasse window [q + 1 - ⌊2√q⌋, q + 1 + ⌊2√q⌋] for this field.
    pub fn hasse_window(&self) -> (u128, u128) {
        let q = self.field.order();
        let w = isqrt(4 * q);
        (q + 1 - w, q + 1 + w)
    }
}

pub(crate) fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ExtField;

    fn gf(p: u64, m: usize) -> ExtField {
        ExtField::new(p, m, None).unwrap()
    }

    /// y² = x³ + 1 over GF(7)
    fn curve_7() -> EllipticCurve {
        let f = gf(7, 1);
        EllipticCurve::short_weierstrass(f.clone(), f.zero(), f.one()).unwrap()
    }

    #[test]
    fn on_curve_examples() {
        let e = curve_7();
        let f = &e.field;
        assert!(e.is_on_curve(&CurvePoint::Infinity).unwrap());
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        assert!(e.is_on_curve(&p).unwrap());
        let q = CurvePoint::affine(f.from_int(2), f.from_int(5));
        assert!(!e.is_on_curve(&q).unwrap());
    }

    #[test]
    fn negate_examples() {
        // y² = x³ + 1 over GF(5): (2,3) is on it (8+1 = 9 ≡ 4 = 3²)
        let f5 = gf(5, 1);
        let e = EllipticCurve::short_weierstrass(f5.clone(), f5.zero(), f5.one()).unwrap();
        let p = CurvePoint::affine(f5.from_int(2), f5.from_int(3));
        let np = e.negate(&p).unwrap();
        assert_eq!(np, CurvePoint::affine(f5.from_int(2), f5.from_int(2)));
        assert_eq!(e.negate(&np).unwrap(), p);

        // char-2: y² + y = x³ over GF(2), -(0,0) = (0,1)
        let f2 = gf(2, 1);
        let e2 = EllipticCurve::char2_supersingular(f2.clone(), f2.one(), f2.zero(), f2.zero())
            .unwrap();
        let p = CurvePoint::affine(f2.zero(), f2.zero());
        assert_eq!(
            e2.negate(&p).unwrap(),
            CurvePoint::affine(f2.zero(), f2.one())
        );
    }

    #[test]
    fn two_torsion_fixed_by_negation() {
        let e = curve_7();
        let f = &e.field;
        // y = 0 point: x³ = -1 → x = 3 (27+1 = 28 ≡ 0 mod 7)
        let p = CurvePoint::affine(f.from_int(3), f.zero());
        assert!(e.is_on_curve(&p).unwrap());
        assert_eq!(e.negate(&p).unwrap(), p);
        assert!(e.torsion_test(&p, 2).unwrap());
    }

    #[test]
    fn identity_and_inverse() {
        let e = curve_7();
        let f = &e.field;
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        assert_eq!(e.add_points(&p, &CurvePoint::Infinity).unwrap(), p);
        let np = e.negate(&p).unwrap();
        assert!(e.add_points(&p, &np).unwrap().is_infinity());
        assert!(e.torsion_test(&CurvePoint::Infinity, 2).unwrap());
    }

    #[test]
    fn enumerate_gf2_supersingular() {
        let f2 = gf(2, 1);
        let e = EllipticCurve::char2_supersingular(f2.clone(), f2.one(), f2.zero(), f2.zero())
            .unwrap();
        let pts = e.enumerate_points().unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.contains(&CurvePoint::affine(f2.zero(), f2.zero())));
        assert!(pts.contains(&CurvePoint::affine(f2.zero(), f2.one())));
        assert!(pts.contains(&CurvePoint::Infinity));
    }

    #[test]
    fn enumeration_matches_double_sweep() {
        for e in alloc_cases() {
            let f = &e.field;
            let fast = e.enumerate_points().unwrap();
            let mut slow = Vec::new();
            for x in f.iter() {
                for y in f.iter() {
                    let pt = CurvePoint::affine(x.clone(), y.clone());
                    if e.is_on_curve(&pt).unwrap() {
                        slow.push(pt);
                    }
                }
            }
            slow.sort();
            slow.push(CurvePoint::Infinity);
            assert_eq!(fast, slow);
            let (lo, hi) = e.hasse_window();
            assert!(lo <= fast.len() as u128 && fast.len() as u128 <= hi);
        }
    }

    #[test]
    fn hasse_window_gf5() {
        let f5 = gf(5, 1);
        let e = EllipticCurve::short_weierstrass(f5.clone(), f5.zero(), f5.one()).unwrap();
        let n = e.enumerate_points().unwrap().len();
        assert!((2..=10).contains(&n));
        assert_eq!(n, 6);
    }

    #[test]
    fn invariants_special_cases() {
        // char > 3, a4 = 0 → j = 0
        let f7 = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f7.clone(), f7.zero(), f7.one()).unwrap();
        let (_, j) = e.invariants().unwrap();
        assert!(j.is_zero());
        // char > 3, a6 = 0 → j = 1728 mod p
        let e = EllipticCurve::short_weierstrass(f7.clone(), f7.one(), f7.zero()).unwrap();
        let (_, j) = e.invariants().unwrap();
        assert_eq!(j, f7.from_int(1728));
        // char 3 supersingular y² = x³ + a4x + a6 → Δ = -a4³
        let f3 = gf(3, 2);
        let a4 = f3.gen();
        let e = EllipticCurve::short_weierstrass(f3.clone(), a4.clone(), f3.one()).unwrap();
        let (disc, j) = e.invariants().unwrap();
        let a4cu = f3.mul(&a4, &f3.mul(&a4, &a4));
        assert_eq!(disc, f3.neg(&a4cu));
        assert!(j.is_zero());
    }

    #[test]
    fn singular_rejected() {
        let f7 = gf(7, 1);
        assert_eq!(
            EllipticCurve::short_weierstrass(f7.clone(), f7.zero(), f7.zero()).unwrap_err(),
            Error::SingularCurve
        );
    }

    #[test]
    fn group_axioms_exhaustive_small_curves() {
        // every curve with ≤ 200 points here: associativity on all triples,
        // commutativity, identity, inverses
        let cases: Vec<EllipticCurve> = alloc_cases();
        for e in cases {
            let pts = e.enumerate_points().unwrap();
            assert!(pts.len() <= 200);
            for p in &pts {
                assert_eq!(
                    e.negate(&e.negate(p).unwrap()).unwrap(),
                    p.clone(),
                    "double negation"
                );
                assert_eq!(e.add_points(p, &CurvePoint::Infinity).unwrap(), p.clone());
                assert!(e
                    .add_points(p, &e.negate(p).unwrap())
                    .unwrap()
                    .is_infinity());
            }
            for p in &pts {
                for q in &pts {
                    let pq = e.add_points(p, q).unwrap();
                    assert!(e.is_on_curve(&pq).unwrap());
                    assert_eq!(pq, e.add_points(q, p).unwrap(), "commutativity");
                    for r in &pts {
                        let lhs = e.add_points(&pq, r).unwrap();
                        let rhs = e.add_points(p, &e.add_points(q, r).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "associativity");
                    }
                }
            }
        }
    }

    fn alloc_cases() -> Vec<EllipticCurve> {
        let mut v = Vec::new();
        let f7 = gf(7, 1);
        v.push(EllipticCurve::short_weierstrass(f7.clone(), f7.zero(), f7.one()).unwrap());
        let f5 = gf(5, 1);
        v.push(EllipticCurve::short_weierstrass(f5.clone(), f5.one(), f5.one()).unwrap());
        let f4 = gf(2, 2);
        v.push(EllipticCurve::char2_supersingular(f4.clone(), f4.one(), f4.zero(), f4.zero()).unwrap());
        let f8 = gf(2, 3);
        v.push(EllipticCurve::char2_ordinary(f8.clone(), f8.zero(), f8.one()).unwrap());
        let f9 = gf(3, 2);
        v.push(EllipticCurve::short_weierstrass(f9.clone(), f9.one(), f9.one()).unwrap());
        v
    }

    #[test]
    fn char_gt3_two_torsion_is_y_zero() {
        for (p, m) in [(5u64, 1usize), (7, 1), (7, 2)] {
            let f = gf(p, m);
            let e = EllipticCurve::short_weierstrass(f.clone(), f.one(), f.one()).unwrap();
            let pts = e.enumerate_points().unwrap();
            for pt in pts {
                if let Some((_, y)) = pt.xy() {
                    assert_eq!(y.is_zero(), e.torsion_test(&pt, 2).unwrap());
                }
            }
        }
    }

    #[test]
    fn scalar_mul_orders_consistent() {
        let e = curve_7();
        let pts = e.enumerate_points().unwrap();
        let n = pts.len() as i64;
        for p in &pts {
            // Lagrange: the group order annihilates every point
            assert!(e.scalar_mul(n, p).unwrap().is_infinity());
        }
    }
}
