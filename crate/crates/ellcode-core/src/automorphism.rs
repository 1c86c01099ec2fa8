//! Automorphisms of an elliptic curve fixing P∞, their orders, orbits of
//! rational points, and the invariant-point classification.
//!
//! Every such automorphism acts as
//!
//! ```text
//! σ(x, y) = (u²·x + r,  u³·y + u²·s·x + t)
//! ```
//!
//! with (u, r, s, t) satisfying the standard substitution identities that
//! map the curve onto itself. Discovery is a constrained parameter sweep:
//! in characteristic ≠ 2 the parameter s (and t) are forced, in
//! characteristic ≠ 3 so is r, which keeps the search small and exact.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::{CurvePoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::field::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveAutomorphism {
    curve: EllipticCurve,
    pub u: FieldElement,
    pub r: FieldElement,
    pub s: FieldElement,
    pub t: FieldElement,
}

impl CurveAutomorphism {
    /// Builds from parameters, verifying the curve-preservation identities.
    pub fn new(
        curve: &EllipticCurve,
        u: FieldElement,
        r: FieldElement,
        s: FieldElement,
        t: FieldElement,
    ) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::UnsupportedPoint);
        }
        let a = CurveAutomorphism { curve: curve.clone(), u, r, s, t };
        if !a.satisfies_constraints() {
            return Err(Error::PointNotOnCurve);
        }
        Ok(a)
    }

    pub fn identity(curve: &EllipticCurve) -> Self {
        let f = &curve.field;
        CurveAutomorphism {
            curve: curve.clone(),
            u: f.one(),
            r: f.zero(),
            s: f.zero(),
            t: f.zero(),
        }
    }

    /// The group negation (x, y) ↦ (x, -y - a1x - a3), i.e.
    /// (u, r, s, t) = (-1, 0, -a1, -a3).
    pub fn negation(curve: &EllipticCurve) -> Self {
        let f = &curve.field;
        CurveAutomorphism {
            curve: curve.clone(),
            u: f.from_int(-1),
            r: f.zero(),
            s: f.neg(&curve.a1),
            t: f.neg(&curve.a3),
        }
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    pub fn is_identity(&self) -> bool {
        let f = &self.curve.field;
        f.is_one(&self.u) && self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    /// The five substitution identities with target coefficients equal to
    /// the source ones.
    fn satisfies_constraints(&self) -> bool {
        let f = &self.curve.field;
        let e = &self.curve;
        let (u, r, s, t) = (&self.u, &self.r, &self.s, &self.t);
        let u2 = f.mul(u, u);
        let u3 = f.mul(&u2, u);
        let u4 = f.mul(&u2, &u2);
        let u6 = f.mul(&u3, &u3);
        let two = f.from_int(2);
        let three = f.from_int(3);
        // u·a1 = a1 + 2s
        let e1 = f.mul(u, &e.a1) == f.add(&e.a1, &f.mul(&two, s));
        // u²·a2 = a2 - s·a1 + 3r - s²
        let e2 = {
            let rhs = f.add(
                &f.sub(&e.a2, &f.mul(s, &e.a1)),
                &f.sub(&f.mul(&three, r), &f.mul(s, s)),
            );
            f.mul(&u2, &e.a2) == rhs
        };
        // u³·a3 = a3 + r·a1 + 2t
        let e3 = {
            let rhs = f.add(&e.a3, &f.add(&f.mul(r, &e.a1), &f.mul(&two, t)));
            f.mul(&u3, &e.a3) == rhs
        };
        // u⁴·a4 = a4 - s·a3 + 2r·a2 - (t + rs)·a1 + 3r² - 2st
        let e4 = {
            let mut rhs = f.sub(&e.a4, &f.mul(s, &e.a3));
            rhs = f.add(&rhs, &f.mul(&two, &f.mul(r, &e.a2)));
            let trs = f.add(t, &f.mul(r, s));
            rhs = f.sub(&rhs, &f.mul(&trs, &e.a1));
            rhs = f.add(&rhs, &f.mul(&three, &f.mul(r, r)));
            rhs = f.sub(&rhs, &f.mul(&two, &f.mul(s, t)));
            f.mul(&u4, &e.a4) == rhs
        };
        // u⁶·a6 = a6 + r·a4 + r²·a2 + r³ - t·a3 - t² - rt·a1
        let e6 = {
            let r2 = f.mul(r, r);
            let mut rhs = f.add(&e.a6, &f.mul(r, &e.a4));
            rhs = f.add(&rhs, &f.mul(&r2, &e.a2));
            rhs = f.add(&rhs, &f.mul(&r2, r));
            rhs = f.sub(&rhs, &f.mul(t, &e.a3));
            rhs = f.sub(&rhs, &f.mul(t, t));
            rhs = f.sub(&rhs, &f.mul(&f.mul(r, t), &e.a1));
            f.mul(&u6, &e.a6) == rhs
        };
        e1 && e2 && e3 && e4 && e6
    }

    pub fn apply(&self, p: &CurvePoint) -> Result<CurvePoint> {
        if !self.curve.is_on_curve(p)? {
            return Err(Error::PointNotOnCurve);
        }
        Ok(match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let f = &self.curve.field;
                let u2 = f.mul(&self.u, &self.u);
                let u3 = f.mul(&u2, &self.u);
                let nx = f.add(&f.mul(&u2, x), &self.r);
                let ny = f.add(
                    &f.add(&f.mul(&u3, y), &f.mul(&f.mul(&u2, &self.s), x)),
                    &self.t,
                );
                CurvePoint::affine(nx, ny)
            }
        })
    }

    /// σ1 ∘ σ2 (apply σ2 first).
    pub fn compose(&self, rhs: &CurveAutomorphism) -> Result<CurveAutomorphism> {
        self.curve.same_curve(&rhs.curve)?;
        let f = &self.curve.field;
        let u1sq = f.mul(&self.u, &self.u);
        let u1cu = f.mul(&u1sq, &self.u);
        let u = f.mul(&self.u, &rhs.u);
        let r = f.add(&f.mul(&u1sq, &rhs.r), &self.r);
        let s = f.add(&f.mul(&self.u, &rhs.s), &self.s);
        let t = f.add(
            &f.add(&f.mul(&u1cu, &rhs.t), &f.mul(&f.mul(&u1sq, &self.s), &rhs.r)),
            &self.t,
        );
        Ok(CurveAutomorphism { curve: self.curve.clone(), u, r, s, t })
    }

    /// Least ℓ ≥ 1 with σ^ℓ = id.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.compose(self).expect("same curve");
            n += 1;
            assert!(n <= 24, "automorphism order exceeds the group bound");
        }
        n
    }

    /// Orbit of P in application order, cut at the first repeat.
    pub fn orbit(&self, p: &CurvePoint) -> Result<Vec<CurvePoint>> {
        let mut out = vec![p.clone()];
        let mut cur = self.apply(p)?;
        while cur != *p {
            out.push(cur.clone());
            cur = self.apply(&cur)?;
        }
        Ok(out)
    }

    /// Orbit partition of all rational points.
    pub fn orbit_partition(&self) -> Result<OrbitPartition> {
        let pts = self.curve.enumerate_points()?;
        let mut seen: Vec<bool> = vec![false; pts.len()];
        let mut orbits = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let orb = self.orbit(p)?;
            for q in &orb {
                let idx = pts.binary_search(q).expect("orbit point is rational");
                seen[idx] = true;
            }
            orbits.push(orb);
        }
        Ok(OrbitPartition { sigma: self.clone(), orbits })
    }
}

#[derive(Debug, Clone)]
pub struct OrbitPartition {
    pub sigma: CurveAutomorphism,
    pub orbits: Vec<Vec<CurvePoint>>,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }

    pub fn orbit_of(&self, p: &CurvePoint) -> Option<&Vec<CurvePoint>> {
        self.orbits.iter().find(|o| o.contains(p))
    }
}

/// All automorphisms of E fixing P∞, by constrained sweep over
/// (u, r, s, t). Sorted by parameter indices for reproducibility.
pub fn list_automorphisms(e: &EllipticCurve) -> Result<Vec<CurveAutomorphism>> {
    let f = &e.field;
    if f.order() > crate::curve::DEFAULT_ENUM_CAP {
        return Err(Error::FieldTooLarge {
            order: f.order(),
            cap: crate::curve::DEFAULT_ENUM_CAP,
        });
    }
    let p = f.characteristic();
    let mut out: Vec<CurveAutomorphism> = Vec::new();
    let two_inv = if p != 2 { Some(f.inv(&f.from_int(2)).unwrap()) } else { None };
    let three_inv = if p != 3 { Some(f.inv(&f.from_int(3)).unwrap()) } else { None };
    for u in f.iter() {
        if u.is_zero() {
            continue;
        }
        let u2 = f.mul(&u, &u);
        let u3 = f.mul(&u2, &u);
        // s: forced by u·a1 = a1 + 2s outside characteristic 2
        let s_candidates: Vec<FieldElement> = match &two_inv {
            Some(i2) => {
                let s = f.mul(&f.mul(&f.sub(&u, &f.one()), &e.a1), i2);
                vec![s]
            }
            None => f.iter().collect(),
        };
        for s in s_candidates {
            // r: forced by u²·a2 = a2 - s·a1 + 3r - s² outside char 3
            let r_candidates: Vec<FieldElement> = match &three_inv {
                Some(i3) => {
                    let num = f.add(
                        &f.sub(&f.mul(&u2, &e.a2), &e.a2),
                        &f.add(&f.mul(&s, &e.a1), &f.mul(&s, &s)),
                    );
                    vec![f.mul(&num, i3)]
                }
                None => f.iter().collect(),
            };
            for r in r_candidates {
                // t: forced by u³·a3 = a3 + r·a1 + 2t outside char 2
                let t_candidates: Vec<FieldElement> = match &two_inv {
                    Some(i2) => {
                        let num = f.sub(
                            &f.mul(&u3, &e.a3),
                            &f.add(&e.a3, &f.mul(&r, &e.a1)),
                        );
                        vec![f.mul(&num, i2)]
                    }
                    None => f.iter().collect(),
                };
                for t in t_candidates {
                    let cand = CurveAutomorphism {
                        curve: e.clone(),
                        u: u.clone(),
                        r: r.clone(),
                        s: s.clone(),
                        t: t.clone(),
                    };
                    if cand.satisfies_constraints() {
                        out.push(cand);
                    }
                }
            }
        }
    }
    out.sort_by_key(|a| {
        (
            f.index_of(&a.u),
            f.index_of(&a.r),
            f.index_of(&a.s),
            f.index_of(&a.t),
        )
    });
    // curve preservation, exhaustively on the enumerated points
    let pts = e.enumerate_points()?;
    for a in &out {
        for pt in &pts {
            debug_assert!(e.is_on_curve(&a.apply(pt)?)?);
        }
    }
    Ok(out)
}

// ----------------------------------------------------------------------
// invariant-point classification
// ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointClass {
    /// Affine points with y = 0.
    YZero,
    /// Affine points with x = 0.
    XZero,
    /// Affine 3-torsion points.
    ThreeTorsion,
    /// Every affine point (used when no invariant points exist and all
    /// orbits are full).
    AllAffine,
    /// The point (0, 0) when it lies on the curve.
    Origin,
    /// P∞.
    Infinity,
}

/// How a predicted orbit size is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Every point of the class has exactly the predicted orbit size.
    Pointwise,
    /// Every affine point with orbit size ≤ predicted lies in the class
    /// (and the remaining affine orbits are full). This is the provable
    /// direction for the characteristic-2 3-torsion rows: over fields
    /// where more of E[3] is rational than the fixed locus of σ, the
    /// pointwise reading fails while the containment always holds.
    Containment,
}

#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub class: PointClass,
    pub kind: ClaimKind,
    pub predicted: usize,
    /// Set on predictions the theory only supports in characteristic > 3
    /// (the (0,0) rule); flagged entries are reported but not hard-checked.
    pub flagged: bool,
    pub points: Vec<CurvePoint>,
    pub empirical: Vec<usize>,
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub order: usize,
    pub entries: Vec<ClassEntry>,
    /// The proven containment: every affine point actually fixed by σ
    /// lies in a class predicted invariant (ω = 1). This holds for every
    /// automorphism; the pointwise ω-table additionally requires σ to act
    /// on the rational points the way the classification describes, which
    /// over small fields singles out particular automorphisms of each
    /// order (e.g. when the full 3-torsion is rational).
    pub sound: bool,
}

impl InvariantReport {
    /// True when every unflagged entry matches its prediction pointwise.
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.flagged || e.matches)
    }
}

/// Predicted orbit size ω for each special point class under σ, per
/// characteristic, cross-checked against the empirical orbit partition.
/// The coordinate classes (y = 0, x = 0) correspond to the classified
/// special points when the curve is in its per-characteristic short form.
pub fn classify_invariant_points(
    e: &EllipticCurve,
    sigma: &CurveAutomorphism,
) -> Result<InvariantReport> {
    let ell = sigma.order();
    if !matches!(ell, 2 | 3 | 4 | 6) {
        return Err(Error::UnsupportedOrder(ell));
    }
    let f = &e.field;
    let p = f.characteristic();
    let pts = e.enumerate_points()?;
    let part = sigma.orbit_partition()?;
    let affine: Vec<CurvePoint> = pts.iter().filter(|p| !p.is_infinity()).cloned().collect();
    let y_zero: Vec<CurvePoint> = affine
        .iter()
        .filter(|p| p.xy().map(|(_, y)| y.is_zero()).unwrap_or(false))
        .cloned()
        .collect();
    let x_zero: Vec<CurvePoint> = affine
        .iter()
        .filter(|p| p.xy().map(|(x, _)| x.is_zero()).unwrap_or(false))
        .cloned()
        .collect();
    let three_torsion: Vec<CurvePoint> = affine
        .iter()
        .filter(|pt| e.torsion_test(pt, 3).unwrap_or(false))
        .cloned()
        .collect();
    let (_, j) = e.invariants()?;
    let origin = CurvePoint::affine(f.zero(), f.zero());
    let origin_on_curve = e.is_on_curve(&origin)?;
    // (0,0) is the documented exception (ω = 1 claims of its own), so the
    // pointwise coordinate classes exclude it; containment classes keep it
    let carve = |pts: &[CurvePoint]| -> Vec<CurvePoint> {
        pts.iter().filter(|p| **p != origin).cloned().collect()
    };

    use ClaimKind::{Containment, Pointwise};
    let mut specs: Vec<(PointClass, ClaimKind, usize, bool, Vec<CurvePoint>)> = Vec::new();
    if p > 3 {
        match ell {
            2 => specs.push((PointClass::YZero, Pointwise, 1, false, carve(&y_zero))),
            3 => specs.push((PointClass::XZero, Pointwise, 1, false, carve(&x_zero))),
            4 => specs.push((PointClass::YZero, Pointwise, 2, false, carve(&y_zero))),
            6 => {
                specs.push((PointClass::XZero, Pointwise, 2, false, carve(&x_zero)));
                specs.push((PointClass::YZero, Pointwise, 3, false, carve(&y_zero)));
            }
            _ => unreachable!(),
        }
    } else if p == 3 {
        match ell {
            2 => specs.push((PointClass::YZero, Pointwise, 1, false, y_zero)),
            3 => specs.push((PointClass::AllAffine, Pointwise, 3, false, affine.clone())),
            // with a translation part r ≠ 0 an order-4 map fixes the
            // 2-torsion point (-r, 0), so only the containment direction
            // holds for every automorphism
            4 => specs.push((PointClass::YZero, Containment, 2, false, y_zero)),
            6 => {
                specs.push((PointClass::YZero, Pointwise, 3, false, carve(&y_zero)));
                // the x = 0 row does not follow from the power table when
                // a6 ≠ 0 (those orbits have full size 6); reported, not
                // hard-checked
                specs.push((PointClass::XZero, Pointwise, 3, true, carve(&x_zero)));
            }
            _ => unreachable!(),
        }
    } else {
        // characteristic 2
        match ell {
            2 => {
                if j.is_zero() {
                    specs.push((PointClass::AllAffine, Pointwise, 2, false, affine.clone()));
                } else {
                    specs.push((PointClass::XZero, Pointwise, 1, false, x_zero));
                }
            }
            3 => specs.push((PointClass::ThreeTorsion, Containment, 1, false, three_torsion)),
            4 => specs.push((PointClass::AllAffine, Pointwise, 4, false, affine.clone())),
            6 => specs.push((PointClass::ThreeTorsion, Containment, 2, false, three_torsion)),
            _ => unreachable!(),
        }
    }
    // exceptional points: P∞ always fixed; (0,0) provably fixed only in
    // characteristic > 3 where r = s = t = 0 forces σ(0,0) = (0,0)
    specs.push((PointClass::Infinity, Pointwise, 1, false, vec![CurvePoint::Infinity]));
    if origin_on_curve {
        specs.push((PointClass::Origin, Pointwise, 1, p <= 3, vec![origin]));
    }

    let entries: Vec<ClassEntry> = specs
        .into_iter()
        .map(|(class, kind, predicted, flagged, points)| {
            let empirical: Vec<usize> = points
                .iter()
                .map(|pt| part.orbit_of(pt).map(|o| o.len()).unwrap_or(0))
                .collect();
            let matches = match kind {
                Pointwise => empirical.iter().all(|&w| w == predicted),
                Containment => affine.iter().all(|pt| {
                    let w = part.orbit_of(pt).map(|o| o.len()).unwrap_or(0);
                    // small orbits only inside the class; the rest full
                    if w <= predicted {
                        points.contains(pt)
                    } else {
                        w == ell
                    }
                }),
            };
            ClassEntry { class, kind, predicted, flagged, points, empirical, matches }
        })
        .collect();
    // containment direction: fixed affine points must sit in a class the
    // table allows to carry small orbits
    let fixed_affine: Vec<&CurvePoint> = affine
        .iter()
        .filter(|pt| part.orbit_of(pt).map(|o| o.len()) == Some(1))
        .collect();
    let sound = fixed_affine.iter().all(|pt| {
        entries.iter().any(|en| {
            let allows_fixed = match en.kind {
                ClaimKind::Pointwise => en.predicted == 1,
                ClaimKind::Containment => en.predicted >= 1,
            };
            allows_fixed && en.points.contains(pt)
        })
    });
    Ok(InvariantReport { order: ell, entries, sound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ExtField;

    fn gf(p: u64, m: usize) -> ExtField {
        ExtField::new(p, m, None).unwrap()
    }

    #[test]
    fn generic_curve_has_two_automorphisms() {
        // y² = x³ + x + 1 over GF(7): j ∉ {0, 1728}
        let f = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.one(), f.one()).unwrap();
        let (_, j) = e.invariants().unwrap();
        assert!(!j.is_zero() && j != f.from_int(1728));
        let auts = list_automorphisms(&e).unwrap();
        assert_eq!(auts.len(), 2);
        // the non-identity one is the involution σ(x) = x, σ(y) = -y
        let inv = auts.iter().find(|a| !a.is_identity()).unwrap();
        assert_eq!(inv.u, f.from_int(-1));
        assert_eq!(inv.order(), 2);
        let p = CurvePoint::affine(f.zero(), f.one());
        assert_eq!(
            inv.apply(&p).unwrap(),
            CurvePoint::affine(f.zero(), f.from_int(-1))
        );
    }

    #[test]
    fn j_1728_with_fourth_root_gives_four() {
        // GF(5) contains i = 2 (2² = -1); y² = x³ + x has j = 1728
        let f = gf(5, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.one(), f.zero()).unwrap();
        let auts = list_automorphisms(&e).unwrap();
        assert_eq!(auts.len(), 4);
        let ord4 = auts.iter().find(|a| a.order() == 4).unwrap();
        // σ²(y) = u²y
        let sq = ord4.compose(ord4).unwrap();
        let u2 = f.mul(&ord4.u, &ord4.u);
        let pts = e.enumerate_points().unwrap();
        for p in pts {
            if let Some((x, y)) = p.xy() {
                let img = sq.apply(&CurvePoint::affine(x.clone(), y.clone())).unwrap();
                let (ix, iy) = img.xy().unwrap();
                assert_eq!(ix, x);
                assert_eq!(*iy, f.mul(&u2, y));
            }
        }
    }

    #[test]
    fn char2_supersingular_has_24() {
        // y² + y = x³ over GF(4)
        let f = gf(2, 2);
        let e =
            EllipticCurve::char2_supersingular(f.clone(), f.one(), f.zero(), f.zero()).unwrap();
        let auts = list_automorphisms(&e).unwrap();
        assert_eq!(auts.len(), 24);
        // orders divide 24 and stay in {1,2,3,4,6} ∪ {8?}: the quaternion
        // subgroup contributes order-4 elements; no order exceeds 6 here
        // except possibly 8 — verify the whole distribution is sane
        for a in &auts {
            let o = a.order();
            assert!(o <= 24 && 24 % o == 0 || o <= 6, "order {o}");
        }
    }

    #[test]
    fn composition_matches_pointwise_application() {
        let f = gf(2, 2);
        let e =
            EllipticCurve::char2_supersingular(f.clone(), f.one(), f.zero(), f.zero()).unwrap();
        let auts = list_automorphisms(&e).unwrap();
        let pts = e.enumerate_points().unwrap();
        for a in auts.iter().take(6) {
            for b in auts.iter().take(6) {
                let ab = a.compose(b).unwrap();
                for p in &pts {
                    assert_eq!(
                        ab.apply(p).unwrap(),
                        a.apply(&b.apply(p).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn negation_is_valid_involution() {
        for e in sample_curves() {
            let neg = CurveAutomorphism::negation(&e);
            assert!(neg.satisfies_constraints(), "negation invalid");
            assert_eq!(neg.order(), 2);
            for p in e.enumerate_points().unwrap() {
                assert_eq!(neg.apply(&p).unwrap(), e.negate(&p).unwrap());
            }
        }
    }

    #[test]
    fn orbits_partition_and_divide_order() {
        for e in sample_curves() {
            for sigma in list_automorphisms(&e).unwrap() {
                let ord = sigma.order();
                let part = sigma.orbit_partition().unwrap();
                let total: usize = part.sizes().iter().sum();
                assert_eq!(total, e.enumerate_points().unwrap().len());
                for sz in part.sizes() {
                    assert_eq!(ord % sz, 0, "orbit size {sz} vs order {ord}");
                }
            }
        }
    }

    #[test]
    fn involution_orbit_shapes() {
        let f = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.zero(), f.one()).unwrap();
        let neg = CurveAutomorphism::negation(&e);
        // fixed point: P∞
        assert_eq!(neg.orbit(&CurvePoint::Infinity).unwrap().len(), 1);
        // 2-torsion (3, 0) fixed
        let t = CurvePoint::affine(f.from_int(3), f.zero());
        assert_eq!(neg.orbit(&t).unwrap().len(), 1);
        // generic point pairs with its negative
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        let orb = neg.orbit(&p).unwrap();
        assert_eq!(orb.len(), 2);
        assert!(orb.contains(&e.negate(&p).unwrap()));
    }

    fn sample_curves() -> Vec<EllipticCurve> {
        let mut v = Vec::new();
        let f7 = gf(7, 1);
        v.push(EllipticCurve::short_weierstrass(f7.clone(), f7.zero(), f7.one()).unwrap());
        let f4 = gf(2, 2);
        v.push(
            EllipticCurve::char2_supersingular(f4.clone(), f4.one(), f4.zero(), f4.zero())
                .unwrap(),
        );
        let f9 = gf(3, 2);
        v.push(EllipticCurve::short_weierstrass(f9.clone(), f9.one(), f9.zero()).unwrap());
        let f8 = gf(2, 3);
        v.push(EllipticCurve::char2_ordinary(f8.clone(), f8.zero(), f8.one()).unwrap());
        v
    }

    #[test]
    fn classification_char_gt3() {
        // involution on y² = x³ + 1 / GF(7): y = 0 points fixed
        let f = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.zero(), f.one()).unwrap();
        let neg = CurveAutomorphism::negation(&e);
        let rep = classify_invariant_points(&e, &neg).unwrap();
        assert!(rep.all_match(), "{rep:?}");
        // order 3 on the same curve (j = 0, GF(7) has cube roots of 1: 2³=1)
        let auts = list_automorphisms(&e).unwrap();
        if let Some(s3) = auts.iter().find(|a| a.order() == 3) {
            let rep = classify_invariant_points(&e, s3).unwrap();
            assert!(rep.all_match(), "{rep:?}");
        }
        // order 6 exists too
        if let Some(s6) = auts.iter().find(|a| a.order() == 6) {
            let rep = classify_invariant_points(&e, s6).unwrap();
            assert!(rep.all_match(), "{rep:?}");
        }
    }

    #[test]
    fn classification_char2() {
        let f = gf(2, 2);
        let e =
            EllipticCurve::char2_supersingular(f.clone(), f.one(), f.zero(), f.zero()).unwrap();
        let auts = list_automorphisms(&e).unwrap();
        for ell in [2usize, 3, 4, 6] {
            let of_order: Vec<_> = auts.iter().filter(|a| a.order() == ell).collect();
            assert!(!of_order.is_empty(), "order {ell} missing");
            for s in &of_order {
                let rep = classify_invariant_points(&e, s).unwrap();
                assert!(rep.sound, "order {ell} unsound: {rep:?}");
                assert!(rep.all_match(), "order {ell} mismatch: {rep:?}");
            }
        }
    }
}
