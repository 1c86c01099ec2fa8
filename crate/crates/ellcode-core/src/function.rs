//! Rational functions on an elliptic curve in canonical form
//! `(a(X) + b(X)·Y) / d(X)` with Y-degree ≤ 1 (the curve relation
//! eliminates Y²), gcd(a, b, d) = 1 and monic d. The canonical form is
//! unique per function, so structural equality is function equality.
//!
//! Valuations at affine rational places are computed by expanding the
//! numerator and denominator in powers of a local parameter: t = X - α at
//! unramified places (with Y lifted as a power series in t along the
//! branch through the place), and u = Y - β at ramified places, where
//! X - α has valuation 2 and is no uniformizer. At P∞ the weighted rule
//! v(X^i Y^j) = -2i - 3j decides exactly: since canonical numerators have
//! Y-degree ≤ 1, the X-part weights are even and the Y-part weights odd,
//! so the leading terms can never cancel.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::{CurvePoint, EllipticCurve};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElement};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFunction {
    curve: EllipticCurve,
    num_a: Poly,
    num_b: Poly,
    den: Poly,
}

impl CurveFunction {
    /// Canonicalizes (a + b·Y)/d: divides out gcd(a, b, d) and scales d
    /// monic. `d` must be nonzero.
    pub fn from_parts(curve: &EllipticCurve, num_a: Poly, num_b: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &curve.field;
        let g = num_a.gcd(f, &num_b).gcd(f, &den);
        let (mut a, mut b, mut d) = (num_a, num_b, den);
        if g.deg() != Some(0) {
            a = a.divrem(f, &g)?.0;
            b = b.divrem(f, &g)?.0;
            d = d.divrem(f, &g)?.0;
        }
        let lead = d.lead().expect("den nonzero").clone();
        if !f.is_one(&lead) {
            let linv = f.inv(&lead)?;
            a = a.scale(f, &linv);
            b = b.scale(f, &linv);
            d = d.scale(f, &linv);
        }
        Ok(CurveFunction { curve: curve.clone(), num_a: a, num_b: b, den: d })
    }

    pub fn zero(curve: &EllipticCurve) -> Self {
        let f = &curve.field;
        CurveFunction {
            curve: curve.clone(),
            num_a: Poly::zero(),
            num_b: Poly::zero(),
            den: Poly::one(f),
        }
    }

    pub fn constant(curve: &EllipticCurve, c: FieldElement) -> Self {
        let f = &curve.field;
        CurveFunction {
            curve: curve.clone(),
            num_a: Poly::constant(f, c),
            num_b: Poly::zero(),
            den: Poly::one(f),
        }
    }

    pub fn one(curve: &EllipticCurve) -> Self {
        Self::constant(curve, curve.field.one())
    }

    /// The coordinate function X.
    pub fn x(curve: &EllipticCurve) -> Self {
        let f = &curve.field;
        CurveFunction {
            curve: curve.clone(),
            num_a: Poly::from_coeffs(f, vec![f.zero(), f.one()]),
            num_b: Poly::zero(),
            den: Poly::one(f),
        }
    }

    /// The coordinate function Y.
    pub fn y(curve: &EllipticCurve) -> Self {
        let f = &curve.field;
        CurveFunction {
            curve: curve.clone(),
            num_a: Poly::zero(),
            num_b: Poly::one(f),
            den: Poly::one(f),
        }
    }

    /// X^i · Y^j / d for the monomial enumerations (j ≤ 1).
    pub fn monomial_over(curve: &EllipticCurve, i: usize, j: usize, den: Poly) -> Result<Self> {
        debug_assert!(j <= 1);
        let f = &curve.field;
        let xi = Poly::from_coeffs(f, vec![f.zero(), f.one()]).pow(f, i);
        let (a, b) = if j == 0 { (xi, Poly::zero()) } else { (Poly::zero(), xi) };
        CurveFunction::from_parts(curve, a, b, den)
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    pub fn num_a(&self) -> &Poly {
        &self.num_a
    }

    pub fn num_b(&self) -> &Poly {
        &self.num_b
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num_a.is_zero() && self.num_b.is_zero()
    }

    fn field(&self) -> &ExtField {
        &self.curve.field
    }

    pub fn add(&self, rhs: &CurveFunction) -> Result<CurveFunction> {
        self.curve.same_curve(&rhs.curve)?;
        let f = self.field();
        let a = self
            .num_a
            .mul(f, &rhs.den)
            .add(f, &rhs.num_a.mul(f, &self.den));
        let b = self
            .num_b
            .mul(f, &rhs.den)
            .add(f, &rhs.num_b.mul(f, &self.den));
        let d = self.den.mul(f, &rhs.den);
        CurveFunction::from_parts(&self.curve, a, b, d)
    }

    pub fn neg(&self) -> CurveFunction {
        let f = self.field();
        CurveFunction {
            curve: self.curve.clone(),
            num_a: self.num_a.neg(f),
            num_b: self.num_b.neg(f),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &CurveFunction) -> Result<CurveFunction> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Result<CurveFunction> {
        let f = self.field();
        CurveFunction::from_parts(
            &self.curve,
            self.num_a.scale(f, c),
            self.num_b.scale(f, c),
            self.den.clone(),
        )
    }

    pub fn mul(&self, rhs: &CurveFunction) -> Result<CurveFunction> {
        self.curve.same_curve(&rhs.curve)?;
        let f = self.field();
        let e = &self.curve;
        // (a1 + b1 Y)(a2 + b2 Y) = a1a2 + (a1b2 + a2b1) Y + b1b2 Y²
        // with Y² = RHS(X) - (e.a1 X + e.a3) Y from the curve equation
        let aa = self.num_a.mul(f, &rhs.num_a);
        let cross = self
            .num_a
            .mul(f, &rhs.num_b)
            .add(f, &rhs.num_a.mul(f, &self.num_b));
        let bb = self.num_b.mul(f, &rhs.num_b);
        let rhs_poly = Poly::from_coeffs(
            f,
            vec![e.a6.clone(), e.a4.clone(), e.a2.clone(), f.one()],
        );
        let y_coeff_poly = Poly::from_coeffs(f, vec![e.a3.clone(), e.a1.clone()]);
        let a = aa.add(f, &bb.mul(f, &rhs_poly));
        let b = cross.sub(f, &bb.mul(f, &y_coeff_poly));
        let d = self.den.mul(f, &rhs.den);
        CurveFunction::from_parts(&self.curve, a, b, d)
    }

    /// Multiplicative inverse via the conjugate: 1/(a + bY) multiplies
    /// through by a + bȲ where Ȳ = -Y - a1X - a3 is the other root, so
    /// the denominator becomes the norm polynomial in X alone.
    pub fn inv(&self) -> Result<CurveFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field();
        let norm = self.norm_poly();
        debug_assert!(!norm.is_zero());
        // 1/f = d·(a + bȲ)/N = (d(a - b(a1X+a3)) - d·b·Y)/N
        let e = &self.curve;
        let y_coeff_poly = Poly::from_coeffs(f, vec![e.a3.clone(), e.a1.clone()]);
        let a_new = self
            .den
            .mul(f, &self.num_a.sub(f, &self.num_b.mul(f, &y_coeff_poly)));
        let b_new = self.den.mul(f, &self.num_b).neg(f);
        CurveFunction::from_parts(&self.curve, a_new, b_new, norm)
    }

    pub fn div(&self, rhs: &CurveFunction) -> Result<CurveFunction> {
        self.mul(&rhs.inv()?)
    }

    pub fn pow(&self, e: usize) -> Result<CurveFunction> {
        let mut acc = CurveFunction::one(&self.curve);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Norm of the numerator: (a + bY)(a + bȲ) = a² - ab(a1X + a3) - b²·RHS,
    /// a polynomial in X that vanishes exactly below the zeros of a + bY.
    pub fn norm_poly(&self) -> Poly {
        let f = self.field();
        let e = &self.curve;
        let rhs_poly = Poly::from_coeffs(
            f,
            vec![e.a6.clone(), e.a4.clone(), e.a2.clone(), f.one()],
        );
        let y_coeff_poly = Poly::from_coeffs(f, vec![e.a3.clone(), e.a1.clone()]);
        let aa = self.num_a.mul(f, &self.num_a);
        let ab = self.num_a.mul(f, &self.num_b).mul(f, &y_coeff_poly);
        let bb = self.num_b.mul(f, &self.num_b).mul(f, &rhs_poly);
        aa.sub(f, &ab).sub(f, &bb)
    }

    /// Applies the affine substitution X ↦ cx·X + dx, Y ↦ cy·Y + sy·X + dy
    /// (the shape of every automorphism action fixing P∞).
    pub fn compose_affine(
        &self,
        cx: &FieldElement,
        dx: &FieldElement,
        cy: &FieldElement,
        sy: &FieldElement,
        dy: &FieldElement,
    ) -> Result<CurveFunction> {
        let f = self.field();
        let xmap = Poly::from_coeffs(f, vec![dx.clone(), cx.clone()]);
        let sub = |p: &Poly| -> Poly {
            let mut acc = Poly::zero();
            for c in p.coeffs.iter().rev() {
                acc = acc.mul(f, &xmap).add(f, &Poly::constant(f, c.clone()));
            }
            acc
        };
        let a_sub = sub(&self.num_a);
        let b_sub = sub(&self.num_b);
        let d_sub = sub(&self.den);
        // a(σx) + b(σx)(cy·Y + sy·X + dy)
        let lin = Poly::from_coeffs(f, vec![dy.clone(), sy.clone()]);
        let a_new = a_sub.add(f, &b_sub.mul(f, &lin));
        let b_new = b_sub.scale(f, cy);
        CurveFunction::from_parts(&self.curve, a_new, b_new, d_sub)
    }

    // ------------------------------------------------------------------
    // local analysis
    // ------------------------------------------------------------------

    /// Valuation at a rational place (affine point or P∞). `self` must be
    /// nonzero.
    pub fn valuation(&self, place: &CurvePoint) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        match place {
            CurvePoint::Infinity => Ok(self.valuation_at_infinity()),
            CurvePoint::Affine { x, y } => self.valuation_affine(x, y),
        }
    }

    fn valuation_at_infinity(&self) -> i64 {
        let wnum = weighted_pole_order(&self.num_a, &self.num_b);
        let wden = 2 * self.den.deg().unwrap_or(0) as i64;
        wden - wnum
    }

    fn valuation_affine(&self, x: &FieldElement, y: &FieldElement) -> Result<i64> {
        let f = self.field();
        let e = &self.curve;
        let p = CurvePoint::affine(x.clone(), y.clone());
        if !e.is_on_curve(&p)? {
            return Err(Error::PointNotOnCurve);
        }
        let ramified = is_ramified(e, x, y);
        let e_p: i64 = if ramified { 2 } else { 1 };
        let v_den = self.den.root_multiplicity(f, x) as i64 * e_p;
        // strip the common (X - α) power from the numerator first
        let lin = Poly::x_minus(f, x);
        let mut a = self.num_a.clone();
        let mut b = self.num_b.clone();
        let mut k = 0i64;
        loop {
            let (qa, ra) = a.divrem(f, &lin)?;
            let (qb, rb) = b.divrem(f, &lin)?;
            if ra.is_zero() && rb.is_zero() && !(qa.is_zero() && qb.is_zero()) {
                a = qa;
                b = qb;
                k += 1;
            } else {
                break;
            }
        }
        let val_at = f.add(&a.eval(f, x), &f.mul(&b.eval(f, x), y));
        if !val_at.is_zero() {
            return Ok(k * e_p - v_den);
        }
        // vanishing residual numerator: series expansion along the branch
        let reduced = CurveFunction {
            curve: e.clone(),
            num_a: a,
            num_b: b,
            den: Poly::one(f),
        };
        let cap = reduced.numerator_order_cap(x, e_p);
        let ord = reduced.numerator_series_order(x, y, ramified, cap)?;
        Ok(k * e_p + ord - v_den)
    }

    /// Hard upper bound on v_P(a + bY): the norm polynomial has the same
    /// zeros below P, so e_P times its multiplicity at α dominates.
    fn numerator_order_cap(&self, x: &FieldElement, e_p: i64) -> usize {
        let f = self.field();
        let n = self.norm_poly();
        debug_assert!(!n.is_zero());
        (e_p * n.root_multiplicity(f, x) as i64) as usize + 2
    }

    /// Order of the numerator series along the branch through (x, y),
    /// expanding to increasing precision until a nonzero coefficient
    /// appears (the cap is exact, so this terminates).
    fn numerator_series_order(
        &self,
        x: &FieldElement,
        y: &FieldElement,
        ramified: bool,
        cap: usize,
    ) -> Result<i64> {
        let mut n = 4usize.max(self.num_a.deg().unwrap_or(0) + 2);
        loop {
            n = n.min(cap);
            let series = self.numerator_series(x, y, ramified, n);
            if let Some(ord) = series_order(&series) {
                return Ok(ord as i64);
            }
            assert!(n < cap, "series order exceeds the norm bound");
            n *= 2;
        }
    }

    /// Truncated series of a + b·Y along the branch through (x, y) in the
    /// local parameter (t = X - α unramified, u = Y - β ramified), with
    /// n + 1 coefficients.
    fn numerator_series(
        &self,
        x: &FieldElement,
        y: &FieldElement,
        ramified: bool,
        n: usize,
    ) -> Vec<FieldElement> {
        let f = self.field();
        let (xs, ys) = branch_series(&self.curve, x, y, ramified, n);
        let a_s = poly_on_series(f, &self.num_a, &xs, n);
        let b_s = poly_on_series(f, &self.num_b, &xs, n);
        series_add(f, &a_s, &series_mul(f, &b_s, &ys, n))
    }

    /// Evaluates at an affine point, cancelling common local factors when
    /// the denominator vanishes there. Errors with PoleAtPoint when the
    /// valuation is negative.
    pub fn evaluate(&self, p: &CurvePoint) -> Result<FieldElement> {
        let f = self.field();
        let (x, y) = match p {
            CurvePoint::Infinity => return Err(Error::UnsupportedPlace),
            CurvePoint::Affine { x, y } => (x, y),
        };
        if !self.curve.is_on_curve(p)? {
            return Err(Error::PointNotOnCurve);
        }
        let d_val = self.den.eval(f, x);
        if !d_val.is_zero() {
            let n_val = f.add(&self.num_a.eval(f, x), &f.mul(&self.num_b.eval(f, x), y));
            return f.div(&n_val, &d_val);
        }
        if self.is_zero() {
            return Ok(f.zero());
        }
        let v = self.valuation(p)?;
        if v < 0 {
            return Err(Error::PoleAtPoint);
        }
        if v > 0 {
            return Ok(f.zero());
        }
        // v = 0 with vanishing denominator: ratio of leading series terms
        let ramified = is_ramified(&self.curve, x, y);
        let vd = self.den.root_multiplicity(f, x) * if ramified { 2 } else { 1 };
        let n = vd + 2;
        let num_s = self.numerator_series(x, y, ramified, n);
        let (xs, _) = branch_series(&self.curve, x, y, ramified, n);
        let den_s = poly_on_series(f, &self.den, &xs, n);
        debug_assert_eq!(series_order(&den_s), Some(vd));
        debug_assert_eq!(series_order(&num_s), Some(vd));
        f.div(&num_s[vd], &den_s[vd])
    }

    /// Certifies membership f ∈ L(G): checks v(f) ≥ -mult_G at every
    /// rational place above a denominator root, every support place of G
    /// and P∞. Sound because a canonical-form function can only have poles
    /// above denominator roots or at infinity.
    ///
    /// The denominator must split into linear factors over the field;
    /// a closed place of degree > 1 is out of scope. A split root with no
    /// rational point above it certifies non-membership (the pole sits at
    /// a conjugate pair no rational divisor can cover).
    pub fn pole_certificate(&self, g: &Divisor) -> Result<bool> {
        self.curve.same_curve(g.curve())?;
        if self.is_zero() {
            // the zero function belongs to every Riemann-Roch space
            return Ok(true);
        }
        let f = self.field();
        let (den_roots, rest) = self.den.roots(f);
        if rest.deg().unwrap_or(0) > 0 {
            return Err(Error::UnsupportedPlace);
        }
        let mut places: Vec<CurvePoint> = Vec::new();
        for (alpha, _) in &den_roots {
            let above = points_above(&self.curve, alpha);
            if above.is_empty() {
                // pole at a non-rational conjugate pair
                return Ok(false);
            }
            places.extend(above);
        }
        for (p, _) in g.iter() {
            places.push(p.clone());
        }
        places.push(CurvePoint::Infinity);
        places.sort();
        places.dedup();
        for p in &places {
            let needed = -g.multiplicity(p);
            let quick_nonneg = match p {
                CurvePoint::Infinity => false,
                CurvePoint::Affine { x, .. } => !self.den.eval(f, x).is_zero(),
            };
            if quick_nonneg && needed <= 0 {
                continue;
            }
            if self.valuation(p)? < needed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The principal divisor of f restricted to rational places. Errors
    /// with UnsupportedPlace when any zero or pole escapes to a closed
    /// place (detected exactly: the rational valuations must sum to 0).
    pub fn principal_divisor(&self) -> Result<Divisor> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let f = self.field();
        let mut entries: Vec<(CurvePoint, i64)> = Vec::new();
        let mut xs: Vec<FieldElement> = Vec::new();
        let (nroots, _) = self.norm_poly().roots(f);
        let (droots, drest) = self.den.roots(f);
        if drest.deg().unwrap_or(0) > 0 {
            return Err(Error::UnsupportedPlace);
        }
        for (r, _) in nroots.into_iter().chain(droots) {
            if !xs.contains(&r) {
                xs.push(r);
            }
        }
        let mut total = 0i64;
        for alpha in &xs {
            for p in points_above(&self.curve, alpha) {
                let v = self.valuation(&p)?;
                if v != 0 {
                    total += v;
                    entries.push((p, v));
                }
            }
        }
        let vinf = self.valuation_at_infinity();
        if vinf != 0 {
            total += vinf;
            entries.push((CurvePoint::Infinity, vinf));
        }
        if total != 0 {
            // some zero or pole lives at a non-rational place
            return Err(Error::UnsupportedPlace);
        }
        Divisor::new(&self.curve, &entries)
    }

    /// Positive part of the principal divisor.
    pub fn zero_divisor(&self) -> Result<Divisor> {
        let d = self.principal_divisor()?;
        let entries: Vec<(CurvePoint, i64)> = d
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(p, m)| (p.clone(), m))
            .collect();
        Divisor::new(&self.curve, &entries)
    }
}

/// -v_P∞ of a nonzero canonical numerator a + bY: even weights 2·deg a
/// from the X-part, odd weights 2·deg b + 3 from the Y-part, never equal.
fn weighted_pole_order(a: &Poly, b: &Poly) -> i64 {
    let wa = a.deg().map(|d| 2 * d as i64);
    let wb = b.deg().map(|d| 2 * d as i64 + 3);
    match (wa, wb) {
        (Some(x), Some(y)) => x.max(y),
        (Some(x), None) => x,
        (None, Some(y)) => y,
        (None, None) => unreachable!("zero numerator"),
    }
}

/// A place (x, y) is ramified over x exactly when the two points above x
/// coincide, i.e. the partial derivative 2y + a1·x + a3 vanishes
/// (2-torsion points).
pub(crate) fn is_ramified(e: &EllipticCurve, x: &FieldElement, y: &FieldElement) -> bool {
    let f = &e.field;
    let d = f.add(
        &f.mul(&f.from_int(2), y),
        &f.add(&f.mul(&e.a1, x), &e.a3),
    );
    d.is_zero()
}

/// All rational points of the curve with the given x-coordinate.
pub fn points_above(e: &EllipticCurve, x: &FieldElement) -> Vec<CurvePoint> {
    let f = &e.field;
    let mut out = Vec::new();
    for y in f.iter() {
        let p = CurvePoint::affine(x.clone(), y);
        if e.is_on_curve(&p).unwrap() {
            out.push(p);
        }
    }
    out
}

// ----------------------------------------------------------------------
// truncated power series helpers (dense, n + 1 coefficients)
// ----------------------------------------------------------------------

pub(crate) fn series_add(f: &ExtField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            f.add(&x, &y)
        })
        .collect()
}

pub(crate) fn series_mul(f: &ExtField, a: &[FieldElement], b: &[FieldElement], n: usize) -> Vec<FieldElement> {
    let mut out = vec![f.zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > n {
                break;
            }
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

fn series_scale(f: &ExtField, a: &[FieldElement], c: &FieldElement) -> Vec<FieldElement> {
    a.iter().map(|x| f.mul(x, c)).collect()
}

fn series_order(a: &[FieldElement]) -> Option<usize> {
    a.iter().position(|c| !c.is_zero())
}

/// Evaluates a polynomial on a truncated series (Horner).
fn poly_on_series(f: &ExtField, p: &Poly, xs: &[FieldElement], n: usize) -> Vec<FieldElement> {
    let mut acc = vec![f.zero(); n + 1];
    for c in p.coeffs.iter().rev() {
        acc = series_mul(f, &acc, xs, n);
        acc[0] = f.add(&acc[0], c);
    }
    acc
}

/// Local parametrization of the branch through (x0, y0), to n + 1
/// coefficients: unramified places use t = X - α with Y lifted along the
/// curve; ramified ones use u = Y - β with X lifted.
pub(crate) fn branch_series(
    e: &EllipticCurve,
    x0: &FieldElement,
    y0: &FieldElement,
    ramified: bool,
    n: usize,
) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let f = &e.field;
    if !ramified {
        // X(t) = α + t
        let mut xs = vec![f.zero(); n + 1];
        xs[0] = x0.clone();
        if n >= 1 {
            xs[1] = f.one();
        }
        // F_Y(α, β) = 2β + a1α + a3, nonzero off the ramified locus
        let fy = f.add(
            &f.mul(&f.from_int(2), y0),
            &f.add(&f.mul(&e.a1, x0), &e.a3),
        );
        let fy_inv = f.inv(&fy).expect("unramified place");
        let mut ys = vec![f.zero(); n + 1];
        ys[0] = y0.clone();
        for j in 1..=n {
            let fval = curve_poly_on_series(e, &xs, &ys, j);
            let cj = f.neg(&f.mul(&fval[j], &fy_inv));
            ys[j] = cj;
        }
        (xs, ys)
    } else {
        // Y(u) = β + u
        let mut ys = vec![f.zero(); n + 1];
        ys[0] = y0.clone();
        if n >= 1 {
            ys[1] = f.one();
        }
        // F_X(α, β) = a1β - 3α² - 2a2α - a4, nonzero on a smooth curve
        // wherever F_Y vanishes
        let fx = {
            let x2 = f.mul(x0, x0);
            let t = f.add(
                &f.mul(&f.from_int(3), &x2),
                &f.add(&f.mul(&f.from_int(2), &f.mul(&e.a2, x0)), &e.a4),
            );
            f.sub(&f.mul(&e.a1, y0), &t)
        };
        let fx_inv = f.inv(&fx).expect("smooth curve");
        let mut xs = vec![f.zero(); n + 1];
        xs[0] = x0.clone();
        for j in 1..=n {
            let fval = curve_poly_on_series(e, &xs, &ys, j);
            let ej = f.neg(&f.mul(&fval[j], &fx_inv));
            xs[j] = ej;
        }
        (xs, ys)
    }
}

/// F(X, Y) = Y² + a1XY + a3Y - X³ - a2X² - a4X - a6 on truncated series.
pub(crate) fn curve_poly_on_series(
    e: &EllipticCurve,
    xs: &[FieldElement],
    ys: &[FieldElement],
    n: usize,
) -> Vec<FieldElement> {
    let f = &e.field;
    let y2 = series_mul(f, ys, ys, n);
    let xy = series_mul(f, xs, ys, n);
    let x2 = series_mul(f, xs, xs, n);
    let x3 = series_mul(f, &x2, xs, n);
    let mut acc = series_add(f, &y2, &series_scale(f, &xy, &e.a1));
    acc = series_add(f, &acc, &series_scale(f, ys, &e.a3));
    let mut sub = series_add(f, &x3, &series_scale(f, &x2, &e.a2));
    sub = series_add(f, &sub, &series_scale(f, xs, &e.a4));
    sub[0] = f.add(&sub[0], &e.a6);
    let negsub: Vec<FieldElement> = sub.iter().map(|c| f.neg(c)).collect();
    series_add(f, &acc, &negsub)
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
    fn canonical_identities() {
        let e = curve_7();
        let f = &e.field;
        let one = CurveFunction::one(&e);
        let y = CurveFunction::y(&e);
        // f · 1 = f
        assert_eq!(y.mul(&one).unwrap(), y);
        // Y · Y = X³ + a2X² + a4X + a6 - (a1X + a3)Y = X³ + 1 here
        let y2 = y.mul(&y).unwrap();
        let expect = CurveFunction::from_parts(
            &e,
            Poly::from_coeffs(f, vec![f.one(), f.zero(), f.zero(), f.one()]),
            Poly::zero(),
            Poly::one(f),
        )
        .unwrap();
        assert_eq!(y2, expect);
        // (1/(X-α)) · (X-α) = 1
        let alpha = f.from_int(2);
        let lin = CurveFunction::from_parts(
            &e,
            Poly::x_minus(f, &alpha),
            Poly::zero(),
            Poly::one(f),
        )
        .unwrap();
        let inv = CurveFunction::from_parts(
            &e,
            Poly::one(f),
            Poly::zero(),
            Poly::x_minus(f, &alpha),
        )
        .unwrap();
        assert_eq!(lin.mul(&inv).unwrap(), one);
    }

    #[test]
    fn canonicalization_idempotent() {
        let e = curve_7();
        let f = &e.field;
        // ((X-2)(X-3) + (X-2)Y) / ((X-2)(X-5)·3) canonicalizes once
        let lin2 = Poly::x_minus(f, &f.from_int(2));
        let a = lin2.mul(f, &Poly::x_minus(f, &f.from_int(3)));
        let b = lin2.clone();
        let d = lin2
            .mul(f, &Poly::x_minus(f, &f.from_int(5)))
            .scale(f, &f.from_int(3));
        let g = CurveFunction::from_parts(&e, a, b, d).unwrap();
        let g2 = CurveFunction::from_parts(
            &e,
            g.num_a().clone(),
            g.num_b().clone(),
            g.den().clone(),
        )
        .unwrap();
        assert_eq!(g, g2);
        assert!(g.den().lead().map(|c| f.is_one(c)).unwrap_or(false));
    }

    #[test]
    fn inverse_roundtrip() {
        let e = curve_7();
        let f = &e.field;
        let g = CurveFunction::from_parts(
            &e,
            Poly::from_coeffs(f, vec![f.from_int(3), f.one()]),
            Poly::one(f),
            Poly::x_minus(f, &f.from_int(2)),
        )
        .unwrap();
        assert_eq!(g.mul(&g.inv().unwrap()).unwrap(), CurveFunction::one(&e));
        assert!(CurveFunction::zero(&e).inv().is_err());
    }

    #[test]
    fn evaluate_basics() {
        let e = curve_7();
        let f = &e.field;
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        let c = CurveFunction::constant(&e, f.from_int(5));
        assert_eq!(c.evaluate(&p).unwrap(), f.from_int(5));
        let x = CurveFunction::x(&e);
        assert_eq!(x.evaluate(&p).unwrap(), f.from_int(2));
        let y = CurveFunction::y(&e);
        assert_eq!(y.evaluate(&p).unwrap(), f.from_int(3));
    }

    #[test]
    fn valuation_at_infinity_rules() {
        let e = curve_7();
        let x = CurveFunction::x(&e);
        let y = CurveFunction::y(&e);
        assert_eq!(x.valuation(&CurvePoint::Infinity).unwrap(), -2);
        assert_eq!(y.valuation(&CurvePoint::Infinity).unwrap(), -3);
        let x2y = x.mul(&x).unwrap().mul(&y).unwrap();
        assert_eq!(x2y.valuation(&CurvePoint::Infinity).unwrap(), -7);
    }

    #[test]
    fn valuation_local_parameter() {
        let e = curve_7();
        let f = &e.field;
        // (2,3) is not 2-torsion: v(X-2) = 1 there
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        let xm = CurveFunction::from_parts(
            &e,
            Poly::x_minus(f, &f.from_int(2)),
            Poly::zero(),
            Poly::one(f),
        )
        .unwrap();
        assert_eq!(xm.valuation(&p).unwrap(), 1);
        // at the conjugate (2,4) too
        let pc = CurvePoint::affine(f.from_int(2), f.from_int(4));
        assert_eq!(xm.valuation(&pc).unwrap(), 1);
        // at the 2-torsion point (3, 0): x - 3 ramifies, v = 2
        let t = CurvePoint::affine(f.from_int(3), f.zero());
        let xm3 = CurveFunction::from_parts(
            &e,
            Poly::x_minus(f, &f.from_int(3)),
            Poly::zero(),
            Poly::one(f),
        )
        .unwrap();
        assert_eq!(xm3.valuation(&t).unwrap(), 2);
        // y - 0 has valuation 1 at the ramified point
        let y = CurveFunction::y(&e);
        assert_eq!(y.valuation(&t).unwrap(), 1);
    }

    #[test]
    fn valuation_additive_under_product() {
        let e = curve_7();
        let f = &e.field;
        let pts = [
            CurvePoint::affine(f.from_int(2), f.from_int(3)),
            CurvePoint::affine(f.from_int(3), f.zero()),
            CurvePoint::Infinity,
        ];
        let fns = [
            CurveFunction::x(&e),
            CurveFunction::y(&e),
            CurveFunction::from_parts(
                &e,
                Poly::x_minus(f, &f.from_int(2)).mul(f, &Poly::x_minus(f, &f.from_int(3))),
                Poly::one(f),
                Poly::x_minus(f, &f.from_int(0)),
            )
            .unwrap(),
        ];
        for g in &fns {
            for h in &fns {
                let gh = g.mul(h).unwrap();
                for p in &pts {
                    assert_eq!(
                        gh.valuation(p).unwrap(),
                        g.valuation(p).unwrap() + h.valuation(p).unwrap(),
                        "at {:?}",
                        p
                    );
                }
            }
        }
    }

    #[test]
    fn principal_divisor_degree_zero() {
        let e = curve_7();
        let f = &e.field;
        // div(X - 2) = (2,3) + (2,4) - 2P∞
        let xm = CurveFunction::from_parts(
            &e,
            Poly::x_minus(f, &f.from_int(2)),
            Poly::zero(),
            Poly::one(f),
        )
        .unwrap();
        let d = xm.principal_divisor().unwrap();
        assert_eq!(d.degree(), 0);
        assert_eq!(
            d.multiplicity(&CurvePoint::affine(f.from_int(2), f.from_int(3))),
            1
        );
        assert_eq!(
            d.multiplicity(&CurvePoint::affine(f.from_int(2), f.from_int(4))),
            1
        );
        assert_eq!(d.multiplicity(&CurvePoint::Infinity), -2);
        // div(Y): zeros at y = 0 points, pole 3P∞
        let y = CurveFunction::y(&e);
        let dy = y.principal_divisor().unwrap();
        assert_eq!(dy.degree(), 0);
        assert_eq!(dy.multiplicity(&CurvePoint::Infinity), -3);
    }

    #[test]
    fn evaluate_with_cancellation() {
        let e = curve_7();
        let f = &e.field;
        // (X³ - 1)/(X - 2): at x = 2 the numerator is 8 - 1 = 0 → regular;
        // (X³-1)/(X-2) = X² + 2X + 4 + 7/(X-2), so the value at 2 is 12 ≡ 5
        let num = Poly::from_coeffs(f, vec![f.from_int(-1), f.zero(), f.zero(), f.one()]);
        let g = CurveFunction::from_parts(&e, num, Poly::zero(), Poly::x_minus(f, &f.from_int(2)))
            .unwrap();
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        assert_eq!(g.evaluate(&p).unwrap(), f.from_int(5));
        // a genuine pole errors
        let inv = CurveFunction::from_parts(
            &e,
            Poly::one(f),
            Poly::zero(),
            Poly::x_minus(f, &f.from_int(2)),
        )
        .unwrap();
        assert_eq!(inv.evaluate(&p).unwrap_err(), Error::PoleAtPoint);
        // (Y - 3)/(X - 2) is canonical (no polynomial gcd) yet regular at
        // (2,3): the local series gives the tangent slope (3α²)/(2β) = 2
        let h = CurveFunction::from_parts(
            &e,
            Poly::constant(f, f.from_int(-3)),
            Poly::one(f),
            Poly::x_minus(f, &f.from_int(2)),
        )
        .unwrap();
        assert_eq!(h.valuation(&p).unwrap(), 0);
        assert_eq!(h.evaluate(&p).unwrap(), f.from_int(2));
        // while at the conjugate (2,4) it genuinely blows up
        let pc = CurvePoint::affine(f.from_int(2), f.from_int(4));
        assert_eq!(h.valuation(&pc).unwrap(), -1);
        assert_eq!(h.evaluate(&pc).unwrap_err(), Error::PoleAtPoint);
    }

    #[test]
    fn eval_zero_iff_positive_valuation() {
        // exhaustive over a small curve: evaluate(f,P) = 0 iff v > 0,
        // PoleAtPoint iff v < 0
        let e = curve_7();
        let f = &e.field;
        let g = CurveFunction::from_parts(
            &e,
            Poly::x_minus(f, &f.from_int(2)),
            Poly::one(f),
            Poly::x_minus(f, &f.from_int(0)),
        )
        .unwrap();
        for p in e.enumerate_points().unwrap() {
            if p.is_infinity() {
                continue;
            }
            let v = g.valuation(&p).unwrap();
            match g.evaluate(&p) {
                Ok(val) => {
                    assert!(v >= 0);
                    assert_eq!(val.is_zero(), v > 0, "at {:?}", p);
                }
                Err(Error::PoleAtPoint) => assert!(v < 0),
                Err(other) => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn pole_certificate_cases() {
        let e = curve_7();
        let f = &e.field;
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        let pc = CurvePoint::affine(f.from_int(2), f.from_int(4));
        // constants lie in L(G) for effective G
        let one = CurveFunction::one(&e);
        let g_eff = Divisor::single(&e, p.clone(), 2).unwrap();
        assert!(one.pole_certificate(&g_eff).unwrap());
        // 1/(X-2) needs both points above 2
        let invx = CurveFunction::from_parts(
            &e,
            Poly::one(f),
            Poly::zero(),
            Poly::x_minus(f, &f.from_int(2)),
        )
        .unwrap();
        let only_p = Divisor::single(&e, p.clone(), 1).unwrap();
        assert!(!invx.pole_certificate(&only_p).unwrap());
        let both = Divisor::new(&e, &[(p.clone(), 1), (pc.clone(), 1)]).unwrap();
        assert!(invx.pole_certificate(&both).unwrap());
        // non-split denominator is out of scope: X² + 1 over GF(7)
        let bad = CurveFunction::from_parts(
            &e,
            Poly::one(f),
            Poly::zero(),
            Poly::from_coeffs(f, vec![f.one(), f.zero(), f.one()]),
        )
        .unwrap();
        assert_eq!(
            bad.pole_certificate(&both).unwrap_err(),
            Error::UnsupportedPlace
        );
    }

    #[test]
    fn split_root_without_rational_points() {
        // y² = x³ + x + 1 over GF(5): x = 1 → y² = 3, a non-residue mod 5,
        // so no rational points lie above x = 1
        let f = gf(5, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.one(), f.one()).unwrap();
        assert!(points_above(&e, &f.from_int(1)).is_empty());
        let g = CurveFunction::from_parts(
            &e,
            Poly::one(&f),
            Poly::zero(),
            Poly::x_minus(&f, &f.from_int(1)),
        )
        .unwrap();
        let p = CurvePoint::affine(f.from_int(2), f.from_int(1));
        let d = Divisor::single(&e, p, 5).unwrap();
        assert!(!g.pole_certificate(&d).unwrap());
    }
}
