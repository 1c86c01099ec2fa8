//! Explicit Riemann-Roch space bases for divisors on elliptic curves:
//! the monomial basis at infinity, one-point bases built from a Taylor
//! recurrence (or a linear solve on the local series), arbitrary
//! multipoint bases with chained chord functions, and the orbit-shaped
//! bases for quasi-cyclic constructions.
//!
//! Every constructor returns an [`RRBasis`] whose size equals the divisor
//! degree; [`verify_basis`] re-checks membership (pole certificates),
//! linear independence (evaluation rank) and the dimension count.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::{CurvePoint, EllipticCurve};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::function::{branch_series, curve_poly_on_series, is_ramified, CurveFunction};
use crate::matrix::Matrix;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Infinity,
    OnePointTaylor,
    OnePointSolve,
    Multipoint,
    /// Theorem-style multipoint functions without the constant, spanning
    /// L(G0 - P∞) for effective multipoint G0.
    MultipointMinusInfinity,
    QcOrbit,
    QcOrbitMinusInfinity,
}

#[derive(Debug, Clone)]
pub struct RRBasis {
    pub divisor: Divisor,
    pub functions: Vec<CurveFunction>,
    pub construction: Construction,
}

impl RRBasis {
    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

/// Monomial pairs (i, j) with 2i + 3j ≤ bound and j ≤ 1, ordered by
/// (j, i); there are exactly `bound` of them for bound ≥ 1.
fn monomial_exponents(bound: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 0..=1i64 {
        let mut i = 0i64;
        while 2 * i + 3 * j <= bound {
            out.push((i as usize, j as usize));
            i += 1;
        }
    }
    out
}

/// Basis of L(k·P∞): monomials x^i y^j with 2i + 3j ≤ k.
pub fn basis_at_infinity(e: &EllipticCurve, k: i64) -> Result<RRBasis> {
    if k < 1 {
        return Err(Error::InvalidDegree(k));
    }
    let f = &e.field;
    let functions: Vec<CurveFunction> = monomial_exponents(k)
        .into_iter()
        .map(|(i, j)| CurveFunction::monomial_over(e, i, j, Poly::one(f)).expect("den = 1"))
        .collect();
    debug_assert_eq!(functions.len() as i64, k);
    let divisor = Divisor::single(e, CurvePoint::Infinity, k)?;
    Ok(RRBasis { divisor, functions, construction: Construction::Infinity })
}

/// Taylor expansion of the curve branch at the conjugate point
/// P' = (α, β'): Y = β' + Σ c_j t^j with t = X - α.
#[derive(Debug, Clone)]
pub struct TaylorExpansion {
    pub center: CurvePoint,
    /// c_1 … c_{s-1}
    pub coeffs: Vec<FieldElement>,
}

impl TaylorExpansion {
    /// Substitutes the expansion into the curve equation and checks the
    /// remainder vanishes to order ≥ s (s = coeffs.len() + 1).
    pub fn verify(&self, e: &EllipticCurve) -> bool {
        let f = &e.field;
        let (alpha, beta) = match self.center.xy() {
            Some((x, y)) => (x, y),
            None => return false,
        };
        let s = self.coeffs.len() + 1;
        let mut xs = vec![f.zero(); s + 1];
        xs[0] = alpha.clone();
        if s >= 1 {
            xs[1] = f.one();
        }
        let mut ys = vec![f.zero(); s + 1];
        ys[0] = beta.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            ys[j + 1] = c.clone();
        }
        let rem = curve_poly_on_series(e, &xs, &ys, s);
        rem.iter().take(s).all(|c| c.is_zero())
    }
}

/// The Taylor coefficients c_1 … c_{s-1} of the branch through
/// P' = (α, β'), by the per-characteristic recurrence with
/// S_j = Σ_{i=1}^{j-1} c_i·c_{j-i}:
///
/// * char 2:  c_1 = (α² + a4 + a1β')/(a1α + a3),
///   c_j = ((α + a2)δ_{j,2} + δ_{j,3} + a1·c_{j-1} + S_j)/(a1α + a3);
/// * char > 3 (a1 = a3 = 0): c_1 = (3α² + 2a2α + a4)/(2β'),
///   c_j = ((3α + a2)δ_{j,2} + δ_{j,3} - S_j)/(2β').
///
/// Characteristic 3 is rejected (the recurrence degenerates); use the
/// solve construction instead.
pub fn taylor_coefficients(
    e: &EllipticCurve,
    p_prime: &CurvePoint,
    s: usize,
) -> Result<TaylorExpansion> {
    let f = &e.field;
    let p = f.characteristic();
    if p == 3 {
        return Err(Error::CharThreeUnsupported);
    }
    let (alpha, beta) = p_prime.xy().ok_or(Error::UnsupportedPoint)?;
    if !e.is_on_curve(p_prime)? {
        return Err(Error::PointNotOnCurve);
    }
    if e.torsion_test(p_prime, 2)? || e.torsion_test(p_prime, 3)? {
        return Err(Error::UnsupportedPoint);
    }
    let denom = if p == 2 {
        // a1α + a3
        f.add(&f.mul(&e.a1, alpha), &e.a3)
    } else {
        if !e.a1.is_zero() || !e.a3.is_zero() {
            return Err(Error::UnsupportedPoint);
        }
        f.mul(&f.from_int(2), beta)
    };
    if denom.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let dinv = f.inv(&denom)?;
    let mut coeffs: Vec<FieldElement> = Vec::with_capacity(s.saturating_sub(1));
    let c1 = if p == 2 {
        // (α² + a4 + a1β')/(a1α + a3)
        let num = f.add(&f.add(&f.mul(alpha, alpha), &e.a4), &f.mul(&e.a1, beta));
        f.mul(&num, &dinv)
    } else {
        // (3α² + 2a2α + a4)/(2β')
        let num = f.add(
            &f.add(
                &f.mul(&f.from_int(3), &f.mul(alpha, alpha)),
                &f.mul(&f.from_int(2), &f.mul(&e.a2, alpha)),
            ),
            &e.a4,
        );
        f.mul(&num, &dinv)
    };
    if s >= 2 {
        coeffs.push(c1);
    }
    for j in 2..s {
        let sj = {
            let mut acc = f.zero();
            for i in 1..j {
                acc = f.add(&acc, &f.mul(&coeffs[i - 1], &coeffs[j - i - 1]));
            }
            acc
        };
        let num = if p == 2 {
            let mut num = f.zero();
            if j == 2 {
                num = f.add(&num, &f.add(alpha, &e.a2));
            }
            if j == 3 {
                num = f.add(&num, &f.one());
            }
            num = f.add(&num, &f.mul(&e.a1, &coeffs[j - 2]));
            f.add(&num, &sj)
        } else {
            let mut num = f.zero();
            if j == 2 {
                num = f.add(&num, &f.add(&f.mul(&f.from_int(3), alpha), &e.a2));
            }
            if j == 3 {
                num = f.add(&num, &f.one());
            }
            f.sub(&num, &sj)
        };
        coeffs.push(f.mul(&num, &dinv));
    }
    let exp = TaylorExpansion { center: p_prime.clone(), coeffs };
    debug_assert!(exp.verify(e));
    Ok(exp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePointMethod {
    Taylor,
    Solve,
}

/// A_s(X) of degree ≤ s-1 with v_{P'}(Y + A_s) ≥ s, by exact linear solve
/// on the local series at P'. Fails (NoSolution) exactly when no such
/// polynomial exists, e.g. at 2-torsion points where X - α ramifies.
fn numerator_shift_by_solve(
    e: &EllipticCurve,
    p_prime: &CurvePoint,
    s: usize,
) -> Result<Poly> {
    let f = &e.field;
    let (alpha, beta) = p_prime.xy().ok_or(Error::UnsupportedPoint)?;
    let ram = is_ramified(e, alpha, beta);
    let n = s + 2;
    let (xs, ys) = branch_series(e, alpha, beta, ram, n);
    // columns: series of (X - α)^j for j = 0 … s-1, rows: orders 0 … s-1
    let mut tser = vec![f.zero(); n + 1];
    for (i, c) in xs.iter().enumerate() {
        tser[i] = c.clone();
    }
    tser[0] = f.sub(&tser[0], alpha);
    let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(s);
    let mut cur = {
        let mut one = vec![f.zero(); n + 1];
        one[0] = f.one();
        one
    };
    for _ in 0..s {
        cols.push(cur.clone());
        cur = crate::function::series_mul(f, &cur, &tser, n);
    }
    let rows: Vec<Vec<FieldElement>> = (0..s)
        .map(|i| (0..s).map(|j| cols[j][i].clone()).collect())
        .collect();
    let m = Matrix::new(rows)?;
    let rhs: Vec<FieldElement> = (0..s).map(|i| f.neg(&ys[i])).collect();
    let lambda = m.solve(f, &rhs).ok_or(Error::NoSolution)?;
    // A_s(X) = Σ λ_j (X - α)^j
    let tpoly = Poly::x_minus(f, alpha);
    let mut a = Poly::zero();
    for (j, lj) in lambda.iter().enumerate() {
        a = a.add(f, &tpoly.pow(f, j).scale(f, lj));
    }
    Ok(a)
}

/// Basis {1, f_2, …, f_k} of L(k·P) with f_s = (Y + A_s(X))/(X - α)^s and
/// v_P(f_s) = -s. The Taylor method uses the recurrence coefficients
/// (characteristic ≠ 3, P outside the 2- and 3-torsion); the solve method
/// forces the vanishing conditions by exact linear algebra and works in
/// any characteristic whenever a solution exists.
pub fn one_point_basis(
    e: &EllipticCurve,
    p: &CurvePoint,
    k: i64,
    method: OnePointMethod,
) -> Result<RRBasis> {
    if k < 1 {
        return Err(Error::InvalidDegree(k));
    }
    let (alpha, _beta) = p.xy().ok_or(Error::UnsupportedPoint)?;
    if !e.is_on_curve(p)? {
        return Err(Error::PointNotOnCurve);
    }
    let f = &e.field;
    let p_prime = e.negate(p)?;
    let mut functions = vec![CurveFunction::one(e)];
    let construction = match method {
        OnePointMethod::Taylor => Construction::OnePointTaylor,
        OnePointMethod::Solve => Construction::OnePointSolve,
    };
    if k >= 2 {
        let taylor_all = match method {
            OnePointMethod::Taylor => Some(taylor_coefficients(e, &p_prime, k as usize)?),
            OnePointMethod::Solve => None,
        };
        let (_, beta_prime) = p_prime.xy().expect("affine conjugate");
        for s in 2..=(k as usize) {
            let a_s = match &taylor_all {
                Some(exp) => {
                    // A_s(X) = -β' - Σ_{j<s} c_j (X - α)^j
                    let tpoly = Poly::x_minus(f, alpha);
                    let mut a = Poly::constant(f, f.neg(beta_prime));
                    for (idx, c) in exp.coeffs.iter().take(s - 1).enumerate() {
                        let term = tpoly.pow(f, idx + 1).scale(f, &f.neg(c));
                        a = a.add(f, &term);
                    }
                    a
                }
                None => numerator_shift_by_solve(e, &p_prime, s)?,
            };
            debug_assert!(a_s.deg().unwrap_or(0) <= s - 1);
            let den = Poly::x_minus(f, alpha).pow(f, s);
            let fs = CurveFunction::from_parts(e, a_s, Poly::one(f), den)?;
            debug_assert_eq!(fs.valuation(p)?, -(s as i64));
            functions.push(fs);
        }
    }
    let divisor = Divisor::single(e, p.clone(), k)?;
    Ok(RRBasis { divisor, functions, construction })
}

/// Per-point numerator shift with the Taylor recurrence when its
/// preconditions hold and the linear solve otherwise.
fn numerator_shift_auto(e: &EllipticCurve, p_prime: &CurvePoint, s: usize) -> Result<Poly> {
    let f = &e.field;
    if let Ok(exp) = taylor_coefficients(e, p_prime, s) {
        let (alpha, beta_prime) = p_prime.xy().expect("affine");
        let tpoly = Poly::x_minus(f, alpha);
        let mut a = Poly::constant(f, f.neg(beta_prime));
        for (idx, c) in exp.coeffs.iter().enumerate() {
            a = a.add(f, &tpoly.pow(f, idx + 1).scale(f, &f.neg(c)));
        }
        return Ok(a);
    }
    numerator_shift_by_solve(e, p_prime, s)
}

/// Chord numerator Y + B(X) through -P and -Q (distinct x-coordinates):
/// B(X) = (Δβ/Δα + a1)·X + (β_P + a1α_P + a3) - (Δβ/Δα + a1)·α_P.
fn chord_numerator(
    e: &EllipticCurve,
    p: &CurvePoint,
    q: &CurvePoint,
) -> Result<Poly> {
    let f = &e.field;
    let (ap, bp) = p.xy().ok_or(Error::UnsupportedPoint)?;
    let (aq, bq) = q.xy().ok_or(Error::UnsupportedPoint)?;
    let slope = f.add(&f.div(&f.sub(bq, bp), &f.sub(aq, ap))?, &e.a1);
    let intercept = f.sub(
        &f.add(bp, &f.add(&f.mul(&e.a1, ap), &e.a3)),
        &f.mul(&slope, ap),
    );
    Ok(Poly::from_coeffs(f, vec![intercept, slope]))
}

/// Theorem-style basis of L(Σ k_i·P_i) for distinct affine points in the
/// given order: {1} ∪ {f_{i,s}} ∪ {g_i} with g_i linking consecutive
/// points by a chord through -P_i and -P_{i+1} (or 1/(X - α) for a
/// conjugate pair).
pub fn multipoint_basis(e: &EllipticCurve, points: &[(CurvePoint, i64)]) -> Result<RRBasis> {
    let parts = multipoint_functions(e, points)?;
    let divisor = Divisor::new(e, points)?;
    let mut functions = vec![CurveFunction::one(e)];
    functions.extend(parts);
    debug_assert_eq!(functions.len() as i64, divisor.degree());
    Ok(RRBasis { divisor, functions, construction: Construction::Multipoint })
}

/// The non-constant Theorem-style functions; they all satisfy
/// v_{P∞}(f) ≥ 1, so they also span L(G0 - P∞).
fn multipoint_functions(
    e: &EllipticCurve,
    points: &[(CurvePoint, i64)],
) -> Result<Vec<CurveFunction>> {
    let f = &e.field;
    if points.is_empty() {
        return Err(Error::InvalidDegree(0));
    }
    for (i, (p, k)) in points.iter().enumerate() {
        if p.is_infinity() {
            return Err(Error::UnsupportedPoint);
        }
        if *k < 1 {
            return Err(Error::InvalidDegree(*k));
        }
        if !e.is_on_curve(p)? {
            return Err(Error::PointNotOnCurve);
        }
        if points[i + 1..].iter().any(|(q, _)| q == p) {
            return Err(Error::DuplicatePoints);
        }
    }
    let mut out = Vec::new();
    // single-point tails f_{i,s} = (Y + A_{i,s})/(X - α_i)^s
    for (p, k) in points {
        let (alpha, _) = p.xy().unwrap();
        let p_prime = e.negate(p)?;
        for s in 2..=(*k as usize) {
            let a_s = numerator_shift_auto(e, &p_prime, s)?;
            let den = Poly::x_minus(f, alpha).pow(f, s);
            let fs = CurveFunction::from_parts(e, a_s, Poly::one(f), den)?;
            debug_assert_eq!(fs.valuation(p)?, -(s as i64));
            out.push(fs);
        }
    }
    // chain functions g_i between consecutive points
    for w in points.windows(2) {
        let (p, q) = (&w[0].0, &w[1].0);
        let (ap, _) = p.xy().unwrap();
        let (aq, _) = q.xy().unwrap();
        let g = if ap == aq {
            CurveFunction::from_parts(e, Poly::one(f), Poly::zero(), Poly::x_minus(f, ap))?
        } else {
            let b = chord_numerator(e, p, q)?;
            let den = Poly::x_minus(f, ap).mul(f, &Poly::x_minus(f, aq));
            CurveFunction::from_parts(e, b, Poly::one(f), den)?
        };
        out.push(g);
    }
    Ok(out)
}

/// Basis of L(G0 - P∞) for effective multipoint G0: the Theorem-style
/// functions without the constant (each has a zero at infinity).
pub fn multipoint_minus_infinity_basis(
    e: &EllipticCurve,
    points: &[(CurvePoint, i64)],
) -> Result<RRBasis> {
    let functions = multipoint_functions(e, points)?;
    if functions.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let divisor = Divisor::new(e, points)?
        .sub(&Divisor::single(e, CurvePoint::Infinity, 1)?)?;
    debug_assert_eq!(functions.len() as i64, divisor.degree());
    for g in &functions {
        debug_assert!(g.valuation(&CurvePoint::Infinity)? >= 1);
    }
    Ok(RRBasis {
        divisor,
        functions,
        construction: Construction::MultipointMinusInfinity,
    })
}

/// Orbit data for the quasi-cyclic basis: representatives with
/// multiplicities t_z ≥ 1.
pub struct OrbitSpec {
    pub representative: CurvePoint,
    pub multiplicity: i64,
}

/// Basis of L(Σ_z t_z·Orb(Q_z) - c·P∞) for an automorphism of order
/// ℓ ∈ {2, 4, 6}: monomials X^i Y^j with 2i + 3j ≤ ℓ·Σt_z - c over the
/// product Π_z Π_ρ (X - x(Q_{z,ρ}))^{t_z}, one factor per conjugate pair.
///
/// Order-3 automorphisms are rejected: points sharing an x-coordinate
/// then land in different orbits, so the product form breaks down; the
/// multipoint construction covers that case.
pub fn qc_orbit_basis(
    e: &EllipticCurve,
    sigma: &crate::automorphism::CurveAutomorphism,
    orbits: &[OrbitSpec],
    c: i64,
) -> Result<RRBasis> {
    let f = &e.field;
    let ell = sigma.order();
    if !matches!(ell, 2 | 4 | 6) {
        return Err(Error::UnsupportedOrder(ell));
    }
    if orbits.is_empty() {
        return Err(Error::InvalidDegree(0));
    }
    let mut orbit_points: Vec<Vec<CurvePoint>> = Vec::new();
    for spec in orbits {
        if spec.multiplicity < 1 {
            return Err(Error::InvalidDegree(spec.multiplicity));
        }
        // the exclusion set applies to the representative; the rest of
        // the orbit is constrained structurally (full size, conjugate
        // x-pairing) below
        let (x, y) = spec.representative.xy().ok_or(Error::BadOrbitPoint)?;
        if x.is_zero() || y.is_zero() || e.torsion_test(&spec.representative, 3)? {
            return Err(Error::BadOrbitPoint);
        }
        let orb = sigma.orbit(&spec.representative)?;
        if orb.len() != ell {
            return Err(Error::BadOrbitPoint);
        }
        for prev in &orbit_points {
            if orb.iter().any(|q| prev.contains(q)) {
                return Err(Error::OrbitCollision);
            }
        }
        orbit_points.push(orb);
    }
    let total_t: i64 = orbits.iter().map(|o| o.multiplicity).sum();
    let bound = ell as i64 * total_t - c;
    if c < 0 || bound < 0 {
        return Err(Error::InvalidDegree(c));
    }
    if bound == 0 {
        return Err(Error::EmptyBasis);
    }
    // one linear factor per conjugate pair: ℓ/2 distinct x per orbit
    let mut den = Poly::one(f);
    let mut divisor = Divisor::zero(e);
    for (spec, orb) in orbits.iter().zip(&orbit_points) {
        let mut xs: Vec<FieldElement> = Vec::new();
        for q in orb {
            let (x, _) = q.xy().unwrap();
            if !xs.contains(x) {
                xs.push(x.clone());
            }
            divisor = divisor.add(&Divisor::single(e, q.clone(), spec.multiplicity)?)?;
        }
        if xs.len() != ell / 2 {
            return Err(Error::BadOrbitPoint);
        }
        for x in &xs {
            den = den.mul(f, &Poly::x_minus(f, x).pow(f, spec.multiplicity as usize));
        }
    }
    if c > 0 {
        divisor = divisor.sub(&Divisor::single(e, CurvePoint::Infinity, c)?)?;
    }
    let functions: Vec<CurveFunction> = monomial_exponents(bound)
        .into_iter()
        .map(|(i, j)| CurveFunction::monomial_over(e, i, j, den.clone()))
        .collect::<Result<_>>()?;
    debug_assert_eq!(functions.len() as i64, divisor.degree());
    let construction = if c > 0 {
        Construction::QcOrbitMinusInfinity
    } else {
        Construction::QcOrbit
    };
    Ok(RRBasis { divisor, functions, construction })
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub membership: Vec<bool>,
    pub rank: usize,
    pub expected_dim: i64,
    pub dimension_ok: bool,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.membership.iter().all(|&m| m)
            && self.rank as i64 == self.expected_dim
            && self.dimension_ok
    }
}

/// Checks (a) every function passes its pole certificate against the
/// divisor, (b) the evaluation matrix on usable points has full rank,
/// (c) the count equals deg(G). Needs at least |functions| + 2 usable
/// evaluation points (finite for every basis function, outside supp G).
pub fn verify_basis(basis: &RRBasis, eval_points: &[CurvePoint]) -> Result<VerifyReport> {
    let e = basis.divisor.curve().clone();
    let f = &e.field;
    let membership: Vec<bool> = basis
        .functions
        .iter()
        .map(|g| g.pole_certificate(&basis.divisor))
        .collect::<Result<_>>()?;
    let needed = basis.functions.len() + 2;
    let mut usable: Vec<&CurvePoint> = Vec::new();
    for p in eval_points {
        if p.is_infinity() || basis.divisor.multiplicity(p) != 0 {
            continue;
        }
        if basis
            .functions
            .iter()
            .all(|g| g.valuation(p).map(|v| v >= 0).unwrap_or(false))
        {
            usable.push(p);
        }
        if usable.len() >= needed {
            break;
        }
    }
    if usable.len() < needed {
        return Err(Error::InsufficientPoints { needed, got: usable.len() });
    }
    let rows: Vec<Vec<FieldElement>> = basis
        .functions
        .iter()
        .map(|g| {
            usable
                .iter()
                .map(|p| g.evaluate(p))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let rank = if rows.is_empty() { 0 } else { Matrix::new(rows)?.rank(f) };
    let expected_dim = basis.divisor.degree();
    let dimension_ok = expected_dim < 1 || basis.functions.len() as i64 == expected_dim;
    Ok(VerifyReport { membership, rank, expected_dim, dimension_ok })
}
