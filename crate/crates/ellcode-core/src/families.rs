//! Elliptic-code family constructors: evaluation codes from Riemann-Roch
//! bases, quasi-cyclic subfield subcodes of dual elliptic codes, and the
//! Goppa-like families (one-point, multipoint, quasi-cyclic).

use alloc::string::String;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};

use crate::automorphism::CurveAutomorphism;
use crate::code::{LinearCode, SubfieldSubcode};
use crate::matrix::Matrix;
use crate::curve::{CurvePoint, EllipticCurve};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::function::CurveFunction;
use crate::poly::Poly;
use crate::riemann_roch::{
    basis_at_infinity, multipoint_basis, multipoint_minus_infinity_basis, qc_orbit_basis,
    OrbitSpec, RRBasis,
};

/// Validates an evaluation support: distinct affine rational points
/// disjoint from supp(G).
fn check_support(
    e: &EllipticCurve,
    d_points: &[CurvePoint],
    g: &Divisor,
) -> Result<()> {
    for (i, p) in d_points.iter().enumerate() {
        if p.is_infinity() {
            return Err(Error::UnsupportedPoint);
        }
        if !e.is_on_curve(p)? {
            return Err(Error::PointNotOnCurve);
        }
        if d_points[i + 1..].contains(p) {
            return Err(Error::DuplicatePoints);
        }
        if g.multiplicity(p) != 0 {
            return Err(Error::SupportOverlap);
        }
    }
    Ok(())
}

/// The evaluation code C_L(D, G): generator row i is
/// (f_i(P_1), …, f_i(P_n)) over the basis of L(G). Requires
/// 0 < deg(G) < n; the dimension then equals deg(G).
pub fn evaluation_code(
    e: &EllipticCurve,
    d_points: &[CurvePoint],
    basis: &RRBasis,
) -> Result<LinearCode> {
    let f = &e.field;
    let n = d_points.len();
    let degree = basis.divisor.degree();
    if degree < 1 || degree >= n as i64 {
        return Err(Error::DegreeOutOfRange);
    }
    check_support(e, d_points, &basis.divisor)?;
    let rows: Vec<Vec<FieldElement>> = basis
        .functions
        .iter()
        .map(|g| d_points.iter().map(|p| g.evaluate(p)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let code = LinearCode::from_rows(f, rows, n)?;
    debug_assert_eq!(code.dim() as i64, degree);
    Ok(code)
}

/// Coordinate action of σ on an evaluation code:
/// (f(P_1), …, f(P_n)) ↦ (f(σ(P_1)), …, f(σ(P_n))). D must be σ-invariant
/// as a set.
pub fn code_automorphism_action(
    code: &LinearCode,
    sigma: &CurveAutomorphism,
    d_points: &[CurvePoint],
) -> Result<LinearCode> {
    let f = code.field();
    // permutation: new column i reads old column at position of σ(P_i)
    let mut perm = Vec::with_capacity(d_points.len());
    for p in d_points {
        let img = sigma.apply(p)?;
        let pos = d_points
            .iter()
            .position(|q| *q == img)
            .ok_or(Error::NotInvariant)?;
        perm.push(pos);
    }
    let rows: Vec<Vec<FieldElement>> = code
        .generator()
        .rows
        .iter()
        .map(|r| perm.iter().map(|&j| r[j].clone()).collect())
        .collect();
    LinearCode::from_rows(f, rows, d_points.len())
}

/// Seeded sampling of `count` disjoint full orbits, avoiding supp(avoid);
/// returns the support in orbit order (P_0, σP_0, …, σ^{ℓ-1}P_0, P_1, …).
pub fn sample_orbit_support(
    e: &EllipticCurve,
    sigma: &CurveAutomorphism,
    count: usize,
    avoid: &Divisor,
    seed: u64,
) -> Result<Vec<CurvePoint>> {
    let ell = sigma.order();
    let mut candidates: Vec<CurvePoint> = e
        .enumerate_points()?
        .into_iter()
        .filter(|p| !p.is_infinity())
        .collect();
    // Fisher-Yates driven by the seed
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for i in (1..candidates.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        candidates.swap(i, j);
    }
    let mut support: Vec<CurvePoint> = Vec::with_capacity(count * ell);
    let mut taken = 0usize;
    for p in candidates {
        if taken == count {
            break;
        }
        if support.contains(&p) {
            continue;
        }
        let orbit = sigma.orbit(&p)?;
        if orbit.len() != ell {
            continue;
        }
        if orbit
            .iter()
            .any(|q| avoid.multiplicity(q) != 0 || support.contains(q))
        {
            continue;
        }
        support.extend(orbit);
        taken += 1;
    }
    if taken < count {
        return Err(Error::InsufficientPoints {
            needed: count * ell,
            got: support.len(),
        });
    }
    Ok(support)
}

/// Divisor form for the QC-SSDE construction.
pub enum SsdeDivisorForm {
    /// G = k·P∞ with the monomial basis.
    AtInfinity(i64),
    /// Orbit-shaped G = Σ t_z·Orb(Q_z) with the product-denominator basis.
    Orbits(Vec<(CurvePoint, i64)>),
}

#[derive(Debug)]
pub struct QcSsdeOutput {
    pub d_points: Vec<CurvePoint>,
    pub basis: RRBasis,
    /// C_L(D, G) over GF(p^m).
    pub evaluation: LinearCode,
    /// Parity-check matrix of the QC-SSDE code over GF(p^d), i.e. the
    /// eliminated base-field expansion of the generator of C_L(D, G).
    pub parity: Matrix,
    /// The QC-SSDE code (C_L(D, G)^⊥ restricted to GF(p^d)).
    pub code: LinearCode,
}

/// Quasi-cyclic subfield subcode of a dual elliptic code: samples n/ℓ
/// disjoint full orbits for D (seeded), evaluates the basis of L(G),
/// expands the resulting generator over the subfield basis and eliminates.
pub fn qc_ssde(
    e: &EllipticCurve,
    sigma: &CurveAutomorphism,
    g_form: SsdeDivisorForm,
    orbit_count: usize,
    subfield_degree: usize,
    seed: u64,
) -> Result<QcSsdeOutput> {
    let basis = match g_form {
        SsdeDivisorForm::AtInfinity(k) => basis_at_infinity(e, k)?,
        SsdeDivisorForm::Orbits(specs) => {
            let orbit_specs: Vec<OrbitSpec> = specs
                .into_iter()
                .map(|(p, t)| OrbitSpec { representative: p, multiplicity: t })
                .collect();
            qc_orbit_basis(e, sigma, &orbit_specs, 0)?
        }
    };
    let d_points = sample_orbit_support(e, sigma, orbit_count, &basis.divisor, seed)?;
    let evaluation = evaluation_code(e, &d_points, &basis)?;
    let sub: SubfieldSubcode = evaluation.dual().subfield_subcode(subfield_degree)?;
    let mut code = sub.code;
    code.provenance = String::from("qc-ssde");
    Ok(QcSsdeOutput {
        d_points,
        basis,
        evaluation,
        parity: sub.parity,
        code,
    })
}

/// Divisor form for the Goppa-like constructions.
pub enum GoppaDivisorForm {
    /// Effective multipoint G′ (ordered points with multiplicities ≥ 1).
    Effective(Vec<(CurvePoint, i64)>),
    /// G′ = s·P∞.
    AtInfinity(i64),
}

#[derive(Debug)]
pub struct GoppaLikeOutput {
    /// C = C_L(D, G′ + div(g)) = ev_D((1/g)·L(G′)) over GF(p^m).
    pub inner: LinearCode,
    /// Γ(D, G′, g) = (C^⊥)|_{GF(p^d)}.
    pub code: LinearCode,
    pub parity: Matrix,
    pub basis: RRBasis,
}

/// Goppa-like code Γ(D, G′, g): the basis of L(G′) is scaled by 1/g,
/// evaluated on D, dualized and restricted to the subfield. Requires
/// g ∉ L(G′) and supp(D) disjoint from supp(G′) ∪ supp(div g).
pub fn goppa_like(
    e: &EllipticCurve,
    d_points: &[CurvePoint],
    g_prime: GoppaDivisorForm,
    g_fn: &CurveFunction,
    subfield_degree: usize,
) -> Result<GoppaLikeOutput> {
    let basis = match g_prime {
        GoppaDivisorForm::Effective(points) => multipoint_basis(e, &points)?,
        GoppaDivisorForm::AtInfinity(s) => basis_at_infinity(e, s)?,
    };
    if g_fn.is_zero() || g_fn.pole_certificate(&basis.divisor)? {
        return Err(Error::FunctionInSpace);
    }
    let div_g = g_fn.principal_divisor()?;
    let avoid = basis.divisor.add(&div_g)?;
    for p in d_points {
        if avoid.multiplicity(p) != 0 {
            return Err(Error::SupportOverlap);
        }
    }
    scaled_goppa_output(e, d_points, basis, g_fn, subfield_degree)
}

fn scaled_goppa_output(
    e: &EllipticCurve,
    d_points: &[CurvePoint],
    basis: RRBasis,
    g_fn: &CurveFunction,
    subfield_degree: usize,
) -> Result<GoppaLikeOutput> {
    let f = &e.field;
    let g_inv = g_fn.inv()?;
    let scaled: Vec<CurveFunction> = basis
        .functions
        .iter()
        .map(|h| h.mul(&g_inv))
        .collect::<Result<_>>()?;
    let n = d_points.len();
    let degree = basis.divisor.degree();
    if degree < 1 || degree >= n as i64 {
        return Err(Error::DegreeOutOfRange);
    }
    for (i, p) in d_points.iter().enumerate() {
        if p.is_infinity() || !e.is_on_curve(p)? {
            return Err(Error::UnsupportedPoint);
        }
        if d_points[i + 1..].contains(p) {
            return Err(Error::DuplicatePoints);
        }
    }
    let rows: Vec<Vec<FieldElement>> = scaled
        .iter()
        .map(|h| d_points.iter().map(|p| h.evaluate(p)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let inner = LinearCode::from_rows(f, rows, n)?;
    debug_assert_eq!(inner.dim() as i64, degree);
    let sub = inner.dual().subfield_subcode(subfield_degree)?;
    let mut code = sub.code;
    code.provenance = String::from("goppa-like");
    Ok(GoppaLikeOutput { inner, code, parity: sub.parity, basis })
}

/// The zero-divisor route to the one-point Goppa-like code: for
/// g ∈ L((s+1)P∞) \ L(sP∞) with rational zero divisor G0 = (g)_0, builds
/// C_L(D, G0 - P∞) directly from the multipoint functions with a zero at
/// infinity. The row space equals the Definition-route inner code.
pub fn goppa_like_zero_divisor_form(
    e: &EllipticCurve,
    d_points: &[CurvePoint],
    g_fn: &CurveFunction,
    subfield_degree: usize,
) -> Result<GoppaLikeOutput> {
    let f = &e.field;
    let g0 = g_fn.zero_divisor()?;
    let points: Vec<(CurvePoint, i64)> = g0.iter().map(|(p, m)| (p.clone(), m)).collect();
    let basis = multipoint_minus_infinity_basis(e, &points)?;
    let n = d_points.len();
    let degree = basis.divisor.degree();
    if degree < 1 || degree >= n as i64 {
        return Err(Error::DegreeOutOfRange);
    }
    for p in d_points {
        if g0.multiplicity(p) != 0 {
            return Err(Error::SupportOverlap);
        }
    }
    let rows: Vec<Vec<FieldElement>> = basis
        .functions
        .iter()
        .map(|h| d_points.iter().map(|p| h.evaluate(p)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let inner = LinearCode::from_rows(f, rows, n)?;
    let sub = inner.dual().subfield_subcode(subfield_degree)?;
    let mut code = sub.code;
    code.provenance = String::from("goppa-like-zero-divisor");
    Ok(GoppaLikeOutput { inner, code, parity: sub.parity, basis })
}

/// One orbit of the quasi-cyclic Goppa-like multiplier: multiplicity t_z
/// in G′ (0 when the orbit only feeds the multiplier) and exponent t_z⋆
/// in g.
pub struct QcGoppaOrbit {
    pub representative: CurvePoint,
    pub t: i64,
    pub t_star: i64,
}

/// Quasi-cyclic Goppa-like code: G′ in orbit form and
/// g = Π_z Π_ρ (X - x(Q_{z,ρ}))^{t_z⋆}, with the case split
/// t_z⋆ = t_z + 1 on orbits inside supp(G′) and t_z⋆ ≥ 1 elsewhere.
pub fn qc_goppa_like(
    e: &EllipticCurve,
    sigma: &CurveAutomorphism,
    orbits: &[QcGoppaOrbit],
    d_points: &[CurvePoint],
    subfield_degree: usize,
) -> Result<GoppaLikeOutput> {
    let f = &e.field;
    let ell = sigma.order();
    if !matches!(ell, 2 | 4 | 6) {
        return Err(Error::UnsupportedOrder(ell));
    }
    // case split on the exponents
    for o in orbits {
        let ok = if o.t >= 1 { o.t_star == o.t + 1 } else { o.t == 0 && o.t_star >= 1 };
        if !ok {
            return Err(Error::ExponentCaseViolated);
        }
    }
    let g_specs: Vec<OrbitSpec> = orbits
        .iter()
        .filter(|o| o.t >= 1)
        .map(|o| OrbitSpec { representative: o.representative.clone(), multiplicity: o.t })
        .collect();
    if g_specs.is_empty() {
        return Err(Error::InvalidDegree(0));
    }
    let basis = qc_orbit_basis(e, sigma, &g_specs, 0)?;
    // multiplier g from the x-coordinates of every orbit
    let mut g_poly = Poly::one(f);
    for o in orbits {
        let orbit = sigma.orbit(&o.representative)?;
        if orbit.len() != ell {
            return Err(Error::BadOrbitPoint);
        }
        let mut xs: Vec<FieldElement> = Vec::new();
        for q in &orbit {
            let (x, _) = q.xy().ok_or(Error::BadOrbitPoint)?;
            if !xs.contains(x) {
                xs.push(x.clone());
            }
        }
        if xs.len() != ell / 2 {
            return Err(Error::BadOrbitPoint);
        }
        for x in &xs {
            g_poly = g_poly.mul(f, &Poly::x_minus(f, x).pow(f, o.t_star as usize));
        }
    }
    let g_fn = CurveFunction::from_parts(e, g_poly, Poly::zero(), Poly::one(f))?;
    if g_fn.pole_certificate(&basis.divisor)? {
        return Err(Error::FunctionInSpace);
    }
    let div_g = g_fn.principal_divisor()?;
    let avoid = basis.divisor.add(&div_g)?;
    for p in d_points {
        if avoid.multiplicity(p) != 0 {
            return Err(Error::SupportOverlap);
        }
    }
    scaled_goppa_output(e, d_points, basis, &g_fn, subfield_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::list_automorphisms;
    use crate::field::ExtField;
    use crate::riemann_roch::OnePointMethod;

    fn gf(p: u64, m: usize) -> ExtField {
        ExtField::new(p, m, None).unwrap()
    }

    fn curve_gf16() -> EllipticCurve {
        let f = gf(2, 4);
        // ordinary curve y² + xy = x³ + a6 with a6 = generator
        EllipticCurve::char2_ordinary(f.clone(), f.zero(), f.gen()).unwrap()
    }

    #[test]
    fn evaluation_code_from_monomial_basis() {
        let e = curve_gf16();
        let pts = e.enumerate_points().unwrap();
        let k = 4i64;
        let basis = basis_at_infinity(&e, k).unwrap();
        let d_points: Vec<CurvePoint> =
            pts.iter().filter(|p| !p.is_infinity()).take(10).cloned().collect();
        let c = evaluation_code(&e, &d_points, &basis).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(c.len(), 10);
        // Singleton-type bound from the construction: d ≥ n - deg G
        let d = c.min_distance_exhaustive().unwrap();
        assert!(d >= 10 - 4);
    }

    #[test]
    fn degree_one_gives_dimension_one() {
        let f = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.zero(), f.one()).unwrap();
        let pts = e.enumerate_points().unwrap();
        let basis = basis_at_infinity(&e, 1).unwrap();
        let d_points: Vec<CurvePoint> =
            pts.iter().filter(|p| !p.is_infinity()).take(5).cloned().collect();
        let c = evaluation_code(&e, &d_points, &basis).unwrap();
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn support_overlap_rejected() {
        let f = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.zero(), f.one()).unwrap();
        let p = CurvePoint::affine(f.from_int(2), f.from_int(3));
        let basis =
            crate::riemann_roch::one_point_basis(&e, &p, 2, OnePointMethod::Taylor).unwrap();
        let pts = e.enumerate_points().unwrap();
        let mut d_points = alloc::vec![p.clone()];
        d_points.extend(
            pts.iter()
                .filter(|q| !q.is_infinity() && **q != p)
                .take(4)
                .cloned(),
        );
        assert_eq!(
            evaluation_code(&e, &d_points, &basis).unwrap_err(),
            Error::SupportOverlap
        );
    }

    #[test]
    fn automorphism_action_preserves_invariant_code() {
        let e = curve_gf16();
        let auts = list_automorphisms(&e).unwrap();
        let sigma = auts.iter().find(|a| a.order() == 2).unwrap();
        let basis = basis_at_infinity(&e, 3).unwrap();
        let d_points =
            sample_orbit_support(&e, sigma, 4, &basis.divisor, 7).unwrap();
        let c = evaluation_code(&e, &d_points, &basis).unwrap();
        // identity fixes the code trivially
        let id = crate::automorphism::CurveAutomorphism::identity(&e);
        let same = code_automorphism_action(&c, &id, &d_points).unwrap();
        assert!(same.same_code(&c));
        // σ fixes D as a set and G = kP∞, so the permuted code is the code
        let moved = code_automorphism_action(&c, sigma, &d_points).unwrap();
        assert!(moved.same_code(&c));
        // a non-invariant support is flagged
        let partial: Vec<CurvePoint> = d_points[..d_points.len() - 1].to_vec();
        let c2 = evaluation_code(&e, &partial, &basis).unwrap();
        assert_eq!(
            code_automorphism_action(&c2, sigma, &partial).unwrap_err(),
            Error::NotInvariant
        );
    }

    #[test]
    fn qc_ssde_infinity_form() {
        let e = curve_gf16();
        let auts = list_automorphisms(&e).unwrap();
        let sigma = auts.iter().find(|a| a.order() == 2).unwrap();
        let out = qc_ssde(&e, sigma, SsdeDivisorForm::AtInfinity(3), 4, 1, 42).unwrap();
        assert_eq!(out.d_points.len(), 8);
        assert_eq!(out.evaluation.dim(), 3);
        // every subcode codeword, embedded into GF(16), is orthogonal to
        // all evaluation rows (it lies in the dual of C_L(D, G))
        let f = &e.field;
        for crow in &out.code.generator().rows {
            let lifted: Vec<FieldElement> = crow
                .iter()
                .map(|v| f.from_int(v.coeffs[0] as i64))
                .collect();
            for grow in &out.evaluation.generator().rows {
                let mut acc = f.zero();
                for (a, b) in lifted.iter().zip(grow) {
                    acc = f.add(&acc, &f.mul(a, b));
                }
                assert!(acc.is_zero());
            }
        }
        assert!(out.code.field().order() == 2);
        // the subcode is quasi-cyclic of order 2
        assert!(out.code.is_quasi_cyclic(2).unwrap());
        // dimension bound k̃ ≥ n - m(n - k) for the dual code
        let n = 8i64;
        let m = 4i64;
        let k_dual = n - out.evaluation.dim() as i64;
        assert!(out.code.dim() as i64 >= n - m * (n - k_dual));
        // seeded reproducibility
        let again = qc_ssde(&e, sigma, SsdeDivisorForm::AtInfinity(3), 4, 1, 42).unwrap();
        assert_eq!(again.d_points, out.d_points);
        assert!(again.code.same_code(&out.code));
    }

    #[test]
    fn qc_ssde_orbit_form() {
        let e = curve_gf16();
        let auts = list_automorphisms(&e).unwrap();
        let sigma = auts.iter().find(|a| a.order() == 2).unwrap();
        // pick an admissible orbit representative for G
        let pts = e.enumerate_points().unwrap();
        let q = pts
            .iter()
            .find(|p| {
                p.xy()
                    .map(|(x, y)| !x.is_zero() && !y.is_zero())
                    .unwrap_or(false)
                    && !e.torsion_test(p, 3).unwrap()
                    && sigma.orbit(p).unwrap().len() == 2
            })
            .cloned()
            .unwrap();
        let out = qc_ssde(
            &e,
            sigma,
            SsdeDivisorForm::Orbits(alloc::vec![(q, 1)]),
            4,
            1,
            5,
        )
        .unwrap();
        assert_eq!(out.evaluation.dim(), 2);
        assert!(out.code.is_quasi_cyclic(2).unwrap());
        // block-circulant form exists under the orbit column grouping
        let id: Vec<usize> = (0..out.code.len()).collect();
        assert!(out.code.block_circulant_form(2, &id).unwrap().is_some());
    }

    #[test]
    fn goppa_like_rejects_function_in_space() {
        let f = gf(7, 1);
        let e = EllipticCurve::short_weierstrass(f.clone(), f.zero(), f.one()).unwrap();
        let pts = e.enumerate_points().unwrap();
        let d_points: Vec<CurvePoint> =
            pts.iter().filter(|p| !p.is_infinity()).take(6).cloned().collect();
        // g = 1 ∈ L(sP∞) always
        let one = CurveFunction::one(&e);
        assert_eq!(
            goppa_like(&e, &d_points, GoppaDivisorForm::AtInfinity(2), &one, 1).unwrap_err(),
            Error::FunctionInSpace
        );
    }

    #[test]
    fn goppa_like_two_routes_agree() {
        let e = curve_gf16();
        let f = &e.field;
        // s = 1, g = X - α for a rational x with two points above it:
        // g ∈ L(2P∞) \ L(1P∞) and (g)_0 = P + (-P)
        let pts = e.enumerate_points().unwrap();
        let p = pts
            .iter()
            .find(|p| {
                p.xy().is_some() && crate::function::points_above(&e, p.xy().unwrap().0).len() == 2
            })
            .unwrap();
        let (alpha, _) = p.xy().unwrap();
        let g_fn = CurveFunction::from_parts(
            &e,
            Poly::x_minus(f, alpha),
            Poly::zero(),
            Poly::one(f),
        )
        .unwrap();
        let d_points: Vec<CurvePoint> = pts
            .iter()
            .filter(|q| !q.is_infinity() && q.xy().unwrap().0 != alpha)
            .take(9)
            .cloned()
            .collect();
        let a = goppa_like(&e, &d_points, GoppaDivisorForm::AtInfinity(1), &g_fn, 1).unwrap();
        let b = goppa_like_zero_divisor_form(&e, &d_points, &g_fn, 1).unwrap();
        assert!(a.inner.same_code(&b.inner), "inner row spaces differ");
        assert!(a.code.same_code(&b.code), "restricted codes differ");
    }

    #[test]
    fn qc_goppa_like_quasi_cyclic() {
        let e = curve_gf16();
        let auts = list_automorphisms(&e).unwrap();
        let sigma = auts.iter().find(|a| a.order() == 2).unwrap();
        let pts = e.enumerate_points().unwrap();
        let q = pts
            .iter()
            .find(|p| {
                p.xy()
                    .map(|(x, y)| !x.is_zero() && !y.is_zero())
                    .unwrap_or(false)
                    && !e.torsion_test(p, 3).unwrap()
                    && sigma.orbit(p).unwrap().len() == 2
            })
            .cloned()
            .unwrap();
        let orbit = QcGoppaOrbit { representative: q.clone(), t: 1, t_star: 2 };
        // D avoids the orbit (it is in supp G′ and supp div g)
        let g0 = Divisor::single(&e, q.clone(), 1)
            .unwrap()
            .add(&Divisor::single(&e, e.negate(&q).unwrap(), 1).unwrap())
            .unwrap();
        let d_points = sample_orbit_support(&e, sigma, 4, &g0, 3).unwrap();
        let out = qc_goppa_like(&e, sigma, &[orbit], &d_points, 1).unwrap();
        assert!(out.inner.is_quasi_cyclic(2).unwrap());
        assert!(out.code.is_quasi_cyclic(2).unwrap());
        // below the case-split minimum is rejected
        let bad = QcGoppaOrbit { representative: q, t: 1, t_star: 1 };
        assert_eq!(
            qc_goppa_like(&e, sigma, &[bad], &d_points, 1).unwrap_err(),
            Error::ExponentCaseViolated
        );
    }
}
