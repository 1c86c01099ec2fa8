//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! Elements are stored dense in the power basis as vectors of residues
//! mod p (index i holds the coefficient of basis power i). There are no
//! discrete-log tables: fields in scope are small and auditability wins.
//! The canonical tower is GF(p) ⊂ GF(p^m); a composite base field
//! q = p^w is addressed by passing subfield degree d = w to the subfield
//! operations.
//!
//! All operations go through a [`ExtField`] context; elements themselves
//! are plain coefficient vectors. Field descriptors and elements are
//! immutable, so everything here is safe to use concurrently.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The prime field GF(p). Primality is verified at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of GF(p^m): `coeffs[i]` is the coefficient of the i-th power
/// of the basis generator, each in `[0, p)`. Zero is all-zero coefficients;
/// one is `(1, 0, …, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    pub coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// GF(p^m) presented as GF(p)[X]/(modulus) with a monic irreducible
/// modulus of degree m (verified at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    m: usize,
    /// Monic, little-endian, length m + 1.
    modulus: Vec<u64>,
}

/// Builds GF(p^m). When `modulus` is omitted the lexicographically smallest
/// monic irreducible of degree m is found by enumeration, so runs are
/// reproducible.
pub fn build_ext_field(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<ExtField> {
    ExtField::new(p, m, modulus)
}

impl ExtField {
    pub fn new(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if m < 1 {
            return Err(Error::DegreeMismatch { expected: 1, got: m });
        }
        let modulus = match modulus {
            Some(mv) => {
                let mv: Vec<u64> = mv.iter().map(|&c| c % p).collect();
                if mv.len() != m + 1 || mv[m] != 1 {
                    return Err(Error::DegreeMismatch { expected: m + 1, got: mv.len() });
                }
                if !poly_is_irreducible(&mv, p) {
                    return Err(Error::ReducibleModulus);
                }
                mv
            }
            None => find_irreducible(p, m),
        };
        Ok(ExtField { base, m, modulus })
    }

    pub fn p(&self) -> u64 {
        self.base.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// p^m as a u128.
    pub fn order(&self) -> u128 {
        let mut o = 1u128;
        for _ in 0..self.m {
            o *= self.base.p as u128;
        }
        o
    }

    pub fn characteristic(&self) -> u64 {
        self.base.p
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.m] }
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.m];
        c[0] = 1;
        FieldElement { coeffs: c }
    }

    /// The basis generator x (for m = 1 this is the residue of X mod the
    /// linear modulus, i.e. a prime-field constant).
    pub fn gen(&self) -> FieldElement {
        if self.m == 1 {
            // X ≡ -c0 mod (X + c0)
            let c0 = self.modulus[0];
            return FieldElement { coeffs: vec![(self.base.p - c0) % self.base.p] };
        }
        let mut c = vec![0; self.m];
        c[1] = 1;
        FieldElement { coeffs: c }
    }

    /// Embeds an integer (mod p) as a constant.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let p = self.base.p as i64;
        let r = ((v % p) + p) % p;
        let mut c = vec![0; self.m];
        c[0] = r as u64;
        FieldElement { coeffs: c }
    }

    /// Builds an element from little-endian coefficients over GF(p),
    /// padding with zeros up to length m.
    pub fn elem(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.m {
            return Err(Error::DegreeMismatch { expected: self.m, got: coeffs.len() });
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v % self.base.p).collect();
        c.resize(self.m, 0);
        Ok(FieldElement { coeffs: c })
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() != self.m || a.coeffs.iter().any(|&c| c >= self.base.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.base.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.base.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + p - y) % p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.base.p;
        let coeffs = a.coeffs.iter().map(|&x| (p - x) % p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.base.p;
        let m = self.m;
        // schoolbook product, then reduction by the monic modulus
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let sub = (c * self.modulus[i]) % p;
                prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
            }
        }
        prod.truncate(m);
        FieldElement { coeffs: prod }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on the
    /// coefficient polynomial and the modulus.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.base.p;
        // Euclid over GF(p)[X]: r0 = modulus, r1 = a
        let mut r0 = self.modulus.clone();
        let mut r1 = trim(a.coeffs.clone());
        let mut t0: Vec<u64> = vec![0];
        let mut t1: Vec<u64> = vec![1];
        while poly_deg(&r1) > 0 || r1[0] != 0 {
            let (q, r) = poly_divrem_p(&r0, &r1, p);
            let tq = poly_sub_p(&t0, &poly_mul_p(&q, &t1, p), p);
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = tq;
            if r1.iter().all(|&c| c == 0) {
                break;
            }
        }
        // r0 is now the gcd: a nonzero constant since the modulus is irreducible
        let g = r0[0];
        debug_assert!(poly_deg(&r0) == 0 && g != 0);
        let ginv = mod_inv(g, p);
        let mut c: Vec<u64> = t0.iter().map(|&v| (v * ginv) % p).collect();
        c.resize(self.m, 0);
        Ok(FieldElement { coeffs: c })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Frobenius endomorphism a ↦ a^p.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.base.p)
    }

    /// True iff `a` lies in the subfield GF(p^d), i.e. is fixed by the
    /// d-th Frobenius power.
    pub fn subfield_membership(&self, a: &FieldElement, d: usize) -> Result<bool> {
        self.check(a)?;
        if d == 0 || self.m % d != 0 {
            return Err(Error::InvalidSubfieldDegree { d, m: self.m });
        }
        let mut b = a.clone();
        for _ in 0..d {
            b = self.frobenius(&b);
        }
        Ok(b == *a)
    }

    /// Coordinates of `a` over the prime-field power basis; the inverse of
    /// [`ExtField::recompose`].
    pub fn decompose_over_prime(&self, a: &FieldElement) -> Vec<u64> {
        a.coeffs.clone()
    }

    pub fn recompose(&self, coords: &[u64]) -> Result<FieldElement> {
        self.elem(coords)
    }

    /// Index of an element in the enumeration order (base-p digits).
    pub fn index_of(&self, a: &FieldElement) -> u128 {
        let mut idx = 0u128;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.base.p as u128 + c as u128;
        }
        idx
    }

    pub fn from_index(&self, mut idx: u128) -> FieldElement {
        let p = self.base.p as u128;
        let mut c = vec![0u64; self.m];
        for item in c.iter_mut() {
            *item = (idx % p) as u64;
            idx /= p;
        }
        FieldElement { coeffs: c }
    }

    /// All field elements in index order.
    pub fn iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        *a == self.one()
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn poly_deg(v: &[u64]) -> usize {
    let mut d = v.len() - 1;
    while d > 0 && v[d] == 0 {
        d -= 1;
    }
    d
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

// --- dense polynomial helpers over GF(p), little-endian ---

fn poly_mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_sub_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    trim(out)
}

fn poly_divrem_p(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = poly_deg(b);
    let binv = mod_inv(b[db], p);
    let mut rem = a.to_vec();
    let da = poly_deg(&rem);
    if da < db {
        return (vec![0], trim(rem));
    }
    let mut quo = vec![0u64; da - db + 1];
    for k in (db..=da).rev() {
        let c = rem[k] * binv % p;
        if c == 0 {
            continue;
        }
        quo[k - db] = c;
        for i in 0..=db {
            let sub = c * b[i] % p;
            rem[k - db + i] = (rem[k - db + i] + p - sub) % p;
        }
    }
    (trim(quo), trim(rem))
}

fn poly_gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    while !(r1.len() == 1 && r1[0] == 0) {
        let (_, r) = poly_divrem_p(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    r0
}

fn poly_powmod_p(base: &[u64], mut e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_divrem_p(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_divrem_p(&poly_mul_p(&result, &b, p), f, p).1;
        }
        b = poly_divrem_p(&poly_mul_p(&b, &b, p), f, p).1;
        e >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic polynomial over GF(p).
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = poly_deg(f);
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^(p^m) ≡ x mod f
    let mut xp = x.clone();
    let mut powers = Vec::with_capacity(m);
    for _ in 0..m {
        xp = poly_powmod_p(&xp, p as u128, f, p);
        powers.push(xp.clone());
    }
    if poly_sub_p(&powers[m - 1], &x, p) != vec![0] {
        return false;
    }
    // gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m
    let mut mm = m;
    let mut r = 2;
    let mut prime_divs = Vec::new();
    while r * r <= mm {
        if mm % r == 0 {
            prime_divs.push(r);
            while mm % r == 0 {
                mm /= r;
            }
        }
        r += 1;
    }
    if mm > 1 {
        prime_divs.push(mm);
    }
    for r in prime_divs {
        let d = m / r;
        let diff = poly_sub_p(&powers[d - 1], &x, p);
        let g = poly_gcd_p(f, &diff, p);
        if poly_deg(&g) != 0 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over GF(p):
/// lower-coefficient vectors are enumerated as base-p integers with c0 the
/// least significant digit.
fn find_irreducible(p: u64, m: usize) -> Vec<u64> {
    let mut count = 1u128;
    for _ in 0..m {
        count *= p as u128;
    }
    for k in 0..count {
        let mut f = vec![0u64; m + 1];
        let mut idx = k;
        for item in f.iter_mut().take(m) {
            *item = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        f[m] = 1;
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_prime() {
        assert_eq!(PrimeField::new(6).unwrap_err(), Error::NotPrime(6));
        assert_eq!(ExtField::new(1, 1, None).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn gf2_trivial_carrier() {
        let f = ExtField::new(2, 1, None).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(&f.one(), &f.one()), f.zero());
    }

    #[test]
    fn gf16_modulus_x4_x_1() {
        let f = ExtField::new(2, 4, Some(vec![1, 1, 0, 0, 1])).unwrap();
        assert_eq!(f.order(), 16);
        // default search finds the same modulus
        let d = ExtField::new(2, 4, None).unwrap();
        assert_eq!(d.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn gf49_modulus_x2_plus_1() {
        let f = ExtField::new(7, 2, Some(vec![1, 0, 1])).unwrap();
        assert_eq!(f.order(), 49);
        let d = ExtField::new(7, 2, None).unwrap();
        assert_eq!(d.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // X^2 - 1 = (X-1)(X+1) over GF(7)
        let err = ExtField::new(7, 2, Some(vec![6, 0, 1])).unwrap_err();
        assert_eq!(err, Error::ReducibleModulus);
    }

    #[test]
    fn gf5_add() {
        let f = ExtField::new(5, 1, None).unwrap();
        let three = f.from_int(3);
        let four = f.from_int(4);
        assert_eq!(f.add(&three, &four), f.from_int(2));
    }

    #[test]
    fn gf16_x_times_x3() {
        // x * x^3 = x^4 = x + 1 mod x^4 + x + 1
        let f = ExtField::new(2, 4, None).unwrap();
        let x = f.gen();
        let x3 = f.pow(&x, 3);
        assert_eq!(f.mul(&x, &x3), f.elem(&[1, 1]).unwrap());
    }

    #[test]
    fn inverse_axiom_exhaustive_gf16() {
        let f = ExtField::new(2, 4, None).unwrap();
        for a in f.iter() {
            if a.is_zero() {
                assert!(f.inv(&a).is_err());
                continue;
            }
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), f.one());
        }
    }

    #[test]
    fn unit_group_order_exhaustive() {
        // a^(p^m - 1) = 1 for all nonzero a, on fields of order <= 2^12
        for (p, m) in [(2u64, 4usize), (3, 3), (5, 2), (7, 2), (2, 5)] {
            let f = ExtField::new(p, m, None).unwrap();
            let e = (f.order() - 1) as u64;
            for a in f.iter().skip(1) {
                assert_eq!(f.pow(&a, e), f.one(), "p={p} m={m}");
            }
        }
    }

    #[test]
    fn decompose_roundtrip_exhaustive_gf16() {
        let f = ExtField::new(2, 4, None).unwrap();
        for a in f.iter() {
            let coords = f.decompose_over_prime(&a);
            assert_eq!(f.recompose(&coords).unwrap(), a);
        }
        assert_eq!(f.decompose_over_prime(&f.zero()), vec![0, 0, 0, 0]);
        assert_eq!(
            f.decompose_over_prime(&f.elem(&[1, 1]).unwrap()),
            vec![1, 1, 0, 0]
        );
    }

    #[test]
    fn decompose_gf49() {
        let f = ExtField::new(7, 2, None).unwrap();
        // 3x + 5
        let a = f.elem(&[5, 3]).unwrap();
        assert_eq!(f.decompose_over_prime(&a), vec![5, 3]);
    }

    #[test]
    fn subfield_membership_cases() {
        let f16 = ExtField::new(2, 4, None).unwrap();
        assert!(f16.subfield_membership(&f16.one(), 1).unwrap());
        assert!(!f16.subfield_membership(&f16.gen(), 1).unwrap());
        assert!(f16.subfield_membership(&f16.gen(), 2).unwrap() == {
            // x in GF(4) iff x^4 = x; x^4 = x + 1 here
            false
        });
        let f49 = ExtField::new(7, 2, None).unwrap();
        assert!(f49.subfield_membership(&f49.from_int(3), 1).unwrap());
        assert_eq!(
            f49.subfield_membership(&f49.one(), 3).unwrap_err(),
            Error::InvalidSubfieldDegree { d: 3, m: 2 }
        );
    }

    #[test]
    fn subfield_counts() {
        // GF(16) contains exactly 4 elements of GF(4) and 2 of GF(2)
        let f = ExtField::new(2, 4, None).unwrap();
        let in_gf4 = f.iter().filter(|a| f.subfield_membership(a, 2).unwrap()).count();
        let in_gf2 = f.iter().filter(|a| f.subfield_membership(a, 1).unwrap()).count();
        assert_eq!((in_gf4, in_gf2), (4, 2));
    }

    fn arb_field() -> impl Strategy<Value = ExtField> {
        prop_oneof![
            Just(ExtField::new(2, 4, None).unwrap()),
            Just(ExtField::new(3, 3, None).unwrap()),
            Just(ExtField::new(5, 1, None).unwrap()),
            Just(ExtField::new(7, 2, None).unwrap()),
            Just(ExtField::new(2, 5, None).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms((f, ia, ib, ic) in arb_field().prop_flat_map(|f| {
            let o = f.order() as u64;
            (Just(f), 0..o, 0..o, 0..o)
        })) {
            let a = f.from_index(ia as u128);
            let b = f.from_index(ib as u128);
            let c = f.from_index(ic as u128);
            // associativity
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            // commutativity
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            // distributivity
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        }

        #[test]
        fn frobenius_is_homomorphism((f, ia, ib) in arb_field().prop_flat_map(|f| {
            let o = f.order() as u64;
            (Just(f), 0..o, 0..o)
        })) {
            let a = f.from_index(ia as u128);
            let b = f.from_index(ib as u128);
            prop_assert_eq!(f.frobenius(&f.add(&a, &b)), f.add(&f.frobenius(&a), &f.frobenius(&b)));
            prop_assert_eq!(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)));
        }
    }
}
