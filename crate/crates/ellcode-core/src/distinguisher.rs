//! Schur-square dimension bounds for Goppa-like codes, the
//! distinguishability predicate, and the largest-distinguishable sweep,
//! all in exact integer arithmetic (logarithm ceilings are computed by
//! integer power comparison, never floating point).

use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::{Error, Result};

/// Parameters of the square-dimension bounds. `k` is the dimension of the
/// inner evaluation code over the extension field GF(q^m); `s` the degree
/// of the effective divisor G′; `s_star` the weighted degree of the
/// multiplier; `g_ab` the genus parameter (1 for elliptic curves).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    pub q: i128,
    pub m: i128,
    pub k: i128,
    pub s: i128,
    pub s_star: i128,
    pub s_inf: i128,
    pub g_ab: i128,
}

fn checked_pow(base: i128, exp: i128) -> Result<i128> {
    if exp < 0 {
        return Err(Error::HypothesisViolated);
    }
    let mut acc: i128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(Error::CodeTooLarge)?;
    }
    Ok(acc)
}

/// Smallest integer e with q^e ≥ num/den (exact; e may be negative).
fn ceil_log_q(q: i128, num: i128, den: i128) -> i64 {
    debug_assert!(q >= 2 && num > 0 && den > 0);
    let mut e: i64 = 0;
    // q^e ≥ num/den ⟺ den·q^e ≥ num (for e ≥ 0); num·q^{-e} ≤ den otherwise
    let geq = |e: i64| -> bool {
        if e >= 0 {
            let mut p: i128 = 1;
            for _ in 0..e {
                p = p.saturating_mul(q);
            }
            den.saturating_mul(p) >= num
        } else {
            let mut p: i128 = 1;
            for _ in 0..(-e) {
                p = p.saturating_mul(q);
            }
            den >= num.saturating_mul(p)
        }
    };
    while !geq(e) {
        e += 1;
    }
    while e > -200 && geq(e - 1) {
        e -= 1;
    }
    e
}

/// e = min(⌊m/2⌋, ⌈log_q(k²/s)⌉).
pub fn truncation_general(q: i128, m: i128, k: i128, s: i128) -> i64 {
    let cl = ceil_log_q(q, k * k, s);
    cl.min((m / 2) as i64)
}

/// e⋆ = min(⌊m/2⌋, ⌈log_q(k²/(s⋆(q-1)²))⌉ + 1).
pub fn truncation_one_point(q: i128, m: i128, k: i128, s_star: i128) -> i64 {
    let cl = ceil_log_q(q, k * k, s_star * (q - 1) * (q - 1)) + 1;
    cl.min((m / 2) as i64)
}

/// Halves `twice` exactly or reports the non-integral value.
fn halve(twice: i128) -> Result<i128> {
    if twice % 2 != 0 {
        return Err(Error::NonIntegralBound { twice_value: twice });
    }
    Ok(twice / 2)
}

/// General Goppa-like square bound:
/// binom(mk+1, 2) - (m/2)·(k(k-1)(2e+1) - 2s·(q^{e+1}-1)/(q-1)),
/// requiring s = deg(G′) > g_ab.
pub fn bound_general(p: &BoundParams) -> Result<i128> {
    if p.s <= p.g_ab {
        return Err(Error::HypothesisViolated);
    }
    if p.k < 1 {
        return Err(Error::HypothesisViolated);
    }
    let e = truncation_general(p.q, p.m, p.k, p.s);
    if e < 0 {
        return Err(Error::HypothesisViolated);
    }
    let geom = (checked_pow(p.q, e as i128 + 1)? - 1) / (p.q - 1);
    let inner = p.k * (p.k - 1) * (2 * e as i128 + 1) - 2 * p.s * geom;
    let mk = p.m * p.k;
    let twice = (mk + 1) * mk - p.m * inner;
    halve(twice)
}

/// One-point Goppa-like square bound:
/// binom(mk+1, 2) - (m/2)·(k²(2e⋆+1) + k - 2s⋆(q^{e⋆} - q^{e⋆-1} + 1)),
/// with the side condition s∞ ≥ (s⋆ - s∞)·q + 2g_ab - 1.
pub fn bound_one_point(p: &BoundParams) -> Result<i128> {
    if p.k < 1 {
        return Err(Error::HypothesisViolated);
    }
    if p.s_inf < (p.s_star - p.s_inf) * p.q + 2 * p.g_ab - 1 {
        return Err(Error::SideConditionViolated);
    }
    let e = truncation_one_point(p.q, p.m, p.k, p.s_star);
    if e < 1 {
        return Err(Error::HypothesisViolated);
    }
    let qe = checked_pow(p.q, e as i128)?;
    let tail = qe - qe / p.q + 1;
    let inner = p.k * p.k * (2 * e as i128 + 1) + p.k - 2 * p.s_star * tail;
    let mk = p.m * p.k;
    let twice = (mk + 1) * mk - p.m * inner;
    halve(twice)
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub s_inf: i128,
    pub k: i128,
    pub s_star: i128,
    pub e_star: i64,
    pub bound: i128,
    pub distinguishable: bool,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub q: i128,
    pub m: i128,
    pub n: i128,
    /// k = s∞ + k_offset, the dimension convention of this sweep.
    pub k_offset: i128,
    pub rows: Vec<SweepRow>,
    pub largest: Option<i128>,
}

/// Largest s∞ with bound_one_point < n under k = s∞ + k_offset, fixing
/// s⋆ = s∞ + 1, by ascending sweep from the side-condition threshold; the
/// sweep stops at the first non-distinguishable degree (the bound is not
/// monotone and eventually drops below every genuine dimension, so values
/// past the first failure certify nothing).
pub fn largest_distinguishable_s_with(
    q: i128,
    m: i128,
    n: i128,
    k_offset: i128,
) -> Result<SweepReport> {
    let g_ab = 1i128;
    let s_min = q + 2 * g_ab - 1;
    let mut rows = Vec::new();
    let mut largest = None;
    for s_inf in s_min..=n.max(s_min) {
        let k = s_inf + k_offset;
        let s_star = s_inf + 1;
        let p = BoundParams { q, m, k, s: s_inf, s_star, s_inf, g_ab };
        let bound = bound_one_point(&p)?;
        let distinguishable = bound < n;
        rows.push(SweepRow {
            s_inf,
            k,
            s_star,
            e_star: truncation_one_point(q, m, k, s_star),
            bound,
            distinguishable,
        });
        if distinguishable {
            largest = Some(s_inf);
        } else {
            break;
        }
    }
    Ok(SweepReport { q, m, n, k_offset, rows, largest })
}

/// The sweep under the three dimension conventions k = s∞ + δ,
/// δ ∈ {-1, 0, +1}. The reference table never states k; its rows are
/// reproduced by different conventions (the binary rows by δ = -1, the
/// larger-field rows by δ = +1), so reproduction reports the value per
/// convention and records which one matched.
#[derive(Debug, Clone)]
pub struct TableReproduction {
    pub q: i128,
    pub m: i128,
    pub n: i128,
    pub sweeps: Vec<SweepReport>,
}

impl TableReproduction {
    pub fn value_under(&self, k_offset: i128) -> Option<i128> {
        self.sweeps
            .iter()
            .find(|s| s.k_offset == k_offset)
            .and_then(|s| s.largest)
    }

    /// The convention(s) whose sweep reproduces `published`.
    pub fn matching_offsets(&self, published: i128) -> Vec<i128> {
        self.sweeps
            .iter()
            .filter(|s| s.largest == Some(published))
            .map(|s| s.k_offset)
            .collect()
    }
}

pub fn largest_distinguishable_s(q: i128, m: i128, n: i128) -> Result<TableReproduction> {
    let sweeps = [-1i128, 0, 1]
        .iter()
        .map(|&d| largest_distinguishable_s_with(q, m, n, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReproduction { q, m, n, sweeps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Distinguishable,
    Indistinguishable,
    BoundExceedsLength,
}

#[derive(Debug, Clone)]
pub struct SquareReport {
    pub n: usize,
    pub k_tilde: usize,
    pub empirical_square_dim: usize,
    pub generic_square_dim: usize,
    pub bound: Option<i128>,
    pub verdict: Verdict,
}

/// Caps for the exact Schur-rank computation.
pub const SQUARE_N_CAP: usize = 512;
pub const SQUARE_K_CAP: usize = 64;

/// Exact square dimension of (the dual of) a restricted code versus the
/// formula bound. The square is taken of `code` itself — pass the code
/// whose square the bound speaks about (the dual of the Goppa-like code).
pub fn empirical_square_report(
    code: &LinearCode,
    params: Option<&BoundParams>,
) -> Result<SquareReport> {
    let n = code.len();
    let k = code.dim();
    if n > SQUARE_N_CAP || k > SQUARE_K_CAP {
        return Err(Error::CodeTooLarge);
    }
    let sq = code.schur_square()?;
    let empirical = sq.dim();
    let generic = n.min(k * (k + 1) / 2);
    let bound = match params {
        Some(p) => Some(bound_one_point(p).or_else(|_| bound_general(p))?),
        None => None,
    };
    let verdict = match bound {
        Some(b) if b >= n as i128 => Verdict::BoundExceedsLength,
        Some(_) if (empirical as i128) < n as i128 => Verdict::Distinguishable,
        Some(_) => Verdict::Indistinguishable,
        None if empirical < n => Verdict::Distinguishable,
        None => Verdict::Indistinguishable,
    };
    Ok(SquareReport {
        n,
        k_tilde: k,
        empirical_square_dim: empirical,
        generic_square_dim: generic,
        bound,
        verdict,
    })
}
