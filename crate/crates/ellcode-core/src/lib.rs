//! Exact arithmetic on elliptic curves over small finite fields, and the
//! code constructions built on top of it.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] — GF(p) and GF(p^m) with dense power-basis elements,
//! * [`poly`] — univariate polynomials over an extension field,
//! * [`curve`] — general-Weierstrass curves, group law, point enumeration,
//! * [`divisor`] — divisors supported on rational places,
//! * [`function`] — rational functions on a curve in canonical
//!   `(a(X) + b(X)·Y)/d(X)` form, with exact valuations at rational places,
//! * [`automorphism`] — automorphisms fixing the point at infinity, orbits
//!   and the invariant-point classification,
//! * [`riemann_roch`] — explicit Riemann-Roch bases for one-point,
//!   multipoint and orbit-shaped divisors,
//! * [`code`] — generic linear codes over GF(p^m): duals, subfield
//!   subcodes, quasi-cyclicity, Schur squares, exhaustive minimum distance,
//! * [`families`] — evaluation codes, QC-SSDE, Goppa-like and QC-Goppa-like
//!   constructions,
//! * [`distinguisher`] — Schur-square dimension bounds and the
//!   distinguishability sweep.
//!
//! Everything is exact: no floating point anywhere. All values are immutable
//! and all operations are pure, so concurrent use is safe.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod automorphism;
pub mod code;
pub mod curve;
pub mod distinguisher;
pub mod divisor;
pub mod error;
pub mod families;
pub mod field;
pub mod function;
pub mod matrix;
pub mod poly;
pub mod riemann_roch;

pub use error::{Error, Result};
