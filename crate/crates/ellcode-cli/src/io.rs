//! JSON and CSV interchange for the CLI: field/curve/point/divisor/
//! function/automorphism schemas, matrix serialization and provenance
//! records. Everything serializes deterministically (struct field order,
//! sorted maps), so identical inputs and seed give byte-identical
//! artifacts.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use ellcode_core::automorphism::CurveAutomorphism;
use ellcode_core::code::LinearCode;
use ellcode_core::curve::{CurvePoint, EllipticCurve};
use ellcode_core::divisor::Divisor;
use ellcode_core::field::{ExtField, FieldElement};
use ellcode_core::function::CurveFunction;
use ellcode_core::matrix::Matrix;
use ellcode_core::poly::Poly;
use ellcode_core::riemann_roch::{Construction, RRBasis};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    pub m: usize,
    /// Little-endian, length m + 1, monic.
    pub modulus: Vec<u64>,
}

impl FieldJson {
    pub fn to_field(&self) -> Result<ExtField, CliError> {
        ExtField::new(self.p, self.m, Some(self.modulus.clone())).map_err(CliError::from)
    }

    pub fn of(f: &ExtField) -> Self {
        FieldJson { p: f.p(), m: f.m(), modulus: f.modulus().to_vec() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveJson {
    pub field: FieldJson,
    /// [a1, a2, a3, a4, a6] as coefficient vectors.
    pub a: Vec<Vec<u64>>,
}

impl CurveJson {
    pub fn to_curve(&self) -> Result<EllipticCurve, CliError> {
        let f = self.field.to_field()?;
        if self.a.len() != 5 {
            return Err(CliError::parse("curve needs exactly [a1, a2, a3, a4, a6]"));
        }
        let el = |v: &Vec<u64>| f.elem(v).map_err(CliError::from);
        EllipticCurve::new(
            f.clone(),
            el(&self.a[0])?,
            el(&self.a[1])?,
            el(&self.a[2])?,
            el(&self.a[3])?,
            el(&self.a[4])?,
        )
        .map_err(CliError::from)
    }

    pub fn of(e: &EllipticCurve) -> Self {
        CurveJson {
            field: FieldJson::of(&e.field),
            a: vec![
                e.a1.coeffs.clone(),
                e.a2.coeffs.clone(),
                e.a3.coeffs.clone(),
                e.a4.coeffs.clone(),
                e.a6.coeffs.clone(),
            ],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Named(String),
    Affine { x: Vec<u64>, y: Vec<u64> },
}

impl PointJson {
    pub fn to_point(&self, f: &ExtField) -> Result<CurvePoint, CliError> {
        match self {
            PointJson::Named(s) if s == "infinity" => Ok(CurvePoint::Infinity),
            PointJson::Named(s) => Err(CliError::parse(&format!("unknown point tag {s:?}"))),
            PointJson::Affine { x, y } => Ok(CurvePoint::affine(
                f.elem(x).map_err(CliError::from)?,
                f.elem(y).map_err(CliError::from)?,
            )),
        }
    }

    pub fn of(p: &CurvePoint) -> Self {
        match p {
            CurvePoint::Infinity => PointJson::Named("infinity".into()),
            CurvePoint::Affine { x, y } => {
                PointJson::Affine { x: x.coeffs.clone(), y: y.coeffs.clone() }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivisorEntryJson {
    pub point: PointJson,
    pub mult: i64,
}

pub fn divisor_from_json(
    entries: &[DivisorEntryJson],
    e: &EllipticCurve,
) -> Result<Divisor, CliError> {
    let pts = entries
        .iter()
        .map(|en| Ok((en.point.to_point(&e.field)?, en.mult)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Divisor::new(e, &pts).map_err(CliError::from)
}

pub fn divisor_to_json(d: &Divisor) -> Vec<DivisorEntryJson> {
    d.iter()
        .map(|(p, m)| DivisorEntryJson { point: PointJson::of(p), mult: m })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionJson {
    pub num_a: Vec<Vec<u64>>,
    pub num_b: Vec<Vec<u64>>,
    pub den: Vec<Vec<u64>>,
}

fn poly_from_json(f: &ExtField, coeffs: &[Vec<u64>]) -> Result<Poly, CliError> {
    let cs = coeffs
        .iter()
        .map(|c| f.elem(c).map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(f, cs))
}

fn poly_to_json(p: &Poly) -> Vec<Vec<u64>> {
    p.coeffs.iter().map(|c| c.coeffs.clone()).collect()
}

impl FunctionJson {
    pub fn to_function(&self, e: &EllipticCurve) -> Result<CurveFunction, CliError> {
        let f = &e.field;
        CurveFunction::from_parts(
            e,
            poly_from_json(f, &self.num_a)?,
            poly_from_json(f, &self.num_b)?,
            poly_from_json(f, &self.den)?,
        )
        .map_err(CliError::from)
    }

    pub fn of(g: &CurveFunction) -> Self {
        FunctionJson {
            num_a: poly_to_json(g.num_a()),
            num_b: poly_to_json(g.num_b()),
            den: poly_to_json(g.den()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismJson {
    pub u: Vec<u64>,
    pub r: Vec<u64>,
    pub s: Vec<u64>,
    pub t: Vec<u64>,
    pub order: usize,
}

impl AutomorphismJson {
    pub fn to_automorphism(&self, e: &EllipticCurve) -> Result<CurveAutomorphism, CliError> {
        let f = &e.field;
        let a = CurveAutomorphism::new(
            e,
            f.elem(&self.u).map_err(CliError::from)?,
            f.elem(&self.r).map_err(CliError::from)?,
            f.elem(&self.s).map_err(CliError::from)?,
            f.elem(&self.t).map_err(CliError::from)?,
        )
        .map_err(CliError::from)?;
        if a.order() != self.order {
            return Err(CliError::parse(&format!(
                "declared order {} but the action has order {}",
                self.order,
                a.order()
            )));
        }
        Ok(a)
    }

    pub fn of(a: &CurveAutomorphism) -> Self {
        AutomorphismJson {
            u: a.u.coeffs.clone(),
            r: a.r.coeffs.clone(),
            s: a.s.coeffs.clone(),
            t: a.t.coeffs.clone(),
            order: a.order(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisJson {
    pub divisor: Vec<DivisorEntryJson>,
    pub functions: Vec<FunctionJson>,
    pub construction: String,
}

pub fn construction_name(c: Construction) -> &'static str {
    match c {
        Construction::Infinity => "infinity",
        Construction::OnePointTaylor => "one_point_taylor",
        Construction::OnePointSolve => "one_point_solve",
        Construction::Multipoint => "multipoint",
        Construction::MultipointMinusInfinity => "multipoint_minus_infinity",
        Construction::QcOrbit => "qc_orbit",
        Construction::QcOrbitMinusInfinity => "qc_orbit_minus_infinity",
    }
}

pub fn basis_to_json(b: &RRBasis) -> BasisJson {
    BasisJson {
        divisor: divisor_to_json(&b.divisor),
        functions: b.functions.iter().map(FunctionJson::of).collect(),
        construction: construction_name(b.construction).into(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub n: usize,
    pub generator: Vec<Vec<Vec<u64>>>,
    #[serde(default)]
    pub provenance: String,
}

impl CodeJson {
    pub fn to_code(&self) -> Result<LinearCode, CliError> {
        let f = self.field.to_field()?;
        let rows = self
            .generator
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| f.elem(c).map_err(CliError::from))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut code = LinearCode::from_rows(&f, rows, self.n).map_err(CliError::from)?;
        code.provenance = self.provenance.clone();
        Ok(code)
    }

    pub fn of(c: &LinearCode) -> Self {
        CodeJson {
            field: FieldJson::of(c.field()),
            n: c.len(),
            generator: matrix_rows(c.generator()),
            provenance: c.provenance.clone(),
        }
    }
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<Vec<u64>>> {
    m.rows
        .iter()
        .map(|r| r.iter().map(|c| c.coeffs.clone()).collect())
        .collect()
}

/// CSV with one field element per cell, coefficient vectors colon-joined.
pub fn matrix_to_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for row in &m.rows {
        let cells: Vec<String> = row.iter().map(element_cell).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn element_cell(c: &FieldElement) -> String {
    c.coeffs
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(":")
}

/// Provenance block embedded in every artifact: input hashes, the seed and
/// the library version pin the run.
#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub command: String,
    pub inputs_sha256: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub version: &'static str,
}

impl Provenance {
    pub fn new(command: &str, seed: Option<u64>) -> Self {
        Provenance {
            command: command.into(),
            inputs_sha256: BTreeMap::new(),
            seed,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn record(&mut self, label: &str, bytes: &[u8]) {
        let mut h = Sha256::new();
        h.update(bytes);
        self.inputs_sha256.insert(label.into(), hex_digest(&h.finalize()));
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Reads either a file path or inline JSON (an argument starting with
/// '{' or '[').
pub fn read_input(arg: &str) -> Result<(String, Vec<u8>), CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(("<inline>".into(), arg.as_bytes().to_vec()));
    }
    let bytes = fs::read(arg).map_err(|e| CliError::io(&format!("{arg}: {e}")))?;
    Ok((arg.to_string(), bytes))
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(bytes: &[u8], what: &str) -> Result<T, CliError> {
    serde_json::from_slice(bytes).map_err(|e| CliError::parse(&format!("{what}: {e}")))
}

pub fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => {
            // atomic-ish: write then rename alongside the target
            let tmp = p.with_extension("tmp");
            fs::write(&tmp, bytes).map_err(|e| CliError::io(&e.to_string()))?;
            fs::rename(&tmp, p).map_err(|e| CliError::io(&e.to_string()))
        }
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::io(&e.to_string()))
        }
    }
}
