//! JSON and CSV formats for fields, curves, divisors, point sets and matrices.
//!
//! Field elements are written as integers over a prime field and as ascending residue
//! lists over an extension; integers are also accepted over an extension as packed values.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::curve::{AffinePoint, CurveError, HyperellipticCurve};
use crate::divisor::{DivisorError, GeneralDivisor, MumfordDivisor};
use crate::field::{Field, FieldElement, FieldError};
use crate::function_field::text::parse_element;
use crate::linalg::Matrix;
use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub c: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl FieldSpec {
    pub fn of(field: &Field) -> FieldSpec {
        FieldSpec {
            p: field.characteristic(),
            c: field.degree(),
            modulus: (!field.is_prime_field()).then(|| field.modulus().to_vec()),
        }
    }

    pub fn build(&self) -> Result<Field, IoError> {
        Ok(Field::new(self.p, self.c, self.modulus.as_deref())?)
    }

    /// `"p"` or `"p,c"`, as given on the command line.
    pub fn parse_flag(s: &str) -> Result<FieldSpec, IoError> {
        let bad = || IoError::Format(format!("field flag {s:?} is not p or p,c"));
        let mut parts = s.split(',').map(|x| x.trim().parse::<u64>());
        let p = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
        let c = match parts.next() {
            Some(c) => c.map_err(|_| bad())? as usize,
            None => 1,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(FieldSpec { p, c, modulus: None })
    }
}

pub fn element_to_value(e: &FieldElement) -> Value {
    if e.field().is_prime_field() {
        Value::from(e.value())
    } else {
        Value::from(e.coefficients())
    }
}

pub fn element_from_value(field: &Field, v: &Value) -> Result<FieldElement, IoError> {
    parse_element(field, v).map_err(|e| IoError::Format(e.to_string()))
}

pub fn polynomial_to_value(p: &Polynomial) -> Value {
    Value::Array(p.coefficients().iter().map(element_to_value).collect())
}

pub fn polynomial_from_value(field: &Field, v: &Value) -> Result<Polynomial, IoError> {
    let items = v.as_array().ok_or_else(|| IoError::Format(format!("{v} is not a coefficient list")))?;
    let coeffs = items.iter().map(|c| element_from_value(field, c)).collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::from_elements(field, &coeffs).expect("same field"))
}

/// Comma-separated coefficients, e.g. `1,0,1`; residue lists are not supported here.
pub fn polynomial_from_list(field: &Field, s: &str) -> Result<Polynomial, IoError> {
    let wrapped = format!("[{}]", s.trim().trim_start_matches('[').trim_end_matches(']'));
    polynomial_from_value(field, &serde_json::from_str(&wrapped)?)
}

#[derive(Serialize, Deserialize)]
struct CurveFile {
    field: FieldSpec,
    f: Value,
    #[serde(default)]
    h: Option<Value>,
}

pub fn curve_to_json(curve: &HyperellipticCurve) -> String {
    let file = CurveFile {
        field: FieldSpec::of(curve.field()),
        f: polynomial_to_value(curve.f()),
        h: Some(polynomial_to_value(curve.h())),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Accepts non-monic `f`, as produced by curve fitting.
pub fn curve_from_json(text: &str) -> Result<HyperellipticCurve, IoError> {
    let file: CurveFile = serde_json::from_str(text)?;
    let field = file.field.build()?;
    let f = polynomial_from_value(&field, &file.f)?;
    let h = match &file.h {
        Some(h) => polynomial_from_value(&field, h)?,
        None => Polynomial::zero(&field),
    };
    Ok(HyperellipticCurve::new_general(f, h)?)
}

#[derive(Serialize, Deserialize)]
struct ReducedFile {
    u: Value,
    v: Value,
    #[serde(default)]
    m: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    psi: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GeneralFile {
    points: Vec<Vec<Value>>,
    #[serde(default)]
    omega: i64,
}

/// A divisor file in either form.
#[derive(Clone, Debug)]
pub enum DivisorInput {
    Reduced { delta: MumfordDivisor, m: i64 },
    General(GeneralDivisor),
}

/// `{"u": [...], "v": [...], "m": int}` or `{"points": [[x, y, mult, sign], ...], "omega": int}`.
/// In the point form `sign` is `1` or `-1` and may be omitted.
pub fn divisor_from_json(curve: &HyperellipticCurve, text: &str) -> Result<DivisorInput, IoError> {
    let value: Value = serde_json::from_str(text)?;
    let field = curve.field();
    if value.get("points").is_some() {
        let file: GeneralFile = serde_json::from_value(value)?;
        let mut terms = Vec::new();
        for entry in &file.points {
            let bad = || IoError::Format(format!("point entry {entry:?} is not [x, y, mult, sign]"));
            if !(3..=4).contains(&entry.len()) {
                return Err(bad());
            }
            let x = element_from_value(field, &entry[0])?;
            let y = element_from_value(field, &entry[1])?;
            let mult = entry[2].as_i64().ok_or_else(bad)?;
            let sign = match entry.get(3) {
                None => 1,
                Some(s) => match s.as_i64() {
                    Some(1) => 1,
                    Some(-1) => -1,
                    _ => return Err(bad()),
                },
            };
            terms.push((AffinePoint::new(x, y), sign * mult));
        }
        return Ok(DivisorInput::General(GeneralDivisor::new(terms, file.omega)));
    }
    let file: ReducedFile = serde_json::from_value(value)?;
    let u = polynomial_from_value(field, &file.u)?;
    let v = polynomial_from_value(field, &file.v)?;
    Ok(DivisorInput::Reduced { delta: MumfordDivisor::new(curve, u, v)?, m: file.m })
}

/// `{"u", "v", "m"}` plus `"psi"` in text form when given.
pub fn reduced_to_json(delta: &MumfordDivisor, m: i64, psi: Option<String>) -> String {
    let file = ReducedFile { u: polynomial_to_value(delta.u()), v: polynomial_to_value(delta.v()), m, psi };
    serde_json::to_string_pretty(&file).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct PointsFile {
    points: Vec<Vec<Value>>,
}

pub fn points_from_json(field: &Field, text: &str) -> Result<Vec<AffinePoint>, IoError> {
    let file: PointsFile = serde_json::from_str(text)?;
    file.points
        .iter()
        .map(|entry| match entry.as_slice() {
            [x, y] => Ok(AffinePoint::new(element_from_value(field, x)?, element_from_value(field, y)?)),
            _ => Err(IoError::Format(format!("point entry {entry:?} is not [x, y]"))),
        })
        .collect()
}

pub fn points_to_json(points: &[AffinePoint]) -> String {
    let file = PointsFile {
        points: points.iter().map(|p| vec![element_to_value(&p.x), element_to_value(&p.y)]).collect(),
    };
    serde_json::to_string(&file).expect("serializable")
}

fn field_label(field: &Field) -> String {
    if field.is_prime_field() {
        format!("GF({})", field.characteristic())
    } else {
        format!("GF({}^{})", field.characteristic(), field.degree())
    }
}

/// Header `# [n,k] over GF(p^c)` then one comma-separated row per line. Extension
/// entries are written as their packed base-p integers.
pub fn matrix_to_csv(m: &Matrix) -> String {
    let mut out = format!("# [{},{}] over {}\n", m.cols(), m.rows(), field_label(m.field()));
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|e| e.value().to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(field: &Field, text: &str) -> Result<Matrix, IoError> {
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        rows.push(elements_from_csv(field, line)?);
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(IoError::Format("ragged matrix".into()));
    }
    Ok(Matrix::from_rows(field, &rows))
}

/// Comma-separated integers (packed values over an extension).
pub fn elements_from_csv(field: &Field, line: &str) -> Result<Vec<FieldElement>, IoError> {
    line.split(',')
        .map(|s| {
            let s = s.trim();
            let n: i64 = s.parse().map_err(|_| IoError::Format(format!("{s:?} is not an integer")))?;
            element_from_value(field, &Value::from(n))
        })
        .collect()
}

pub fn elements_to_csv(elements: &[FieldElement]) -> String {
    elements.iter().map(|e| e.value().to_string()).collect::<Vec<_>>().join(",")
}
