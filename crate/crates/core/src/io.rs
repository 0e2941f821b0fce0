//! JSON file formats.
//!
//! * matrix: `{"rows": R, "cols": C, "field": {...}, "entries": [["1/2", "-3"], ...]}`
//! * double star spec: `{"a": "1", "b": "1", "x": [...], "y": [...], "z": [...], "w": [...], "field": {...}}`
//! * D-linked spec: `{"A": {...matrix...}, "stars": [{"x": [...], "y": [...]}, ...]}`
//!
//! Scalars are strings in the grammar of [`Scalar::parse`]. A missing
//! `field` block means the rationals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::closedform::{DoubleStarCase, MpWitness};
use crate::error::{Error, Result};
use crate::field::{FieldConfig, Scalar};
use crate::geninv::{Detail, InverseReport};
use crate::graphs::{DLinkedSpec, DoubleStarSpec, Star};
use crate::matrix::{ExactMatrix, Polynomial};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    #[serde(default)]
    pub field: FieldConfig,
    pub entries: Vec<Vec<Scalar>>,
}

impl From<&ExactMatrix> for MatrixJson {
    fn from(m: &ExactMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            field: m.cfg(),
            entries: m.to_rows(),
        }
    }
}

impl MatrixJson {
    pub fn into_matrix(self, field_override: Option<FieldConfig>) -> Result<ExactMatrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "entries do not form a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let cfg = field_override.unwrap_or(self.field);
        ExactMatrix::new(
            self.rows,
            self.cols,
            self.entries.into_iter().flatten().collect(),
            cfg,
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleStarJson {
    pub a: Scalar,
    pub b: Scalar,
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
    pub z: Vec<Scalar>,
    pub w: Vec<Scalar>,
    #[serde(default)]
    pub field: FieldConfig,
}

impl From<&DoubleStarSpec> for DoubleStarJson {
    fn from(s: &DoubleStarSpec) -> Self {
        DoubleStarJson {
            a: s.a.clone(),
            b: s.b.clone(),
            x: s.x.clone(),
            y: s.y.clone(),
            z: s.z.clone(),
            w: s.w.clone(),
            field: s.cfg,
        }
    }
}

impl DoubleStarJson {
    pub fn into_spec(self, field_override: Option<FieldConfig>) -> Result<DoubleStarSpec> {
        let spec = DoubleStarSpec {
            a: self.a,
            b: self.b,
            x: self.x,
            y: self.y,
            z: self.z,
            w: self.w,
            cfg: field_override.unwrap_or(self.field),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarJson {
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DLinkedJson {
    #[serde(rename = "A")]
    pub base: MatrixJson,
    pub stars: Vec<StarJson>,
}

impl From<&DLinkedSpec> for DLinkedJson {
    fn from(s: &DLinkedSpec) -> Self {
        DLinkedJson {
            base: MatrixJson::from(&s.base),
            stars: s
                .stars
                .iter()
                .map(|st| StarJson {
                    x: st.x.clone(),
                    y: st.y.clone(),
                })
                .collect(),
        }
    }
}

impl DLinkedJson {
    pub fn into_spec(self, field_override: Option<FieldConfig>) -> Result<DLinkedSpec> {
        let spec = DLinkedSpec {
            base: self.base.into_matrix(field_override)?,
            stars: self
                .stars
                .into_iter()
                .map(|s| Star { x: s.x, y: s.y })
                .collect(),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Any of the three input documents.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Input {
    Matrix(ExactMatrix),
    DoubleStar(DoubleStarSpec),
    DLinked(DLinkedSpec),
}

/// Parse a matrix or spec document, telling them apart by their keys.
pub fn parse_input(text: &str, field_override: Option<FieldConfig>) -> Result<Input> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Json("expected a JSON object".into()))?;
    if obj.contains_key("stars") {
        let doc: DLinkedJson = serde_json::from_value(value)?;
        Ok(Input::DLinked(doc.into_spec(field_override)?))
    } else if obj.contains_key("entries") {
        let doc: MatrixJson = serde_json::from_value(value)?;
        Ok(Input::Matrix(doc.into_matrix(field_override)?))
    } else if obj.contains_key("a") {
        let doc: DoubleStarJson = serde_json::from_value(value)?;
        Ok(Input::DoubleStar(doc.into_spec(field_override)?))
    } else {
        Err(Error::Json(
            "unrecognized document: expected a matrix, double star spec or D-linked spec".into(),
        ))
    }
}

pub fn parse_matrix(text: &str, field_override: Option<FieldConfig>) -> Result<ExactMatrix> {
    let doc: MatrixJson = serde_json::from_str(text)?;
    doc.into_matrix(field_override)
}

pub fn parse_field(text: &str) -> Result<FieldConfig> {
    Ok(serde_json::from_str(text)?)
}

pub fn matrix_value(m: &ExactMatrix) -> Value {
    serde_json::to_value(MatrixJson::from(m)).expect("matrix serializes")
}

pub fn double_star_value(s: &DoubleStarSpec) -> Value {
    serde_json::to_value(DoubleStarJson::from(s)).expect("spec serializes")
}

pub fn d_linked_value(s: &DLinkedSpec) -> Value {
    serde_json::to_value(DLinkedJson::from(s)).expect("spec serializes")
}

pub fn polynomial_value(p: &Polynomial) -> Vec<Scalar> {
    p.coeffs().to_vec()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationJson {
    pub case: &'static str,
    pub xy: Scalar,
    pub zw: Scalar,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Scalar>,
}

impl From<&DoubleStarCase> for ClassificationJson {
    fn from(c: &DoubleStarCase) -> Self {
        ClassificationJson {
            case: c.tag.as_str(),
            xy: c.xy.clone(),
            zw: c.zw.clone(),
            zeta: c.zeta.clone(),
        }
    }
}

pub fn classification_value(c: &DoubleStarCase) -> Value {
    serde_json::to_value(ClassificationJson::from(c)).expect("classification serializes")
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub kind: &'static str,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_poly: Option<Vec<Scalar>>,
    pub matrix: Option<MatrixJson>,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, Scalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending: Option<Vec<usize>>,
}

impl From<&InverseReport> for ReportJson {
    fn from(r: &InverseReport) -> Self {
        let mut out = ReportJson {
            kind: r.kind.as_str(),
            exists: r.exists,
            index: None,
            min_poly: None,
            matrix: r.matrix.as_ref().map(MatrixJson::from),
            method: r.method.as_str(),
            condition: None,
            witness: None,
            offending: None,
        };
        match &r.detail {
            Detail::Drazin(d) => {
                out.index = Some(d.index);
                out.min_poly = Some(polynomial_value(&d.min_poly));
            }
            Detail::Witness(w) => {
                out.condition = Some(w.condition.clone());
                if !w.values.is_empty() {
                    out.witness = Some(w.values.iter().cloned().collect());
                }
                if !w.offending.is_empty() {
                    out.offending = Some(w.offending.clone());
                }
            }
        }
        out
    }
}

pub fn report_value(r: &InverseReport) -> Value {
    serde_json::to_value(ReportJson::from(r)).expect("report serializes")
}

pub fn mp_witness_value(w: &MpWitness) -> Value {
    serde_json::json!({ "s": w.s, "u": w.u, "t": w.t, "v": w.v })
}
