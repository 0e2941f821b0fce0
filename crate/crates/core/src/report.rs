//! Side-by-side reports: the closed form for covered specs next to the
//! general algorithm, and whether they agree.

use serde_json::{json, Value};

use crate::closedform;
use crate::error::{Error, Result};
use crate::geninv::{self, Detail, InverseKind, InverseReport, Method};
use crate::graphs::{build_d_linked, build_double_star, DLinkedSpec};
use crate::io::{self, Input};
use crate::matrix::ExactMatrix;

pub fn matrix_of(input: &Input) -> Result<ExactMatrix> {
    match input {
        Input::Matrix(m) => Ok(m.clone()),
        Input::DoubleStar(s) => build_double_star(s),
        Input::DLinked(s) => Ok(build_d_linked(s)?.m),
    }
}

/// Classification of a spec: the double star case, or for D-linked stars
/// which pairings `x_iᵀy_i` vanish. `None` for a bare matrix.
pub fn classify(input: &Input) -> Result<Option<Value>> {
    match input {
        Input::DoubleStar(s) => Ok(Some(io::classification_value(&closedform::classify_double_star(s)?))),
        Input::DLinked(s) => {
            let pairings = s.pairings();
            let zeros: Vec<usize> = (1..=pairings.len()).filter(|&i| pairings[i - 1].is_zero()).collect();
            let case = match zeros.len() {
                0 => "all_nonzero",
                n if n == pairings.len() => "all_zero",
                _ => "mixed",
            };
            Ok(Some(json!({
                "case": case,
                "pairings": pairings,
                "zero_pairings": zeros,
            })))
        }
        Input::Matrix(_) => Ok(None),
    }
}

pub fn general(kind: InverseKind, m: &ExactMatrix) -> Result<InverseReport> {
    match kind {
        InverseKind::Group => geninv::group_inverse(m),
        InverseKind::Drazin => Ok(InverseReport::drazin(geninv::drazin_inverse(m)?, Method::General)),
        InverseKind::MoorePenrose => geninv::moore_penrose(m),
    }
}

/// Closed-form answer for a covered spec.
pub struct Closed {
    pub report: InverseReport,
    /// `i(A) + 2` for D-linked stars that all pair to zero.
    pub predicted_index: Option<usize>,
}

impl From<InverseReport> for Closed {
    fn from(report: InverseReport) -> Self {
        Closed {
            report,
            predicted_index: None,
        }
    }
}

pub fn closed(kind: InverseKind, input: &Input) -> Result<Option<Closed>> {
    Ok(match (kind, input) {
        (_, Input::Matrix(_)) => None,
        (InverseKind::Group, Input::DoubleStar(s)) => Some(closedform::double_star_group_report(s)?.into()),
        (InverseKind::Drazin, Input::DoubleStar(s)) => {
            Some(InverseReport::drazin(closedform::double_star_drazin(s)?, Method::ClosedForm).into())
        }
        (InverseKind::MoorePenrose, Input::DoubleStar(s)) => Some(closedform::double_star_mp(s)?.0.into()),
        (InverseKind::Group, Input::DLinked(s)) => Some(closedform::d_linked_group(s)?.into()),
        (InverseKind::Drazin, Input::DLinked(s)) => d_linked_drazin(s)?,
        (InverseKind::MoorePenrose, Input::DLinked(s)) => Some(closedform::d_linked_mp(s)?.into()),
    })
}

/// Stars with mixed pairings have no index prediction and fall back to the
/// general algorithm alone.
fn d_linked_drazin(s: &DLinkedSpec) -> Result<Option<Closed>> {
    match closedform::d_linked_drazin(s) {
        Ok(d) => Ok(Some(Closed {
            predicted_index: Some(d.predicted_index),
            ..InverseReport::drazin(d.result, Method::ClosedForm).into()
        })),
        Err(Error::HypothesisViolated(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn agrees(closed: &Closed, general: &InverseReport) -> bool {
    let c = &closed.report;
    let details = match (&c.detail, &general.detail) {
        (Detail::Drazin(x), Detail::Drazin(y)) => {
            x.index == y.index && x.min_poly == y.min_poly && closed.predicted_index.is_none_or(|p| p == y.index)
        }
        _ => true,
    };
    c.exists == general.exists && c.matrix == general.matrix && details
}

pub struct DualReport {
    pub value: Value,
    /// `None` unless both routes ran.
    pub agreement: Option<bool>,
    pub exists: bool,
}

/// Run the closed form when the input is covered and the general algorithm
/// unless `skip_general` is set and a closed form ran.
pub fn dual_report(kind: InverseKind, input: &Input, skip_general: bool) -> Result<DualReport> {
    let closed = closed(kind, input)?;
    let general = match (&closed, skip_general) {
        (Some(_), true) => None,
        _ => Some(general(kind, &matrix_of(input)?)?),
    };
    let agreement = match (&closed, &general) {
        (Some(c), Some(g)) => Some(agrees(c, g)),
        _ => None,
    };
    let exists = general
        .as_ref()
        .or(closed.as_ref().map(|c| &c.report))
        .is_some_and(|r| r.exists);
    let closed_value = closed.map(|c| {
        let mut v = io::report_value(&c.report);
        if let Some(p) = c.predicted_index {
            v["predicted_index"] = json!(p);
        }
        v
    });
    Ok(DualReport {
        value: json!({
            "kind": kind.as_str(),
            "closed_form": closed_value,
            "general": general.as_ref().map(io::report_value),
            "agreement": agreement,
        }),
        agreement,
        exists,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const NILPOTENT: &str = r#"{"a":"1","b":"2","x":["1","1"],"y":["-1","-1"],"z":["1","1"],"w":["1","-1"]}"#;

    #[test]
    fn covered_spec_runs_both_routes() {
        let input = io::parse_input(NILPOTENT, None).unwrap();
        let dual = dual_report(InverseKind::Drazin, &input, false).unwrap();
        assert_eq!(dual.agreement, Some(true));
        assert!(dual.exists);
        assert_eq!(dual.value["closed_form"]["index"], 5);
        assert_eq!(dual.value["general"]["index"], 5);

        let group = dual_report(InverseKind::Group, &input, false).unwrap();
        assert_eq!(group.agreement, Some(true));
        assert!(!group.exists);
    }

    #[test]
    fn bare_matrix_has_no_closed_form() {
        let input = Input::Matrix(ExactMatrix::from_ints(&[[0, 1], [0, 0]]));
        let dual = dual_report(InverseKind::MoorePenrose, &input, true).unwrap();
        assert!(dual.value["closed_form"].is_null());
        assert_eq!(dual.agreement, None);
        assert!(dual.exists);
        assert_eq!(classify(&input).unwrap(), None);
    }
}
