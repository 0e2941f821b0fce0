//! Browser bindings. Each export takes a spec document as JSON text and
//! returns a JSON string; the plain functions below carry the logic so they
//! can be tested natively.

use ginv_core::geninv::InverseKind;
use ginv_core::io::{self, Input};
use ginv_core::report;
use wasm_bindgen::prelude::*;

fn parse(spec: &str) -> Result<Input, String> {
    match io::parse_input(spec, None).map_err(|e| e.to_string())? {
        Input::Matrix(_) => Err("expected a double star or D-linked spec".into()),
        input => Ok(input),
    }
}

fn kind(name: &str) -> Result<InverseKind, String> {
    match name {
        "group" => Ok(InverseKind::Group),
        "drazin" => Ok(InverseKind::Drazin),
        "mp" => Ok(InverseKind::MoorePenrose),
        other => Err(format!("unknown inverse `{other}`, expected group, drazin or mp")),
    }
}

/// The matrix of a spec together with its classification.
pub fn describe_spec(spec: &str) -> Result<String, String> {
    let input = parse(spec)?;
    let matrix = report::matrix_of(&input).map_err(|e| e.to_string())?;
    let class = report::classify(&input).map_err(|e| e.to_string())?;
    Ok(serde_json::json!({
        "matrix": io::matrix_value(&matrix),
        "classification": class,
    })
    .to_string())
}

/// Closed form and general algorithm side by side.
pub fn inverse_of_spec(spec: &str, kind_name: &str) -> Result<String, String> {
    let input = parse(spec)?;
    let dual = report::dual_report(kind(kind_name)?, &input, false).map_err(|e| e.to_string())?;
    Ok(dual.value.to_string())
}

#[wasm_bindgen]
pub fn describe(spec: &str) -> Result<String, JsError> {
    describe_spec(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn inverse(spec: &str, kind: &str) -> Result<String, JsError> {
    inverse_of_spec(spec, kind).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    const BOTH_ZERO: &str = r#"{"a":"2","b":"3","x":["1","1"],"y":["1","-1"],"z":["1","1"],"w":["1","-1"]}"#;

    fn value(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn describe_returns_matrix_and_case() {
        let v = value(describe_spec(BOTH_ZERO));
        assert_eq!(v["classification"]["case"], "both_zero");
        assert_eq!(v["matrix"]["rows"], 6);
    }

    #[test]
    fn inverse_agrees_for_each_kind() {
        for k in ["group", "drazin", "mp"] {
            let v = value(inverse_of_spec(BOTH_ZERO, k));
            assert_eq!(v["agreement"], true, "{k}");
        }
        let v = value(inverse_of_spec(BOTH_ZERO, "drazin"));
        assert_eq!(v["closed_form"]["index"], 2);
    }

    #[test]
    fn d_linked_specs_are_accepted() {
        let spec = r#"{"A":{"rows":1,"cols":1,"entries":[["0"]]},"stars":[{"x":["1","1"],"y":["1","-1"]}]}"#;
        let v = value(describe_spec(spec));
        assert_eq!(v["classification"]["case"], "all_zero");
        let d = value(inverse_of_spec(spec, "drazin"));
        assert_eq!(d["closed_form"]["predicted_index"], 3);
        assert_eq!(d["general"]["index"], 3);
    }

    #[test]
    fn bad_input_is_an_error_message() {
        assert!(describe_spec("{}").is_err());
        assert!(describe_spec(r#"{"rows":1,"cols":1,"entries":[["1"]]}"#).is_err());
        assert!(inverse_of_spec(BOTH_ZERO, "moore").unwrap_err().contains("unknown inverse"));
    }
}
