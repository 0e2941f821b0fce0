//! Exact generalized inverses over ℚ and ℚ(i).
//!
//! Group, Drazin and Moore–Penrose inverses are computed with exact
//! arithmetic. For double star and D-linked stars digraph matrices the
//! inverses also have closed forms, which are cross-checked against the
//! general algorithms.
//!
//! ```
//! use ginv_core::closedform::{classify_double_star, double_star_drazin, CaseTag};
//! use ginv_core::geninv::drazin_inverse;
//! use ginv_core::graphs::build_double_star;
//! use ginv_core::io::parse_input;
//! use ginv_core::io::Input;
//!
//! let text = r#"{"a":"1","b":"1","x":["1","1"],"y":["1","1"],"z":["1","1"],"w":["1","-1"]}"#;
//! let Input::DoubleStar(spec) = parse_input(text, None).unwrap() else { unreachable!() };
//! let case = classify_double_star(&spec).unwrap();
//! assert_eq!(case.tag, CaseTag::FirstNonzeroSecondZero);
//! assert_eq!(case.zeta.unwrap().to_string(), "3");
//!
//! let closed = double_star_drazin(&spec).unwrap();
//! let general = drazin_inverse(&build_double_star(&spec).unwrap()).unwrap();
//! assert_eq!(closed.inverse, general.inverse);
//! assert_eq!(closed.index, 3);
//! ```

pub mod campaign;
pub mod closedform;
pub mod error;
pub mod field;
pub mod geninv;
pub mod graphs;
pub mod io;
pub mod matrix;
pub mod random;
pub mod report;

pub use error::{Error, Result};
pub use field::{Base, FieldConfig, Involution, Scalar};
pub use geninv::{DrazinResult, InverseKind, InverseReport, Method};
pub use graphs::{DLinkedSpec, DoubleStarSpec, Star};
pub use matrix::{ExactMatrix, Polynomial};
