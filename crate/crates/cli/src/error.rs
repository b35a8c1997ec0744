use serde_json::{json, Map, Value};
use thiserror::Error;

use qderiv::derivations::DerivationError;
use qderiv::exactla::FieldError;
use qderiv::quandle::{GroupError, QuandleError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed quandle JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error("{0} needs a dihedral quandle")]
    NotDihedral(&'static str),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    /// `{"error": {"kind": ..., "message": ..., <witness fields>}}`.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        let (kind, fields) = match self {
            CliError::Usage(_) => ("usage", json!({})),
            CliError::Io { path, .. } => ("io", json!({ "path": path })),
            CliError::Json(_) => ("json", json!({})),
            CliError::Quandle(e) => quandle_kind(e),
            CliError::Field(_) => ("unsupported_field", json!({})),
            CliError::Derivation(_) => ("derivation", json!({})),
            CliError::NotDihedral(_) => ("not_dihedral", json!({})),
        };
        obj.insert("kind".into(), kind.into());
        obj.insert("message".into(), self.to_string().into());
        if let Value::Object(f) = fields {
            obj.extend(f);
        }
        json!({ "error": obj })
    }
}

fn quandle_kind(e: &QuandleError) -> (&'static str, Value) {
    match *e {
        QuandleError::Empty => ("empty", json!({})),
        QuandleError::NotSquare { row, len, expected } => {
            ("not_square", json!({ "row": row, "len": len, "expected": expected }))
        }
        QuandleError::OutOfRange { x, y, value, n } => {
            ("out_of_range", json!({ "x": x, "y": y, "value": value, "n": n }))
        }
        QuandleError::AxiomI { x, value } => ("axiom_i", json!({ "x": x, "value": value })),
        QuandleError::AxiomII { y, x1, x2, value } => {
            ("axiom_ii", json!({ "y": y, "x1": x1, "x2": x2, "value": value }))
        }
        QuandleError::AxiomIII { x, y, z } => ("axiom_iii", json!({ "x": x, "y": y, "z": z })),
        QuandleError::NotAGroup(ref g) => (
            "not_a_group",
            match *g {
                GroupError::NotAssociative { a, b, c } => json!({ "a": a, "b": b, "c": c }),
                _ => json!({}),
            },
        ),
        QuandleError::NonUnitAlpha { n, alpha } => ("non_unit_alpha", json!({ "n": n, "alpha": alpha })),
        QuandleError::UnsupportedOrder(n) => ("unsupported_order", json!({ "n": n })),
        QuandleError::UnknownLabel(ref l) => ("unknown_label", json!({ "label": l })),
        QuandleError::BadPermutation(..) => ("bad_permutation", json!({})),
        QuandleError::OrderMismatch { declared, rows } => {
            ("order_mismatch", json!({ "declared": declared, "rows": rows }))
        }
        QuandleError::BadSpec(ref s) => ("bad_spec", json!({ "spec": s })),
    }
}
