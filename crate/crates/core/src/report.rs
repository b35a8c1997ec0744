//! JSON encodings of computation results. Rationals are `"num/den"` strings
//! and residues are integers; no floats are ever produced.

use serde_json::{json, Value};

use crate::derivations::DerivationBasis;
use crate::exactla::{FieldSpec, Matrix, Scalar, SubspaceBasis};
use crate::lietransform::{InnerDerivations, OperatorSpace};
use crate::quandle::Quandle;

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(Scalar::to_json).collect())
}

/// Row-major nested arrays.
pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| scalars(m.row(r))).collect())
}

pub fn subspace(s: &SubspaceBasis) -> Value {
    Value::Array(s.vectors().iter().map(|v| scalars(v)).collect())
}

pub fn field(f: FieldSpec) -> Value {
    Value::String(f.to_string())
}

/// `{"n": int, "table": [[int]]}`.
pub fn quandle(q: &Quandle) -> Value {
    serde_json::to_value(q.to_data()).expect("plain data")
}

/// `{"quandle": ..., "field": ..., "dim": int, "basis": [matrix]}`.
pub fn derivations(d: &DerivationBasis) -> Value {
    json!({
        "quandle": quandle(d.quandle()),
        "field": field(d.field()),
        "dim": d.dim(),
        "basis": d.basis().iter().map(|m| matrix(m.matrix())).collect::<Vec<_>>(),
    })
}

/// `{"dim": int, "basis": [flattened operator], "inner_dim": int, "outer_dim": int}`
/// with operators flattened column-major.
pub fn lie_transformation(space: &OperatorSpace, inner: &InnerDerivations) -> Value {
    json!({
        "dim": space.dim(),
        "basis": subspace(&space.basis()),
        "inner_dim": inner.inner_dim,
        "outer_dim": inner.outer_dim,
    })
}
