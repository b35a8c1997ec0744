//! Browser bindings. Each export takes a quandle as either a builtin spec
//! (`dihedral:5`, `catalog:3.2`, `s3`, ...) or a `{"n", "table"}` JSON
//! object, and returns a JSON string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use qderiv::derivations::derivation_space;
use qderiv::exactla::FieldSpec;
use qderiv::lietransform::{inner_derivations, lie_transformation_algebra};
use qderiv::quandle::{builtin, Quandle, QuandleData};
use qderiv::report;

/// Largest order the page will attempt; the operator closure is `O(n^6)`.
pub const MAX_ORDER: usize = 16;

pub fn parse_quandle(input: &str) -> Result<Quandle, String> {
    let input = input.trim();
    let q = if input.starts_with('{') {
        let data: QuandleData = serde_json::from_str(input).map_err(|e| e.to_string())?;
        Quandle::from_data(&data)
    } else {
        builtin(input)
    }
    .map_err(|e| e.to_string())?;
    if q.order() > MAX_ORDER {
        return Err(format!("order {} is above the demo limit of {MAX_ORDER}", q.order()));
    }
    Ok(q)
}

fn parse_field(field: &str) -> Result<FieldSpec, String> {
    field.parse().map_err(|e: qderiv::exactla::FieldError| e.to_string())
}

pub fn quandle_info_json(input: &str) -> Result<String, String> {
    let q = parse_quandle(input)?;
    Ok(json!({
        "quandle": report::quandle(&q),
        "props": q.props(),
        "dihedral": q.is_dihedral(),
    })
    .to_string())
}

pub fn derivations_json(input: &str, field: &str) -> Result<String, String> {
    let q = parse_quandle(input)?;
    let f = parse_field(field)?;
    Ok(report::derivations(&derivation_space(&q, f)).to_string())
}

pub fn lie_algebra_json(input: &str, field: &str) -> Result<String, String> {
    let q = parse_quandle(input)?;
    let f = parse_field(field)?;
    let space = lie_transformation_algebra(&q, f);
    let mut v = report::lie_transformation(&space, &inner_derivations(&q, f));
    v["log"] = space
        .log()
        .iter()
        .map(|e| json!({ "label": e.label, "dim": e.dim }))
        .collect();
    Ok(v.to_string())
}

#[wasm_bindgen]
pub fn quandle_info(input: &str) -> Result<String, JsValue> {
    quandle_info_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn derivations(input: &str, field: &str) -> Result<String, JsValue> {
    derivations_json(input, field).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lie_algebra(input: &str, field: &str) -> Result<String, JsValue> {
    lie_algebra_json(input, field).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn info_accepts_spec_and_table() {
        let a = parse(&quandle_info_json("dihedral:3").unwrap());
        let b = parse(&quandle_info_json(r#"{"n":3,"table":[[0,2,1],[2,1,0],[1,0,2]]}"#).unwrap());
        assert_eq!(a, b);
        assert_eq!(a["props"]["latin"], true);
        assert_eq!(a["dihedral"], true);
    }

    #[test]
    fn derivations_over_gf3() {
        let v = parse(&derivations_json("dihedral:3", "GF(3)").unwrap());
        assert_eq!(v["dim"], 2);
        let v = parse(&derivations_json("dihedral:3", "Q").unwrap());
        assert_eq!(v["dim"], 0);
    }

    #[test]
    fn lie_algebra_of_trivial_three() {
        let v = parse(&lie_algebra_json("trivial:3", "Q").unwrap());
        assert_eq!(v["dim"], 4);
        assert_eq!(v["log"][0]["label"], "L0");
    }

    #[test]
    fn errors_are_messages() {
        assert!(quandle_info_json("cube").unwrap_err().contains("cannot parse quandle"));
        assert!(derivations_json("s3", "GF(6)").unwrap_err().contains("not a prime"));
        assert!(quandle_info_json(r#"{"n":2,"table":[[0,0],[0,1]]}"#).is_err());
        assert!(quandle_info_json("trivial:40").unwrap_err().contains("demo limit"));
    }
}
