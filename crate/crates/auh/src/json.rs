//! Distribution file format: `{"probs": [...]}` with strings for exact
//! rationals (`"3/8"`, `"0.35"`) or plain numbers for floats. Mixed arrays
//! are rejected so exactness is never silently lost.

use serde_json::Value;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::real::Real;

pub fn dist_to_json(dist: &Distribution) -> Value {
    let probs: Vec<Value> = dist
        .probs()
        .iter()
        .map(|p| match p {
            Real::Exact(_) => Value::String(p.to_string()),
            Real::Approx(v) => serde_json::json!(v),
        })
        .collect();
    serde_json::json!({ "probs": probs })
}

pub fn dist_to_string(dist: &Distribution) -> String {
    dist_to_json(dist).to_string()
}

pub fn dist_from_json(value: &Value) -> Result<Distribution> {
    let arr = value
        .get("probs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("expected an object with a \"probs\" array".into()))?;
    if arr.is_empty() {
        return Err(Error::Parse("\"probs\" is empty".into()));
    }
    let all_strings = arr.iter().all(Value::is_string);
    let all_numbers = arr.iter().all(Value::is_number);
    if !all_strings && !all_numbers {
        return Err(Error::Parse(
            "\"probs\" must be all strings (exact) or all numbers (float)".into(),
        ));
    }
    let probs: Vec<Real> = if all_strings {
        arr.iter()
            .map(|v| Real::parse(v.as_str().expect("checked string")))
            .collect::<Result<_>>()?
    } else {
        arr.iter()
            .map(|v| {
                v.as_f64()
                    .map(Real::approx)
                    .ok_or_else(|| Error::Parse(format!("bad number {v}")))
            })
            .collect::<Result<_>>()?
    };
    Distribution::new(probs)
}

pub fn dist_from_str(s: &str) -> Result<Distribution> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    dist_from_json(&value)
}
