//! Equation input. Errors name the offending field.

use std::io::Read;

use g2disc_core::exactmath::QPoly;
use g2disc_core::serial::parse_rat;
use g2disc_core::{BigRational, GenusTwoEquation};
use serde_json::Value;

use crate::Failure;

/// Reads `-` as stdin and `@path` as a file; anything else is the JSON itself.
fn source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn coeffs(obj: &serde_json::Map<String, Value>, field: &str, required: bool) -> Result<Vec<BigRational>, Failure> {
    let Some(v) = obj.get(field) else {
        return if required {
            Err(Failure::usage(format!("missing field `{field}`")))
        } else {
            Ok(Vec::new())
        };
    };
    let Value::Array(items) = v else {
        return Err(Failure::usage(format!("field `{field}`: expected an array of coefficients")));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let text = match c {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                other => return Err(Failure::usage(format!("field `{field}[{i}]`: expected an exact number, got {other}"))),
            };
            parse_rat(&text).map_err(|e| Failure::usage(format!("field `{field}[{i}]`: {e}")))
        })
        .collect()
}

pub fn equation(arg: &str) -> Result<GenusTwoEquation, Failure> {
    let text = source(arg)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("equation JSON: {e}")))?;
    let Value::Object(obj) = v else {
        return Err(Failure::usage("equation JSON: expected an object {\"P\": [..], \"Q\": [..]}"));
    };
    if let Some(k) = obj.keys().find(|k| *k != "P" && *k != "Q") {
        return Err(Failure::usage(format!("unknown field `{k}`")));
    }
    let p = coeffs(&obj, "P", true)?;
    let q = coeffs(&obj, "Q", false)?;
    if p.len() > 7 && p[7..].iter().any(|c| c != &BigRational::from_integer(0.into())) {
        return Err(Failure::usage("field `P`: degree must be at most 6"));
    }
    if q.len() > 4 && q[4..].iter().any(|c| c != &BigRational::from_integer(0.into())) {
        return Err(Failure::usage("field `Q`: degree must be at most 3"));
    }
    GenusTwoEquation::new(QPoly::new(p), QPoly::new(q)).map_err(|e| Failure::usage(e.to_string()))
}
