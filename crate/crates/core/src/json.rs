//! JSON renderings shared by the report types and the CLI.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::fgab::{FgAbGroup, GroupElement};

/// Exact JSON number for an arbitrary-precision integer.
pub fn int(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

/// Reads an integer from a JSON number, keeping full precision.
pub fn to_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
        _ => None,
    }
}

pub fn group(g: &FgAbGroup) -> Value {
    json!({
        "free": g.free_rank(),
        "torsion": ints(g.torsion()),
        "text": g.to_string(),
    })
}

pub fn element(x: &GroupElement) -> Value {
    json!({ "coeffs": ints(x.coeffs()), "group": x.group().to_string() })
}
