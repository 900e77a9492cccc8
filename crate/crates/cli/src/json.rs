//! Coefficient JSON for multivectors.
//!
//! `{"space": "el3", "coeffs": {"e20": -0.25, "e123": 1.0}}` with the conventional
//! blade names. Omitted names are zero and unknown names are rejected. A
//! coefficient is only omitted on output when it is exactly `+0.0`, so a
//! re-parse gives back the same bits.

use elpga::{basis, Multivector, Space};
use serde_json::{Map, Value};

pub fn to_json(m: &Multivector) -> Value {
    let space = m.space();
    let mut coeffs = Map::new();
    for name in basis::names(space) {
        let c = m.get(name.index);
        if c.to_bits() != 0 {
            coeffs.insert(name.name.to_string(), Value::from(name.sign * c));
        }
    }
    let mut out = Map::new();
    out.insert("space".into(), Value::from(space.name()));
    out.insert("coeffs".into(), Value::Object(coeffs));
    Value::Object(out)
}

pub fn parse_space(v: &Value) -> Result<Space, String> {
    let name = v.as_str().ok_or_else(|| format!("space must be a string, got {v}"))?;
    Space::from_name(name).ok_or_else(|| format!("unknown space `{name}`"))
}

/// Parses the coefficient form, checking the space tag against `expected`
/// when one is given.
pub fn from_json(v: &Value, expected: Option<Space>) -> Result<Multivector, String> {
    let obj = v.as_object().ok_or("multivector must be an object")?;
    for key in obj.keys() {
        if key != "space" && key != "coeffs" {
            return Err(format!("unknown multivector field `{key}`"));
        }
    }
    let space = match (obj.get("space"), expected) {
        (Some(s), exp) => {
            let space = parse_space(s)?;
            if let Some(exp) = exp {
                if exp != space {
                    return Err(format!("multivector is in {space}, expected {exp}"));
                }
            }
            space
        }
        (None, Some(exp)) => exp,
        (None, None) => return Err("multivector is missing `space`".into()),
    };
    let coeffs = match obj.get("coeffs") {
        Some(Value::Object(c)) => c,
        Some(other) => return Err(format!("coeffs must be an object, got {other}")),
        None => return Err("multivector is missing `coeffs`".into()),
    };
    let mut out = vec![0.0; space.blade_count()];
    for (key, value) in coeffs {
        let name = basis::lookup(space, key).ok_or_else(|| format!("unknown basis blade `{key}` in {space}"))?;
        let c = value.as_f64().ok_or_else(|| format!("coefficient `{key}` must be a number"))?;
        out[name.index] = name.sign * c;
    }
    Multivector::from_coeffs(space, &out).map_err(|e| e.to_string())
}

/// `x` rounded to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

/// Rounds every number inside `v` to `digits` significant digits.
pub fn round_all(v: &Value, digits: usize) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if !n.is_i64() && !n.is_u64() => Value::from(round_sig(x, digits)),
            _ => v.clone(),
        },
        Value::Array(items) => Value::Array(items.iter().map(|x| round_all(x, digits)).collect()),
        Value::Object(map) => Value::Object(map.iter().map(|(k, x)| (k.clone(), round_all(x, digits))).collect()),
        _ => v.clone(),
    }
}

/// Magnitudes below this are treated as rounding noise in [`golden_form`].
pub const GOLDEN_FLOOR: f64 = 1e-12;

/// The comparison form of a report: numbers rounded to 12 significant
/// digits, with noise below [`GOLDEN_FLOOR`] flushed to `0`.
pub fn golden_form(v: &Value) -> Value {
    fn flush(v: &Value) -> Value {
        match v {
            Value::Number(n) => match n.as_f64() {
                Some(x) if !n.is_i64() && !n.is_u64() && x.abs() < GOLDEN_FLOOR => Value::from(0.0),
                _ => v.clone(),
            },
            Value::Array(items) => Value::Array(items.iter().map(flush).collect()),
            Value::Object(map) => Value::Object(map.iter().map(|(k, x)| (k.clone(), flush(x))).collect()),
            _ => v.clone(),
        }
    }
    round_all(&flush(v), 12)
}
