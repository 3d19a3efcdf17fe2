//! Deterministic number formatting and JSON/CSV emission.

use std::str::FromStr;

use serde_json::{Map, Number, Value};

/// Formats `x` with 17 significant digits, trailing zeros dropped.
/// Positional notation for decimal exponents in `-5..=16`.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{:.16e}", x);
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = mantissa.strip_prefix('-').map_or(("", mantissa), |m| ("-", m));
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    if !(-5..=16).contains(&exp) {
        let (head, tail) = digits.split_at(1);
        let frac = if tail.is_empty() { String::new() } else { format!(".{tail}") };
        return format!("{sign}{head}{frac}e{exp}");
    }
    if exp < 0 {
        return format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize));
    }
    let int_len = exp as usize + 1;
    if digits.len() <= int_len {
        format!("{sign}{digits}{}", "0".repeat(int_len - digits.len()))
    } else {
        format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
    }
}

/// A JSON number carrying exactly the [`fmt17`] text; `null` if not finite.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&fmt17(x)).expect("formatted number is valid JSON"))
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn object(fields: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (key, value) in fields {
        m.insert(key.to_string(), value);
    }
    Value::Object(m)
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable value");
    s.push('\n');
    s
}

pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
