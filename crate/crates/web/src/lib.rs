// SPDX-License-Identifier: MIT OR Apache-2.0

//! Browser bindings for the interval solvers.
//!
//! Each exported function takes the raw text of a form field and returns a
//! JSON string: either `{"ok":true, ...}` with the data the page draws, or
//! `{"ok":false,"error":"..."}`.

#![forbid(unsafe_code)]

use conint::hci::compute_hci;
use conint::minplus::{blocked_convolution, ExtendedValue, MinPlusVector};
use conint::psei::{compute_psei, PseiCase};
use conint::{PairSequence, Scalar, Scored};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Upper bound on input size; the page runs on the main thread.
pub const MAX_ITEMS: usize = 20_000;

fn number(field: &str, line: usize) -> Result<f64, String> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| format!("line {line}: cannot parse {:?}", field.trim()))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("line {line}: value is not finite"))
    }
}

/// `h` or `h,s` per line; commas and whitespace both separate fields.
pub fn parse_pairs(text: &str) -> Result<Vec<(f64, f64)>, String> {
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let pair = match fields.as_slice() {
            [] => continue,
            [h] => (number(h, idx + 1)?, 1.0),
            [h, s] => (number(h, idx + 1)?, number(s, idx + 1)?),
            _ => return Err(format!("line {}: expected h or h,s", idx + 1)),
        };
        if pair.1 <= 0.0 {
            return Err(format!("support must be positive (line {})", idx + 1));
        }
        pairs.push(pair);
    }
    if pairs.is_empty() {
        return Err("enter at least one value".into());
    }
    if pairs.len() > MAX_ITEMS {
        return Err(format!("at most {MAX_ITEMS} values"));
    }
    Ok(pairs)
}

fn integral(values: impl IntoIterator<Item = f64>) -> Option<Vec<i64>> {
    values
        .into_iter()
        .map(|v| (v.fract() == 0.0 && v.abs() < 1e15).then_some(v as i64))
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn interval_json<T: Scalar>(best: &Scored<T>, value: f64, label: String) -> Value {
    json!({
        "start": best.interval.start,
        "end": best.interval.end,
        "value": value,
        "label": label,
    })
}

fn hci_result<T: Scalar>(seq: &PairSequence<T>, lower: T, label: impl Fn(T, T) -> String) -> Result<Value, String> {
    let answer = compute_hci(seq, lower).map_err(|e| e.to_string())?;
    Ok(match &answer.best {
        None => Value::Null,
        Some(b) => interval_json(b, b.confidence(), label(b.hit, b.support)),
    })
}

/// Maximum confidence with hit-sum at least `lower`, plus the boundary
/// points `(P_S[t], P_H[t])` for plotting.
pub fn hci_report(text: &str, lower: f64) -> Result<Value, String> {
    let pairs = parse_pairs(text)?;
    if !lower.is_finite() {
        return Err("lower bound must be finite".into());
    }
    let hits = integral(pairs.iter().map(|p| p.0));
    let sups = integral(pairs.iter().map(|p| p.1));
    let best = match (hits, sups, integral([lower])) {
        (Some(h), Some(s), Some(l)) => {
            let raw: Vec<(i64, i64)> = h.into_iter().zip(s).collect();
            let seq = PairSequence::from_pairs(&raw).map_err(|e| e.to_string())?;
            hci_result(&seq, l[0], |h, s| {
                let g = gcd(h, s).max(1);
                format!("{}/{}", h / g, s / g)
            })?
        }
        _ => {
            let seq = PairSequence::from_pairs(&pairs).map_err(|e| e.to_string())?;
            hci_result(&seq, lower, |h, s| format!("{:.6}", h / s))?
        }
    };
    let mut points = vec![[0.0, 0.0]];
    for &(h, s) in &pairs {
        let [x, y] = *points.last().expect("seeded");
        points.push([x + s, y + h]);
    }
    Ok(json!({ "ok": true, "best": best, "points": points }))
}

/// Maximum eccentricity with length at least `min_len`, plus the hits.
pub fn psei_report(text: &str, min_len: usize) -> Result<Value, String> {
    let pairs = parse_pairs(text)?;
    if pairs.iter().any(|p| p.1 != 1.0) {
        return Err("eccentricity needs plain values (no support column)".into());
    }
    let hits: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let (best, case) = match integral(hits.iter().copied()) {
        Some(h) => {
            let a = compute_psei(&PairSequence::from_hits(&h).map_err(|e| e.to_string())?, min_len)
                .map_err(|e| e.to_string())?;
            (interval_json(&a.best, a.eccentricity(), format!("{:.6}", a.eccentricity())), a.case)
        }
        None => {
            let a = compute_psei(&PairSequence::from_hits(&hits).map_err(|e| e.to_string())?, min_len)
                .map_err(|e| e.to_string())?;
            (interval_json(&a.best, a.eccentricity(), format!("{:.6}", a.eccentricity())), a.case)
        }
    };
    let case = match case {
        PseiCase::ZeroSum => "zero",
        PseiCase::PositiveSum => "positive",
        PseiCase::NegativeSum => "negative",
    };
    Ok(json!({ "ok": true, "best": best, "case": case, "hits": hits }))
}

fn operand(text: &str, what: &str) -> Result<MinPlusVector<f64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|f| !f.is_empty())
        .map(|f| {
            if f == "inf" {
                Ok(ExtendedValue::Top)
            } else {
                number(f, 1)
                    .map(ExtendedValue::Finite)
                    .map_err(|_| format!("{what}: cannot parse {f:?}"))
            }
        })
        .collect()
}

/// Min-plus convolution of two equal-length lists (`inf` for top).
pub fn convolve_report(x: &str, y: &str) -> Result<Value, String> {
    let (x, y) = (operand(x, "x")?, operand(y, "y")?);
    if x.len() > 2000 {
        return Err("at most 2000 entries per operand".into());
    }
    let z = blocked_convolution(&x, &y).map_err(|e| e.to_string())?;
    let entries: Vec<Value> = z
        .iter()
        .map(|e| match e {
            ExtendedValue::Finite(v) => json!(v),
            ExtendedValue::Top => json!("inf"),
        })
        .collect();
    Ok(json!({ "ok": true, "z": entries }))
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "ok": false, "error": e }).to_string(),
    }
}

#[wasm_bindgen]
pub fn hci_explore(text: &str, lower: f64) -> String {
    respond(hci_report(text, lower))
}

#[wasm_bindgen]
pub fn psei_explore(text: &str, min_len: usize) -> String {
    respond(psei_report(text, min_len))
}

#[wasm_bindgen]
pub fn convolve(x: &str, y: &str) -> String {
    respond(convolve_report(x, y))
}
