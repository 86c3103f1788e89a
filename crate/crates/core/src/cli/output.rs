// SPDX-License-Identifier: MIT OR Apache-2.0

//! JSON rendering of results.
//!
//! Exact mode renders scores as strings (`"p/q"` for confidence, a
//! truncated 17-digit decimal for eccentricity) so no precision is lost to
//! a JSON reader; floating mode renders numbers with 17 significant digits.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::hci::HciAnswer;
use crate::minplus::{ExtendedValue, MinPlusVector};
use crate::psei::{MaxSumsProfile, PseiAnswer};
use crate::scalar::Scalar;
use crate::sequence::Scored;

/// Per-mode JSON fragments for scores and plain values.
pub trait JsonScalar: Scalar {
    fn conf_json(hit: Self, support: Self) -> String;
    fn ecc_json(hit: Self, len: Self) -> String;
    fn value_json(self) -> String;
}

impl JsonScalar for i64 {
    fn conf_json(hit: i64, support: i64) -> String {
        let g = hit.gcd(&support).max(1);
        format!("\"{}/{}\"", hit / g, support / g)
    }

    fn ecc_json(hit: i64, len: i64) -> String {
        format!("\"{}\"", exact_ecc_decimal(hit, len))
    }

    fn value_json(self) -> String {
        self.to_string()
    }
}

impl JsonScalar for f64 {
    fn conf_json(hit: f64, support: f64) -> String {
        format!("{:.16e}", hit / support)
    }

    fn ecc_json(hit: f64, len: f64) -> String {
        format!("{:.16e}", hit / len.sqrt())
    }

    fn value_json(self) -> String {
        format!("{self:.16e}")
    }
}

/// `h / √l` as 17 significant digits, truncated toward zero, in the same
/// layout as `{:.16e}`.
pub fn exact_ecc_decimal(hit: i64, len: i64) -> String {
    assert!(len > 0, "length must be positive");
    if hit == 0 {
        return "0.0000000000000000e0".to_string();
    }
    let sign = if hit < 0 { "-" } else { "" };
    let h2 = BigUint::from(hit.unsigned_abs()).pow(2);
    let l = BigUint::from(len as u64);
    let lo = BigUint::from(10u64).pow(16);
    let hi = BigUint::from(10u64).pow(17);
    let approx = hit.unsigned_abs() as f64 / (len as f64).sqrt();
    let mut exp = approx.log10().floor() as i32;
    loop {
        // digits = floor(|h| * 10^k / √l), and floor(√⌊x⌋) = floor(√x)
        let k = 16 - exp;
        let scale = BigUint::from(10u64).pow(2 * k.unsigned_abs());
        let ratio = if k >= 0 { (&h2 * &scale) / &l } else { &h2 / (&l * &scale) };
        let digits = ratio.sqrt();
        if digits >= hi {
            exp += 1;
        } else if digits < lo {
            exp -= 1;
        } else {
            let d = digits.to_string();
            return format!("{sign}{}.{}e{exp}", &d[..1], &d[1..]);
        }
    }
}

fn interval_json<T: JsonScalar>(best: &Scored<T>, value: String) -> String {
    format!(
        "{{\"start\":{},\"end\":{},\"value\":{value}}}",
        best.interval.start, best.interval.end
    )
}

pub fn render_hci<T: JsonScalar>(answer: &HciAnswer<T>) -> String {
    match &answer.best {
        None => "null".to_string(),
        Some(b) => interval_json(b, T::conf_json(b.hit, b.support)),
    }
}

pub fn render_psei<T: JsonScalar>(answer: &PseiAnswer<T>) -> String {
    let b = &answer.best;
    interval_json(b, T::ecc_json(b.hit, b.support))
}

fn list_json(key: &str, values: impl Iterator<Item = String>) -> String {
    let body: Vec<String> = values.collect();
    format!("{{\"{key}\":[{}]}}", body.join(","))
}

pub fn render_convolution<T: JsonScalar>(z: &MinPlusVector<T>) -> String {
    list_json(
        "z",
        z.iter().map(|e| match e {
            ExtendedValue::Finite(v) => v.value_json(),
            ExtendedValue::Top => "\"inf\"".to_string(),
        }),
    )
}

pub fn render_max_sums<T: JsonScalar>(profile: &MaxSumsProfile<T>) -> String {
    list_json("w", profile.as_slice().iter().map(|v| v.value_json()))
}
