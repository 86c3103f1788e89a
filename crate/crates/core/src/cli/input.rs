// SPDX-License-Identifier: MIT OR Apache-2.0

//! Line-oriented ingestion: pair records (CSV or JSONL) and convolution
//! operand files.

use std::io::BufRead;

use serde_json::Value;

use crate::cli::{CliError, CliResult, InputFormat};
use crate::error::Error;
use crate::minplus::{ExtendedValue, MinPlusVector};
use crate::scalar::{NumericMode, Scalar};
use crate::sequence::{NumberPair, PairSequence};

/// A parsed number that remembers whether it was written as an integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Token {
    Int(i64),
    Float(f64),
}

impl Token {
    pub fn parse(text: &str) -> Option<Token> {
        let text = text.trim();
        if let Ok(v) = text.parse::<i64>() {
            return Some(Token::Int(v));
        }
        text.parse::<f64>().ok().map(Token::Float)
    }

    pub fn is_int(&self) -> bool {
        matches!(self, Token::Int(_))
    }

    fn is_positive(&self) -> bool {
        match *self {
            Token::Int(v) => v > 0,
            Token::Float(v) => v > 0.0 || v.is_nan(),
        }
    }

    fn from_json(value: &Value) -> Option<Token> {
        let n = value.as_number()?;
        match n.as_i64() {
            Some(v) => Some(Token::Int(v)),
            None => n.as_f64().map(Token::Float),
        }
    }
}

/// One input line that carried a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawRecord {
    pub line: usize,
    pub h: Token,
    /// `None` when the support column was omitted.
    pub s: Option<Token>,
}

impl RawRecord {
    pub fn all_int(&self) -> bool {
        self.h.is_int() && self.s.is_none_or(|s| s.is_int())
    }
}

fn number(text: &str, line: usize) -> CliResult<Token> {
    Token::parse(text).ok_or_else(|| {
        CliError::input(format!("cannot parse {:?} as a number (line {line})", text.trim()))
    })
}

/// Parses one line; blank lines yield `None`.
pub fn parse_record(text: &str, line: usize, format: InputFormat) -> CliResult<Option<RawRecord>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(None);
    }
    let (h, s) = match format {
        InputFormat::Csv => {
            let fields: Vec<&str> = text.split(',').collect();
            match fields.as_slice() {
                [h] => (number(h, line)?, None),
                [h, s] => (number(h, line)?, Some(number(s, line)?)),
                _ => {
                    return Err(CliError::input(format!(
                        "expected \"h\" or \"h,s\", found {} fields (line {line})",
                        fields.len()
                    )))
                }
            }
        }
        InputFormat::Jsonl => {
            let value: Value = serde_json::from_str(text)
                .map_err(|e| CliError::input(format!("malformed JSON: {e} (line {line})")))?;
            let field = |key: &str| -> CliResult<Option<Token>> {
                match value.get(key) {
                    None => Ok(None),
                    Some(v) => Token::from_json(v).map(Some).ok_or_else(|| {
                        CliError::input(format!("field {key:?} is not a number (line {line})"))
                    }),
                }
            };
            if !value.is_object() {
                return Err(CliError::input(format!("expected a JSON object (line {line})")));
            }
            let h = field("h")?
                .ok_or_else(|| CliError::input(format!("missing field \"h\" (line {line})")))?;
            (h, field("s")?)
        }
    };
    if let Some(s) = s {
        if !s.is_positive() {
            return Err(CliError::input(format!("support must be positive (line {line})")));
        }
    }
    Ok(Some(RawRecord { line, h, s }))
}

pub fn read_records(reader: &mut dyn BufRead, format: InputFormat) -> CliResult<Vec<RawRecord>> {
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::input(format!("read failed: {e}")))?;
        if let Some(rec) = parse_record(&line, idx + 1, format)? {
            records.push(rec);
        }
    }
    Ok(records)
}

/// Conversion from parsed tokens into a numeric mode.
pub trait FromToken: Sized {
    fn from_token(token: Token) -> Option<Self>;
}

impl FromToken for i64 {
    fn from_token(token: Token) -> Option<Self> {
        match token {
            Token::Int(v) => Some(v),
            Token::Float(_) => None,
        }
    }
}

impl FromToken for f64 {
    fn from_token(token: Token) -> Option<Self> {
        Some(match token {
            Token::Int(v) => v as f64,
            Token::Float(v) => v,
        })
    }
}

pub(crate) fn convert<T: FromToken>(token: Token, line: usize) -> CliResult<T> {
    T::from_token(token).ok_or_else(|| {
        CliError::input(format!("non-integer value in exact mode (line {line})"))
    })
}

/// Rewrites a library validation error to point at the input line.
pub(crate) fn locate(err: Error, lines: &[usize]) -> CliError {
    let line = err
        .position()
        .and_then(|p| lines.get(p.wrapping_sub(1)))
        .copied();
    let text = match (&err, line) {
        (Error::NonPositiveSupport { .. }, Some(l)) => format!("support must be positive (line {l})"),
        (Error::NonFinite { .. }, Some(l)) => format!("value is not finite (line {l})"),
        (Error::Magnitude { .. }, Some(l)) => {
            format!("value or running sum too large for exact mode (line {l})")
        }
        _ => err.to_string(),
    };
    CliError::input(text)
}

pub fn pair_from_record<T: Scalar + FromToken>(rec: &RawRecord) -> CliResult<NumberPair<T>> {
    let h = convert(rec.h, rec.line)?;
    let s = match rec.s {
        Some(s) => convert(s, rec.line)?,
        None => T::ONE,
    };
    Ok(NumberPair::new(h, s))
}

pub fn build_sequence<T: Scalar + FromToken>(records: &[RawRecord]) -> CliResult<PairSequence<T>> {
    let pairs = records
        .iter()
        .map(pair_from_record)
        .collect::<CliResult<Vec<NumberPair<T>>>>()?;
    let lines: Vec<usize> = records.iter().map(|r| r.line).collect();
    PairSequence::new(pairs).map_err(|e| locate(e, &lines))
}

/// Exact when every token is an integer, unless a flag says otherwise.
pub fn choose_mode(forced: Option<NumericMode>, all_int: bool) -> CliResult<NumericMode> {
    match forced {
        Some(NumericMode::Exact) if !all_int => Err(CliError::input(
            "--exact given but the input contains non-integer values",
        )),
        Some(mode) => Ok(mode),
        None if all_int => Ok(NumericMode::Exact),
        None => Ok(NumericMode::Float),
    }
}

/// Entries of a convolution operand file: one value per line, `inf` for top.
#[derive(Debug, Clone, PartialEq)]
pub struct OperandFile {
    pub entries: Vec<Option<Token>>,
    pub lines: Vec<usize>,
}

impl OperandFile {
    pub fn all_int(&self) -> bool {
        self.entries.iter().flatten().all(Token::is_int)
    }

    pub fn to_vector<T: Scalar + FromToken>(&self, what: &str) -> CliResult<MinPlusVector<T>> {
        self.entries
            .iter()
            .zip(&self.lines)
            .map(|(e, &line)| match e {
                None => Ok(ExtendedValue::Top),
                Some(tok) => {
                    let v: T = convert(*tok, line)?;
                    if !v.is_finite() {
                        return Err(CliError::input(format!("{what}: value is not finite (line {line})")));
                    }
                    if !v.in_range() {
                        return Err(CliError::input(format!(
                            "{what}: value too large for exact addition (line {line})"
                        )));
                    }
                    Ok(ExtendedValue::Finite(v))
                }
            })
            .collect()
    }
}

pub fn read_operand(reader: &mut dyn BufRead, what: &str) -> CliResult<OperandFile> {
    let mut file = OperandFile {
        entries: Vec::new(),
        lines: Vec::new(),
    };
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::input(format!("{what}: read failed: {e}")))?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let entry = if text == "inf" {
            None
        } else {
            Some(Token::parse(text).ok_or_else(|| {
                CliError::input(format!("{what}: cannot parse {text:?} as a number (line {})", idx + 1))
            })?)
        };
        file.entries.push(entry);
        file.lines.push(idx + 1);
    }
    Ok(file)
}
