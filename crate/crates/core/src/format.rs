//! Text encodings of a tabulated sequence.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{invalid, Error};
use crate::seq::ArithSeq;

/// Largest integer magnitude a JSON consumer using doubles reads exactly.
pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    BFile,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "bfile" => Ok(Format::BFile),
            other => Err(invalid(format!("unknown format `{other}`"))),
        }
    }
}

pub fn render(seq: &ArithSeq, format: Format) -> String {
    match format {
        Format::Csv => to_csv(seq),
        Format::Json => to_json(seq),
        Format::BFile => to_bfile(seq),
    }
}

/// `n,value` rows under a header line.
pub fn to_csv(seq: &ArithSeq) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in seq.iter() {
        writeln!(out, "{n},{v}").unwrap();
    }
    out
}

/// One `index value` line per term, no header.
pub fn to_bfile(seq: &ArithSeq) -> String {
    let mut out = String::new();
    for (n, v) in seq.iter() {
        writeln!(out, "{n} {v}").unwrap();
    }
    out
}

/// A JSON array; values beyond ±(2^53 - 1) are written as decimal strings.
pub fn to_json(seq: &ArithSeq) -> String {
    let items: Vec<serde_json::Value> = seq.values().iter().map(json_value).collect();
    serde_json::Value::Array(items).to_string()
}

fn json_value(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(small) if small.abs() <= MAX_SAFE_INTEGER => small.into(),
        _ => v.to_string().into(),
    }
}
