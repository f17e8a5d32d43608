//! OEIS b-file reading and sequence comparison.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use crate::seq::ArithSeq;

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Parsed `index value` pairs with strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub source_name: String,
    pub entries: Vec<(u64, BigInt)>,
}

impl BFile {
    /// Accepts blank lines and `#` comments; any other line must be exactly
    /// two integer fields.
    pub fn parse(source_name: impl Into<String>, text: &str) -> Result<Self, BFileError> {
        let source_name = source_name.into();
        let err = |line: usize, message: String| BFileError::Parse {
            source_name: source_name.clone(),
            line,
            message,
        };
        let mut entries: Vec<(u64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(
                    line_no,
                    format!("expected `index value`, got `{line}`"),
                ));
            };
            let idx: u64 = idx
                .parse()
                .map_err(|_| err(line_no, format!("bad index `{idx}`")))?;
            let val: BigInt = val
                .parse()
                .map_err(|_| err(line_no, format!("bad value `{val}`")))?;
            if let Some(&(prev, _)) = entries.last() {
                if idx <= prev {
                    return Err(err(
                        line_no,
                        format!("index {idx} does not increase past {prev}"),
                    ));
                }
            }
            entries.push((idx, val));
        }
        Ok(Self {
            source_name,
            entries,
        })
    }

    pub fn read(path: &Path) -> Result<Self, BFileError> {
        let text = std::fs::read_to_string(path).map_err(|source| BFileError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(path.display().to_string(), &text)
    }

    /// Largest index present.
    pub fn max_index(&self) -> Option<u64> {
        self.entries.last().map(|&(i, _)| i)
    }
}

/// Outcome of comparing a sequence against a b-file on their common indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// Number of b-file entries whose index lies in `1..=n_max`.
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mismatch at n = {}: b-file has {}, computed {}",
            self.index, self.expected, self.actual
        )
    }
}

pub fn compare(seq: &ArithSeq, bfile: &BFile) -> Comparison {
    let mut compared = 0;
    for (idx, expected) in &bfile.entries {
        let Ok(n) = usize::try_from(*idx) else { break };
        if n == 0 {
            continue;
        }
        if n > seq.n_max() {
            break;
        }
        compared += 1;
        let actual = seq.get(n);
        if actual != expected {
            return Comparison {
                compared,
                first_mismatch: Some(Mismatch {
                    index: *idx,
                    expected: expected.clone(),
                    actual: actual.clone(),
                }),
            };
        }
    }
    Comparison {
        compared,
        first_mismatch: None,
    }
}
