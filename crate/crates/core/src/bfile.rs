//! OEIS b-files: one `index value` pair per line, `#` comments allowed.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::count::{CountError, WilfCounter};
use crate::BigCount;

/// Where A098859's b-file lives upstream.
pub const OEIS_URL: &str = "https://oeis.org/A098859/b098859.txt";

/// f(0..=500), shipped with the crate (see the header of the file for its
/// provenance).
pub const BUNDLED: &str = include_str!("../../../data/b098859.txt");

/// The bundled table, parsed.
pub fn bundled() -> BFile {
    parse_bfile(BUNDLED, "data/b098859.txt").expect("the bundled b-file is well formed")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: expected index {expected}, found {found}")]
    Gap { line: usize, expected: u64, found: u64 },
    #[error("b-file has no entries")]
    Empty,
    #[error("b-file covers {first}..={last}, cannot check up to {upto}")]
    Coverage { first: u64, last: u64, upto: u64 },
    #[error(transparent)]
    Count(#[from] CountError),
}

/// A parsed b-file with contiguous indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub source: String,
    entries: Vec<(u64, BigCount)>,
}

impl BFile {
    pub fn entries(&self) -> &[(u64, BigCount)] {
        &self.entries
    }

    pub fn offset(&self) -> u64 {
        self.entries[0].0
    }

    pub fn last_index(&self) -> u64 {
        self.entries[self.entries.len() - 1].0
    }

    pub fn get(&self, n: u64) -> Option<&BigCount> {
        let i = n.checked_sub(self.offset())? as usize;
        self.entries.get(i).map(|(_, v)| v)
    }
}

/// Parses a b-file. Indices must increase by one from the first row.
pub fn parse_bfile(text: &str, source: &str) -> Result<BFile, BFileError> {
    let mut entries: Vec<(u64, BigCount)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim();
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let bad = |message: &str| BFileError::Parse {
            line,
            message: message.to_string(),
        };
        let mut fields = row.split_whitespace();
        let (Some(idx), Some(val)) = (fields.next(), fields.next()) else {
            return Err(bad("expected `index value`"));
        };
        if fields.next().is_some() {
            return Err(bad("trailing tokens after the value"));
        }
        let idx: u64 = idx
            .parse()
            .map_err(|_| bad(&format!("index `{idx}` is not a nonnegative integer")))?;
        if !val.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(&format!("value `{val}` is not a nonnegative integer")));
        }
        let val: BigCount = val.parse().map_err(|_| bad("unreadable value"))?;
        if let Some(&(prev, _)) = entries.last() {
            if idx != prev + 1 {
                return Err(BFileError::Gap {
                    line,
                    expected: prev + 1,
                    found: idx,
                });
            }
        }
        entries.push((idx, val));
    }
    if entries.is_empty() {
        return Err(BFileError::Empty);
    }
    Ok(BFile {
        source: source.to_string(),
        entries,
    })
}

/// Emits `index SP value LF` rows starting at `offset`.
pub fn write_bfile<W: Write>(offset: u64, values: &[BigCount], mut out: W) -> io::Result<()> {
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {}", offset + i as u64, v)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub source: String,
    pub first: u64,
    pub upto: u64,
    pub checked: u64,
    pub mismatch: Option<Mismatch>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Recomputes `f(offset..=upto)` and compares row by row, stopping at the
/// first disagreement.
pub fn verify(bfile: &BFile, upto: u64, counter: &mut dyn WilfCounter) -> Result<VerifyReport, BFileError> {
    let (first, last) = (bfile.offset(), bfile.last_index());
    if upto < first || upto > last {
        return Err(BFileError::Coverage { first, last, upto });
    }
    let start = Instant::now();
    let values = counter.count_upto(upto)?;
    let mut checked = 0;
    let mut mismatch = None;
    for (n, expected) in &bfile.entries()[..=(upto - first) as usize] {
        checked += 1;
        let got = &values[*n as usize];
        if got != expected {
            mismatch = Some(Mismatch {
                n: *n,
                expected: expected.to_string(),
                got: got.to_string(),
            });
            break;
        }
    }
    Ok(VerifyReport {
        source: bfile.source.clone(),
        first,
        upto,
        checked,
        mismatch,
        elapsed: start.elapsed(),
    })
}
