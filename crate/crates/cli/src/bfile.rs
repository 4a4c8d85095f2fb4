//! OEIS b-file parsing: plain text lines of `index value`, `#` comments
//! and blank lines skipped, indices strictly consecutive after the
//! first.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

#[derive(Debug)]
pub enum BFileError {
    Io(std::io::Error),
    /// Malformed line, with its 1-based line number.
    Parse { line: usize, content: String },
    /// Non-consecutive index, with the offending line number.
    IndexGap { line: usize, expected: i64, found: i64 },
    Empty,
}

impl fmt::Display for BFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BFileError::Io(e) => write!(f, "read error: {e}"),
            BFileError::Parse { line, content } => {
                write!(f, "line {line}: malformed entry {content:?}")
            }
            BFileError::IndexGap { line, expected, found } => {
                write!(f, "line {line}: index gap, expected {expected}, found {found}")
            }
            BFileError::Empty => write!(f, "no entries"),
        }
    }
}

impl std::error::Error for BFileError {}

/// Parsed b-file: sequence id (if known) and `(index, value)` entries.
#[derive(Debug, Clone)]
pub struct BFile {
    pub id: Option<String>,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn first_index(&self) -> i64 {
        self.entries[0].0
    }

    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parses b-file text. Any whitespace run separates index and value;
/// anything after the two fields is rejected.
pub fn parse_bfile(text: &str, id: Option<String>) -> Result<BFile, BFileError> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (idx, val) = match (fields.next(), fields.next(), fields.next()) {
            (Some(i), Some(v), None) => (i, v),
            _ => {
                return Err(BFileError::Parse {
                    line: lineno + 1,
                    content: raw.to_string(),
                })
            }
        };
        let idx = i64::from_str(idx).map_err(|_| BFileError::Parse {
            line: lineno + 1,
            content: raw.to_string(),
        })?;
        let val = BigInt::from_str(val).map_err(|_| BFileError::Parse {
            line: lineno + 1,
            content: raw.to_string(),
        })?;
        if let Some(&(prev, _)) = entries.last() {
            if idx != prev + 1 {
                return Err(BFileError::IndexGap {
                    line: lineno + 1,
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
    Ok(BFile { id, entries })
}

/// Reads and parses a b-file from disk.
pub fn ingest_bfile(path: &Path, id: Option<String>) -> Result<BFile, BFileError> {
    let text = std::fs::read_to_string(path).map_err(BFileError::Io)?;
    parse_bfile(&text, id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let b = parse_bfile("# comment\n0 1\n1 3\n2 2\n", None).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.first_index(), 0);
        assert_eq!(b.entries[2].1, BigInt::from(2));
    }

    #[test]
    fn index_gap_is_an_error() {
        match parse_bfile("0 1\n2 3\n", None) {
            Err(BFileError::IndexGap { line, expected, found }) => {
                assert_eq!((line, expected, found), (2, 1, 2));
            }
            other => panic!("expected index gap, got {other:?}"),
        }
    }

    #[test]
    fn malformed_line_reports_its_number() {
        match parse_bfile("1 1\n2 two\n", None) {
            Err(BFileError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_bfile("1 1 1\n", None),
            Err(BFileError::Parse { .. })
        ));
    }

    #[test]
    fn whitespace_runs_tolerated() {
        let b = parse_bfile("1\t10\n2   20\n", None).unwrap();
        assert_eq!(b.len(), 2);
    }
}
