//! OEIS b-file parsing and sequence comparison.
//!
//! A b-file is plain ASCII, one `<index> <value>` pair per line; blank
//! lines and lines starting with `#` are ignored. Indices must be
//! strictly increasing.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: expected '<index> <value>', got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: indices must be strictly increasing")]
    NonIncreasing { line: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, BigUint)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<BFile, BFileError> {
        let mut entries: Vec<(i64, BigUint)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split_whitespace();
            let parsed = (|| {
                let idx: i64 = fields.next()?.parse().ok()?;
                let val: BigUint = fields.next()?.parse().ok()?;
                if fields.next().is_some() {
                    return None;
                }
                Some((idx, val))
            })();
            let (idx, val) = parsed.ok_or_else(|| BFileError::Malformed {
                line,
                content: trimmed.to_string(),
            })?;
            if let Some(&(prev, _)) = entries.last() {
                if idx <= prev {
                    return Err(BFileError::NonIncreasing { line });
                }
            }
            entries.push((idx, val));
        }
        Ok(BFile { entries })
    }
}

/// Result of comparing a computed sequence against a b-file over their
/// overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceDiff {
    /// Number of terms compared.
    Agreement(usize),
    /// First divergence: (sequence index n, expected from b-file, computed).
    Divergence {
        n: u64,
        expected: BigUint,
        computed: BigUint,
    },
}

/// Compares b-file entries against `value(n)`. A b-file index `i` is
/// matched to sequence index `n = i + offset`; entries whose shifted
/// index falls outside 1..=n_max are skipped.
pub fn compare<F>(bfile: &BFile, offset: i64, n_max: u64, value: F) -> SequenceDiff
where
    F: Fn(u64) -> BigUint,
{
    let mut compared = 0usize;
    for (idx, expected) in &bfile.entries {
        let n = idx + offset;
        if n < 1 || n as u64 > n_max {
            continue;
        }
        let n = n as u64;
        let computed = value(n);
        if &computed != expected {
            return SequenceDiff::Divergence {
                n,
                expected: expected.clone(),
                computed,
            };
        }
        compared += 1;
    }
    SequenceDiff::Agreement(compared)
}
