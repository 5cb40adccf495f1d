//! Partitions, beta sets (first-column hook lengths) and rim-hook removal.
//!
//! A partition is stored as its weakly decreasing list of positive parts.
//! Hook removal works on the beta set: removing an `h`-hook moves one bead
//! down by `h` into an unoccupied slot, and the leg length of the removed
//! hook equals the number of beads strictly between the old and new slot.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive integers")]
    NonPositivePart,
    #[error("beta set entries must be distinct")]
    DuplicateBead,
}

/// A partition of a nonnegative integer: weakly decreasing positive parts.
/// The empty list is the partition `(0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from arbitrary positive entries; sorts them
    /// weakly decreasing. Zero entries are rejected.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self, PartitionError> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition `(0)`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Caller guarantees `parts` is weakly decreasing with positive entries.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The size `n` (number of cells).
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u64)
            .collect();
        Partition { parts }
    }

    /// Canonical beta set: bead `i` is `parts[i] + (k - 1 - i)` for `k` parts.
    pub fn to_beta_set(&self) -> BetaSet {
        let k = self.parts.len() as u64;
        let beads = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + k - 1 - i as u64)
            .collect();
        BetaSet { beads }
    }

    /// All ways of removing an `h`-rim-hook, ordered by the moved bead
    /// (descending). Empty when no `h`-hook exists, including `h > n`.
    pub fn remove_hooks(&self, h: u64) -> Vec<HookRemoval> {
        assert!(h >= 1, "hook size must be positive");
        let beta = self.to_beta_set();
        let beads = &beta.beads;
        let mut out = Vec::new();
        for (i, &b) in beads.iter().enumerate() {
            if b < h || beads.contains(&(b - h)) {
                continue;
            }
            let to = b - h;
            // beads strictly between the target and the moved bead
            let leg = beads.iter().filter(|&&x| x > to && x < b).count() as u64;
            let mut new_beads = beads.clone();
            new_beads[i] = to;
            let result = BetaSet::new(new_beads)
                .expect("bead move preserves distinctness")
                .to_partition();
            out.push(HookRemoval {
                result,
                leg_length: leg,
                bead_from: b,
                bead_to: to,
            });
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A set of first-column hook lengths, strictly decreasing. May be padded:
/// shifting all beads up by `j` and adding beads `j-1,...,1,0` represents
/// the same partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaSet {
    beads: Vec<u64>,
}

impl BetaSet {
    /// Builds a beta set from distinct entries, sorting them decreasing.
    pub fn new(mut beads: Vec<u64>) -> Result<Self, PartitionError> {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::DuplicateBead);
        }
        Ok(BetaSet { beads })
    }

    pub fn beads(&self) -> &[u64] {
        &self.beads
    }

    /// The same partition displayed with `extra` more beads.
    pub fn padded(&self, extra: u64) -> BetaSet {
        let mut beads: Vec<u64> = self.beads.iter().map(|&b| b + extra).collect();
        beads.extend((0..extra).rev());
        BetaSet { beads }
    }

    /// The partition this beta set represents; padding-invariant.
    pub fn to_partition(&self) -> Partition {
        let k = self.beads.len() as u64;
        let mut parts: Vec<u64> = self
            .beads
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (k - 1 - i as u64))
            .collect();
        parts.retain(|&p| p > 0);
        Partition::from_sorted_unchecked(parts)
    }
}

/// One rim-hook removal: the resulting partition, the leg length of the
/// removed hook, and the bead that moved.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookRemoval {
    pub result: Partition,
    pub leg_length: u64,
    pub bead_from: u64,
    pub bead_to: u64,
}

/// Iterator over all partitions of `n` in reverse lexicographic order:
/// `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u64) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions {
        current: Some(first),
    }
}

pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_sorted_unchecked(cur.clone());
        if let Some(pos) = cur.iter().rposition(|&p| p > 1) {
            // decrement the rightmost part > 1, redistribute the freed cells
            let ones = (cur.len() - pos - 1) as u64;
            let mut next = cur[..=pos].to_vec();
            next[pos] -= 1;
            let d = next[pos];
            let mut rem = ones + 1;
            while rem > d {
                next.push(d);
                rem -= d;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}
