//! The explicit bijections between sd-partitions and restricted binary
//! partitions, and the parity maps behind the counting recurrences.
//!
//! An rb-partition is a binary partition in which a part 2^i (i ≥ 1)
//! forces a part 2^{i-1}. It is stored as its multiplicity vector:
//! `mults[j]` is the multiplicity of 2^j. In canonical form the trailing
//! entry is nonzero, so restrictedness means every entry is positive.

use thiserror::Error;

use crate::classify::{is_sd, is_sd_extension_of};
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectError {
    #[error("input partition is not strongly decreasing")]
    NotSd,
    #[error("multiplicity vector is not a restricted binary partition")]
    NotRestricted,
    #[error("partition is not an sd-extension of the given suffix")]
    NotSdExtension,
    #[error("smallest part does not match |rho|")]
    SmallestPartMismatch,
    #[error("smallest part must be at least 3")]
    SmallestPartTooSmall,
    #[error("partition has the wrong parity for this map")]
    WrongParity,
}

/// Restricted binary partition, stored as multiplicities of powers of 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RbPartition {
    mults: Vec<u64>,
}

impl RbPartition {
    /// Builds from a multiplicity vector; trailing zeros are stripped,
    /// interior zeros violate restrictedness.
    pub fn new(mut mults: Vec<u64>) -> Result<Self, BijectError> {
        while mults.last() == Some(&0) {
            mults.pop();
        }
        if mults.contains(&0) {
            return Err(BijectError::NotRestricted);
        }
        Ok(RbPartition { mults })
    }

    pub fn empty() -> Self {
        RbPartition { mults: Vec::new() }
    }

    pub fn mults(&self) -> &[u64] {
        &self.mults
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// The partitioned number Σ mults[j]·2^j.
    pub fn size(&self) -> u64 {
        self.mults
            .iter()
            .enumerate()
            .map(|(j, &m)| m << j)
            .sum()
    }

    /// Multiplicity of the largest part (the tag t of an rb_t-partition).
    pub fn largest_part_multiplicity(&self) -> Option<u64> {
        self.mults.last().copied()
    }

    /// The parts as a plain partition, largest first.
    pub fn parts(&self) -> Vec<u64> {
        let mut parts = Vec::new();
        for (j, &m) in self.mults.iter().enumerate().rev() {
            for _ in 0..m {
                parts.push(1u64 << j);
            }
        }
        parts
    }
}

/// Maps an sd-partition (a_1,...,a_k) to the rb-partition with
/// multiplicities d_i = a_i − (a_{i+1}+...+a_k), d_k = a_k: part 2^{j}
/// occurs d_{j+1} times. Sends smallest part t to largest-part
/// multiplicity t.
pub fn sd_to_rb(mu: &Partition) -> Result<RbPartition, BijectError> {
    if mu.is_empty() {
        return Ok(RbPartition::empty());
    }
    if !is_sd(mu).is_sd {
        return Err(BijectError::NotSd);
    }
    let parts = mu.parts();
    let mut suffix_sum: u64 = mu.size();
    let mut mults = Vec::with_capacity(parts.len());
    for &a in parts {
        suffix_sum -= a;
        mults.push(a - suffix_sum);
    }
    RbPartition::new(mults)
}

/// Inverse of `sd_to_rb`.
pub fn rb_to_sd(rb: &RbPartition) -> Partition {
    let mults = rb.mults();
    let mut parts = vec![0u64; mults.len()];
    let mut suffix_sum = 0u64;
    for i in (0..mults.len()).rev() {
        parts[i] = mults[i] + suffix_sum;
        suffix_sum += parts[i];
    }
    Partition::from_sorted_unchecked(parts)
}

/// Replaces the ρ-suffix of an sd-extension μ of ρ by the single part
/// t = |ρ|, giving an sd_t-partition.
pub fn collapse_to_sdt(mu: &Partition, rho: &Partition) -> Result<Partition, BijectError> {
    if rho.is_empty() {
        return Err(BijectError::SmallestPartMismatch);
    }
    if !is_sd_extension_of(mu, rho) {
        return Err(BijectError::NotSdExtension);
    }
    let j = mu.len() - rho.len();
    let mut parts = mu.parts()[..j].to_vec();
    parts.push(rho.size());
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Inverse of `collapse_to_sdt`: replaces the smallest part t = |ρ| of an
/// sd-partition by the parts of ρ.
pub fn expand_from_sdt(mu: &Partition, rho: &Partition) -> Result<Partition, BijectError> {
    if !is_sd(mu).is_sd {
        return Err(BijectError::NotSd);
    }
    if rho.is_empty() || mu.parts().last() != Some(&rho.size()) {
        return Err(BijectError::SmallestPartMismatch);
    }
    let mut parts = mu.parts()[..mu.len() - 1].to_vec();
    parts.extend_from_slice(rho.parts());
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Maps an sd_t-partition with t ≥ 3 onto an sd_1-partition of the same
/// size: (a_1,...,a_k) ↦ (a_1,...,a_{k-1}, a_k−1, 1).
pub fn sdt_to_sd1(mu: &Partition) -> Result<Partition, BijectError> {
    if !is_sd(mu).is_sd || mu.is_empty() {
        return Err(BijectError::NotSd);
    }
    let t = *mu.parts().last().unwrap();
    if t <= 2 {
        return Err(BijectError::SmallestPartTooSmall);
    }
    let mut parts = mu.parts().to_vec();
    let k = parts.len();
    parts[k - 1] = t - 1;
    parts.push(1);
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Removes one part 1 from an rb-partition of even n, yielding an
/// rb-partition of n−1.
pub fn rb_parity_down(rb: &RbPartition) -> Result<RbPartition, BijectError> {
    if !rb.size().is_multiple_of(2) || rb.is_empty() {
        return Err(BijectError::WrongParity);
    }
    let mut mults = rb.mults().to_vec();
    mults[0] -= 1;
    RbPartition::new(mults)
}

/// Inverse of `rb_parity_down`: adds a part 1 to an rb-partition of odd n.
pub fn rb_parity_up(rb: &RbPartition) -> Result<RbPartition, BijectError> {
    if rb.size() % 2 != 1 {
        return Err(BijectError::WrongParity);
    }
    let mut mults = rb.mults().to_vec();
    mults[0] += 1;
    RbPartition::new(mults)
}

/// Outcome of removing a part 1 from an rb-partition of odd n = 2r+1:
/// either a part 1 survives (an rb-partition of 2r), or everything left
/// is even and is halved to an rb-partition of r.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OddSplit {
    EvenBranch(RbPartition),
    HalfBranch(RbPartition),
}

pub fn rb_odd_split(rb: &RbPartition) -> Result<OddSplit, BijectError> {
    if rb.size() % 2 != 1 {
        return Err(BijectError::WrongParity);
    }
    let mults = rb.mults();
    if mults[0] > 1 {
        let mut m = mults.to_vec();
        m[0] -= 1;
        Ok(OddSplit::EvenBranch(RbPartition::new(m)?))
    } else {
        Ok(OddSplit::HalfBranch(RbPartition::new(mults[1..].to_vec())?))
    }
}

/// Inverse of `rb_odd_split`, reconstructing the rb-partition of odd size.
pub fn rb_odd_merge(split: &OddSplit) -> Result<RbPartition, BijectError> {
    match split {
        OddSplit::EvenBranch(rb) => {
            if rb.size() % 2 != 0 || rb.is_empty() {
                return Err(BijectError::WrongParity);
            }
            let mut mults = rb.mults().to_vec();
            mults[0] += 1;
            RbPartition::new(mults)
        }
        OddSplit::HalfBranch(rb) => {
            let mut mults = vec![1u64];
            mults.extend_from_slice(rb.mults());
            RbPartition::new(mults)
        }
    }
}

/// All rb-partitions of n. An rb-partition of n is a choice of part-1
/// multiplicity d with n − d even, followed by an rb-partition of
/// (n − d)/2 shifted one level up.
pub fn enumerate_rb(n: u64) -> Vec<RbPartition> {
    if n == 0 {
        return vec![RbPartition::empty()];
    }
    let mut out = Vec::new();
    let start = if n.is_multiple_of(2) { 2 } else { 1 };
    let mut d = start;
    while d < n {
        for tail in enumerate_rb((n - d) / 2) {
            if tail.is_empty() {
                continue;
            }
            let mut mults = vec![d];
            mults.extend_from_slice(tail.mults());
            out.push(RbPartition { mults });
        }
        d += 2;
    }
    out.push(RbPartition { mults: vec![n] });
    out
}

/// All rb_t-partitions of n (largest part occurring exactly t times).
pub fn enumerate_rbt(t: u64, n: u64) -> Vec<RbPartition> {
    enumerate_rb(n)
        .into_iter()
        .filter(|rb| rb.largest_part_multiplicity() == Some(t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rb(mults: &[u64]) -> RbPartition {
        RbPartition::new(mults.to_vec()).unwrap()
    }

    #[test]
    fn sd_to_rb_examples() {
        assert_eq!(sd_to_rb(&p(&[4, 2, 1])).unwrap(), rb(&[1, 1, 1]));
        assert_eq!(sd_to_rb(&p(&[1])).unwrap(), rb(&[1]));
        assert_eq!(sd_to_rb(&p(&[3, 2])).unwrap(), rb(&[1, 2]));
        for t in 1..=6u64 {
            assert_eq!(sd_to_rb(&p(&[t])).unwrap(), rb(&[t]));
        }
        assert_eq!(sd_to_rb(&p(&[3, 2, 1])), Err(BijectError::NotSd));
    }

    #[test]
    fn rb_to_sd_examples() {
        assert_eq!(rb_to_sd(&rb(&[1, 1, 1])), p(&[4, 2, 1]));
        assert_eq!(rb_to_sd(&rb(&[3])), p(&[3]));
        assert_eq!(rb_to_sd(&rb(&[1, 2])), p(&[3, 2]));
        assert_eq!(
            RbPartition::new(vec![0, 1]),
            Err(BijectError::NotRestricted)
        );
    }

    #[test]
    fn rb_size_and_parts() {
        let x = rb(&[1, 2]);
        assert_eq!(x.size(), 5);
        assert_eq!(x.parts(), vec![2, 2, 1]);
        assert_eq!(x.largest_part_multiplicity(), Some(2));
    }

    #[test]
    fn collapse_and_expand() {
        let one_one = p(&[1, 1]);
        assert_eq!(
            collapse_to_sdt(&p(&[3, 1, 1]), &one_one).unwrap(),
            p(&[3, 2])
        );
        assert_eq!(collapse_to_sdt(&one_one, &one_one).unwrap(), p(&[2]));
        assert_eq!(
            collapse_to_sdt(&p(&[8, 3, 1, 1]), &one_one).unwrap(),
            p(&[8, 3, 2])
        );
        assert_eq!(
            collapse_to_sdt(&p(&[2, 1, 1]), &one_one),
            Err(BijectError::NotSdExtension)
        );

        assert_eq!(
            expand_from_sdt(&p(&[3, 2]), &one_one).unwrap(),
            p(&[3, 1, 1])
        );
        assert_eq!(expand_from_sdt(&p(&[2]), &one_one).unwrap(), one_one);
        assert_eq!(
            expand_from_sdt(&p(&[8, 3, 2]), &one_one).unwrap(),
            p(&[8, 3, 1, 1])
        );
        assert_eq!(
            expand_from_sdt(&p(&[3, 1]), &one_one),
            Err(BijectError::SmallestPartMismatch)
        );
    }

    #[test]
    fn sdt_to_sd1_examples() {
        assert_eq!(sdt_to_sd1(&p(&[3])).unwrap(), p(&[2, 1]));
        assert_eq!(sdt_to_sd1(&p(&[7, 4])).unwrap(), p(&[7, 3, 1]));
        assert_eq!(sdt_to_sd1(&p(&[4])).unwrap(), p(&[3, 1]));
        assert_eq!(sdt_to_sd1(&p(&[2])), Err(BijectError::SmallestPartTooSmall));
    }

    #[test]
    fn parity_down_examples() {
        assert_eq!(rb_parity_down(&rb(&[2])).unwrap(), rb(&[1]));
        assert_eq!(rb_parity_down(&rb(&[2, 1])).unwrap(), rb(&[1, 1]));
        assert_eq!(rb_parity_down(&rb(&[4])).unwrap(), rb(&[3]));
        assert_eq!(rb_parity_down(&rb(&[1])), Err(BijectError::WrongParity));
    }

    #[test]
    fn odd_split_examples() {
        assert_eq!(
            rb_odd_split(&rb(&[3])).unwrap(),
            OddSplit::EvenBranch(rb(&[2]))
        );
        assert_eq!(
            rb_odd_split(&rb(&[1, 1])).unwrap(),
            OddSplit::HalfBranch(rb(&[1]))
        );
        assert_eq!(
            rb_odd_split(&rb(&[1])).unwrap(),
            OddSplit::HalfBranch(RbPartition::empty())
        );
    }

    #[test]
    fn odd_merge_inverts_split() {
        for mults in [vec![3], vec![1, 1], vec![1], vec![3, 2], vec![1, 2, 1]] {
            let x = rb(&mults);
            if x.size() % 2 == 1 {
                assert_eq!(rb_odd_merge(&rb_odd_split(&x).unwrap()).unwrap(), x);
            }
        }
        assert_eq!(rb_odd_merge(&OddSplit::EvenBranch(rb(&[2]))).unwrap(), rb(&[3]));
        assert_eq!(
            rb_odd_merge(&OddSplit::EvenBranch(rb(&[1]))),
            Err(BijectError::WrongParity)
        );
    }

    #[test]
    fn enumerate_rb_small() {
        assert_eq!(enumerate_rb(1), vec![rb(&[1])]);
        // rb of 5: 1+2+2, 1+1+1+2, 5*1
        let five = enumerate_rb(5);
        assert_eq!(five.len(), 3);
        assert!(five.contains(&rb(&[1, 2])));
        assert!(five.contains(&rb(&[3, 1])));
        assert!(five.contains(&rb(&[5])));
        assert_eq!(enumerate_rbt(2, 2), vec![rb(&[2])]);
    }
}
