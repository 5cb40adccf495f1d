//! Shared test oracles working directly on Young diagrams, kept
//! independent of the beta-set machinery in the crate proper.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;
use uppart::partition::Partition;

pub fn conjugate_parts(parts: &[u64]) -> Vec<u64> {
    let cols = parts.first().copied().unwrap_or(0) as usize;
    let mut out = vec![0u64; cols];
    for &p in parts {
        for entry in out.iter_mut().take(p as usize) {
            *entry += 1;
        }
    }
    out
}

/// Hook length of cell (i, j), 0-indexed: arm + leg + 1.
pub fn hook_lengths(parts: &[u64]) -> Vec<Vec<u64>> {
    let conj = conjugate_parts(parts);
    parts
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row as usize)
                .map(|j| row - j as u64 + conj[j] - i as u64 - 1)
                .collect()
        })
        .collect()
}

/// Removes every rim h-hook by diagram surgery. The hook at cell (i, j)
/// spans rows i..=l where l is the last row meeting column j; the rows
/// slide up along the rim: row r becomes parts[r+1] − 1 for i ≤ r < l
/// and row l shrinks to j. Returns (resulting parts, leg length = l − i).
pub fn diagram_remove_hooks(parts: &[u64], h: u64) -> Vec<(Vec<u64>, u64)> {
    assert!(h >= 1);
    let conj = conjugate_parts(parts);
    let hooks = hook_lengths(parts);
    let mut out = Vec::new();
    for (i, row) in hooks.iter().enumerate() {
        for (j, &hook) in row.iter().enumerate() {
            if hook != h {
                continue;
            }
            let l = conj[j] as usize - 1;
            let mut new_parts = parts.to_vec();
            for r in i..l {
                new_parts[r] = parts[r + 1] - 1;
            }
            new_parts[l] = j as u64;
            new_parts.retain(|&p| p > 0);
            out.push((new_parts, (l - i) as u64));
        }
    }
    out
}

/// Number of standard Young tableaux of shape λ, by the hook length
/// formula n! / Π hooks.
pub fn syt_count(parts: &[u64]) -> BigUint {
    let n: u64 = parts.iter().sum();
    let mut num = BigUint::one();
    for k in 1..=n {
        num *= k;
    }
    let mut den = BigUint::one();
    for row in hook_lengths(parts) {
        for h in row {
            den *= h;
        }
    }
    num / den
}

/// μ-path count by direct recursion over diagram surgery.
pub fn count_paths_oracle(parts: &[u64], mu: &[u64]) -> BigUint {
    match mu.split_first() {
        None => {
            if parts.is_empty() {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        }
        Some((&h, rest)) => diagram_remove_hooks(parts, h)
            .into_iter()
            .map(|(next, _)| count_paths_oracle(&next, rest))
            .sum(),
    }
}

/// Signed μ-path count (Murnaghan–Nakayama) by the same recursion.
pub fn character_oracle(parts: &[u64], mu: &[u64]) -> BigInt {
    match mu.split_first() {
        None => {
            if parts.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Some((&h, rest)) => diagram_remove_hooks(parts, h)
            .into_iter()
            .map(|(next, leg)| {
                let sub = character_oracle(&next, rest);
                if leg % 2 == 0 {
                    sub
                } else {
                    -sub
                }
            })
            .sum(),
    }
}

/// A random partition with bounded part size and length.
pub fn arb_partition(max_part: u64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|parts| {
        if parts.is_empty() {
            Partition::empty()
        } else {
            Partition::new(parts).expect("positive parts")
        }
    })
}

/// A random partition λ together with a random partition μ of the same
/// size (removal order follows the sorted parts, as in the engine).
pub fn arb_partition_with_mu(
    max_part: u64,
    max_len: usize,
) -> impl Strategy<Value = (Partition, Partition)> {
    (arb_partition(max_part, max_len), any::<u64>()).prop_map(|(lambda, seed)| {
        let mut remaining = lambda.size();
        let mut mu = Vec::new();
        let mut state = seed | 1;
        while remaining > 0 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let part = state % remaining + 1;
            mu.push(part);
            remaining -= part;
        }
        let mu = if mu.is_empty() {
            Partition::empty()
        } else {
            Partition::new(mu).expect("positive parts")
        };
        (lambda, mu)
    })
}
