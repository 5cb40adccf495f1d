//! Deciding unique-path status: the classification through strongly
//! decreasing partitions, and independent brute force over all λ of the
//! same size.
//!
//! A partition is strongly decreasing (sd) when every part strictly exceeds
//! the sum of all later parts. The classification states that μ is a
//! unique-path partition iff μ is sd or an sd-extension of (1,1).
//!
//! The sd-extension test runs greedily from the largest part. This is
//! correct because whether a prefix position satisfies the strict-dominance
//! inequality depends only on the total size of the remaining suffix, not
//! on how the suffix decomposes.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use thiserror::Error;

use crate::partition::{partitions_of, Partition};
use crate::paths::{PathEngine, PathTrace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("brute force over p({n}) = {count} partitions exceeds budget {budget}")]
    BudgetExceeded { n: u64, count: BigUint, budget: u64 },
}

/// Result of the sd check: on failure, `sd_core` is the suffix at which
/// strict dominance first fails (the whole partition counts from the
/// failing part on); `(0)` when the partition is sd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdStatus {
    pub mu: Partition,
    pub is_sd: bool,
    pub sd_core: Partition,
}

/// Brute-force verdict; `witness` carries the offending λ together with
/// two distinct μ-paths when μ is not a up-partition.
#[derive(Clone, Debug)]
pub struct UpVerdict {
    pub mu: Partition,
    pub is_up: bool,
    pub witness: Option<(Partition, [PathTrace; 2])>,
}

/// Cap on the number of partitions of n swept by brute-force checks.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_partitions: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_partitions: 200_000,
        }
    }
}

/// Number of partitions of n, for budget checks.
pub fn partition_count(n: u64) -> BigUint {
    let n = n as usize;
    // dp over largest allowed part
    let mut dp = vec![BigUint::default(); n + 1];
    dp[0] = BigUint::one();
    for part in 1..=n {
        for m in part..=n {
            let prev = dp[m - part].clone();
            dp[m] += prev;
        }
    }
    dp[n].clone()
}

/// Checks a_i > a_{i+1} + ... + a_k for every i < k.
pub fn is_sd(mu: &Partition) -> SdStatus {
    let parts = mu.parts();
    let mut suffix_sum: u64 = mu.size();
    for (i, &a) in parts.iter().enumerate() {
        suffix_sum -= a;
        if i + 1 < parts.len() && a <= suffix_sum {
            return SdStatus {
                mu: mu.clone(),
                is_sd: false,
                sd_core: Partition::from_sorted_unchecked(parts[i..].to_vec()),
            };
        }
    }
    SdStatus {
        mu: mu.clone(),
        is_sd: true,
        sd_core: Partition::empty(),
    }
}

/// True iff μ arises from ρ by repeatedly prepending parts strictly larger
/// than the current size. ρ = (0) gives the plain sd test.
pub fn is_sd_extension_of(mu: &Partition, rho: &Partition) -> bool {
    let mp = mu.parts();
    let rp = rho.parts();
    if mp.len() < rp.len() {
        return false;
    }
    let j = mp.len() - rp.len();
    if &mp[j..] != rp {
        return false;
    }
    let mut suffix_sum: u64 = mu.size();
    for &a in &mp[..j] {
        suffix_sum -= a;
        if a <= suffix_sum {
            return false;
        }
    }
    true
}

/// The classification: μ is up iff it is sd or an sd-extension of (1,1).
pub fn is_up_theorem(mu: &Partition) -> bool {
    let one_one = Partition::from_sorted_unchecked(vec![1, 1]);
    is_sd(mu).is_sd || is_sd_extension_of(mu, &one_one)
}

/// Checks the defining property directly: at most one μ-path in every
/// partition λ of |μ|. The first offending λ in enumeration order is
/// reported as witness.
pub fn is_up_bruteforce(
    engine: &mut PathEngine,
    mu: &Partition,
    budget: Budget,
) -> Result<UpVerdict, ClassifyError> {
    let n = mu.size();
    check_budget(n, budget)?;
    for lambda in partitions_of(n) {
        if engine.count_paths(&lambda, mu).count > BigUint::one() {
            let en = engine.enumerate_paths(&lambda, mu, 2);
            let mut it = en.traces.into_iter();
            let witness = (lambda, [it.next().unwrap(), it.next().unwrap()]);
            return Ok(UpVerdict {
                mu: mu.clone(),
                is_up: false,
                witness: Some(witness),
            });
        }
    }
    Ok(UpVerdict {
        mu: mu.clone(),
        is_up: true,
        witness: None,
    })
}

/// True iff every MN character value on the class μ lies in {−1, 0, 1}.
pub fn is_sign_partition_bruteforce(
    engine: &mut PathEngine,
    mu: &Partition,
    budget: Budget,
) -> Result<bool, ClassifyError> {
    let n = mu.size();
    check_budget(n, budget)?;
    let one = BigInt::one();
    for lambda in partitions_of(n) {
        let chi = engine.character_value(&lambda, mu).value;
        if chi.magnitude() > one.magnitude() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_budget(n: u64, budget: Budget) -> Result<(), ClassifyError> {
    let count = partition_count(n);
    if count > BigUint::from(budget.max_partitions) {
        return Err(ClassifyError::BudgetExceeded {
            n,
            count,
            budget: budget.max_partitions,
        });
    }
    Ok(())
}

/// All sd-extensions of `rho` of total size `n`, largest first.
pub fn enumerate_sd_extensions(rho: &Partition, n: u64) -> Vec<Partition> {
    let base = rho.size();
    let mut out = Vec::new();
    if n == base {
        out.push(rho.clone());
        return out;
    }
    if n < base {
        return out;
    }
    // first part a must exceed the rest: a > n - a, and leave room for rho
    let lo = n / 2 + 1;
    let hi = n - base;
    let mut a = hi;
    while a >= lo {
        for tail in enumerate_sd_extensions(rho, n - a) {
            let mut parts = Vec::with_capacity(tail.len() + 1);
            parts.push(a);
            parts.extend_from_slice(tail.parts());
            out.push(Partition::from_sorted_unchecked(parts));
        }
        if a == lo {
            break;
        }
        a -= 1;
    }
    out
}

/// All sd-partitions of n (sd-extensions of the empty partition).
pub fn enumerate_sd(n: u64) -> Vec<Partition> {
    enumerate_sd_extensions(&Partition::empty(), n)
}

/// All up-partitions of n, generated from the classification (not by
/// filtering all p(n) partitions), sorted descending lexicographically.
pub fn enumerate_up(n: u64) -> Vec<Partition> {
    let one_one = Partition::from_sorted_unchecked(vec![1, 1]);
    let mut out = enumerate_sd(n);
    out.extend(enumerate_sd_extensions(&one_one, n));
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
