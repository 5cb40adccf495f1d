//! Counting and enumerating μ-paths in λ, with and without the
//! Murnaghan–Nakayama sign.
//!
//! A μ-path for μ = (a_1,...,a_k) is a chain λ = λ_0, λ_1, ..., λ_k = (0)
//! where λ_i arises from λ_{i-1} by removing an a_i-hook. Parts of μ are
//! always consumed largest first; the signed sum is the MN character value
//! χ^λ(μ) and is independent of that order, the bare path count is defined
//! for it.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Number of μ-paths in λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCount {
    pub count: BigUint,
    pub lambda: Partition,
    pub mu: Partition,
}

/// The MN character value χ^λ(μ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterValue {
    pub value: BigInt,
    pub lambda: Partition,
    pub mu: Partition,
}

/// One fully expanded μ-path: the chain of partitions and the leg length
/// of each removed hook.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTrace {
    /// λ_0, λ_1, ..., λ_k; always ends at the empty partition.
    pub partitions: Vec<Partition>,
    pub legs: Vec<u64>,
}

impl PathTrace {
    /// The MN sign (−1)^(sum of leg lengths) of this path.
    pub fn sign(&self) -> i32 {
        if self.legs.iter().sum::<u64>() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug)]
pub struct PathEnumeration {
    pub traces: Vec<PathTrace>,
    pub truncated: bool,
    /// Full path count, also when the trace list was truncated.
    pub total: BigUint,
}

type MemoKey = (Partition, Vec<u64>);

/// Memoized path counter / character evaluator. Caching is transparent:
/// results are identical with it switched off.
pub struct PathEngine {
    caching: bool,
    counts: HashMap<MemoKey, BigUint>,
    chars: HashMap<MemoKey, BigInt>,
}

impl Default for PathEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl PathEngine {
    pub fn new() -> Self {
        PathEngine {
            caching: true,
            counts: HashMap::new(),
            chars: HashMap::new(),
        }
    }

    pub fn without_cache() -> Self {
        PathEngine {
            caching: false,
            counts: HashMap::new(),
            chars: HashMap::new(),
        }
    }

    /// Number of μ-paths in λ; zero when |λ| ≠ |μ|.
    pub fn count_paths(&mut self, lambda: &Partition, mu: &Partition) -> PathCount {
        let count = if lambda.size() == mu.size() {
            self.count_rec(lambda, mu.parts())
        } else {
            BigUint::zero()
        };
        PathCount {
            count,
            lambda: lambda.clone(),
            mu: mu.clone(),
        }
    }

    fn count_rec(&mut self, lambda: &Partition, mu_suffix: &[u64]) -> BigUint {
        if mu_suffix.is_empty() {
            return if lambda.is_empty() {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let key = (lambda.clone(), mu_suffix.to_vec());
        if self.caching {
            if let Some(v) = self.counts.get(&key) {
                return v.clone();
            }
        }
        let mut total = BigUint::zero();
        for removal in lambda.remove_hooks(mu_suffix[0]) {
            total += self.count_rec(&removal.result, &mu_suffix[1..]);
        }
        if self.caching {
            self.counts.insert(key, total.clone());
        }
        total
    }

    /// The MN character value χ^λ(μ); zero when |λ| ≠ |μ|.
    pub fn character_value(&mut self, lambda: &Partition, mu: &Partition) -> CharacterValue {
        let value = if lambda.size() == mu.size() {
            self.char_rec(lambda, mu.parts())
        } else {
            BigInt::zero()
        };
        CharacterValue {
            value,
            lambda: lambda.clone(),
            mu: mu.clone(),
        }
    }

    fn char_rec(&mut self, lambda: &Partition, mu_suffix: &[u64]) -> BigInt {
        if mu_suffix.is_empty() {
            return if lambda.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (lambda.clone(), mu_suffix.to_vec());
        if self.caching {
            if let Some(v) = self.chars.get(&key) {
                return v.clone();
            }
        }
        let mut total = BigInt::zero();
        for removal in lambda.remove_hooks(mu_suffix[0]) {
            let sub = self.char_rec(&removal.result, &mu_suffix[1..]);
            if removal.leg_length % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        if self.caching {
            self.chars.insert(key, total.clone());
        }
        total
    }

    /// True iff λ admits at most one μ-path.
    pub fn is_unique_path_for(&mut self, lambda: &Partition, mu: &Partition) -> bool {
        self.count_paths(lambda, mu).count <= BigUint::one()
    }

    /// Expands μ-paths into explicit traces, truncating at `limit`.
    pub fn enumerate_paths(
        &mut self,
        lambda: &Partition,
        mu: &Partition,
        limit: usize,
    ) -> PathEnumeration {
        assert!(limit >= 1, "limit must be positive");
        let total = self.count_paths(lambda, mu).count;
        let mut traces = Vec::new();
        if lambda.size() == mu.size() {
            let mut chain = vec![lambda.clone()];
            let mut legs = Vec::new();
            self.enumerate_rec(lambda, mu.parts(), &mut chain, &mut legs, limit, &mut traces);
        }
        let truncated = BigUint::from(traces.len()) < total;
        PathEnumeration {
            traces,
            truncated,
            total,
        }
    }

    fn enumerate_rec(
        &mut self,
        lambda: &Partition,
        mu_suffix: &[u64],
        chain: &mut Vec<Partition>,
        legs: &mut Vec<u64>,
        limit: usize,
        out: &mut Vec<PathTrace>,
    ) {
        if out.len() >= limit {
            return;
        }
        if mu_suffix.is_empty() {
            if lambda.is_empty() {
                out.push(PathTrace {
                    partitions: chain.clone(),
                    legs: legs.clone(),
                });
            }
            return;
        }
        for removal in lambda.remove_hooks(mu_suffix[0]) {
            chain.push(removal.result.clone());
            legs.push(removal.leg_length);
            self.enumerate_rec(&removal.result, &mu_suffix[1..], chain, legs, limit, out);
            chain.pop();
            legs.pop();
        }
    }
}
