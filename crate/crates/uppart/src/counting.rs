//! The counting sequences s, s*, s_t, s*_t, u, w, w_r and v, built from
//! their divide-and-floor recurrences, exactly or modulo a fixed modulus.
//!
//! Base data, in terms of rb_t-partition counts:
//!   s_t(j) = 0 for j < t, s_t(t) = 1, s_t(j) = 0 for t < j ≤ 2t,
//!   s_t(2t+1) = 1, and s_t(2r) = s_t(2r-1) whenever r ≠ ⌊(t+1)/2⌋.
//! The dictionary s*_t(r) = s_t(2r) (r odd) / s_t(2r-1) (r even) has one
//! exceptional point r = ⌊(t+1)/2⌋; its value still lands inside the base
//! range j ≤ 2t+1, so every table entry is pinned without enumeration.
//! All recurrences are linear, so computing modulo m is exact reduction.

use num_bigint::BigUint;
use thiserror::Error;

use crate::biject::{enumerate_rb, enumerate_rbt, RbPartition};
use crate::classify::{enumerate_sd, enumerate_sd_extensions};
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    #[error("enumeration of {what}({n}) has {count} objects, over budget {budget}")]
    BudgetExceeded {
        what: &'static str,
        n: u64,
        count: BigUint,
        budget: u64,
    },
}

/// Values of a counting sequence on 1..=N (or 0..=N for v), exact or
/// reduced modulo a fixed modulus.
#[derive(Clone, Debug)]
pub struct CountTable {
    pub name: String,
    pub param: Option<u64>,
    data: TableData,
    /// Index of the first meaningful entry (1 for the n-indexed tables,
    /// 0 for v which is indexed by the exponent k).
    first: usize,
}

#[derive(Clone, Debug)]
enum TableData {
    Exact(Vec<BigUint>),
    Modular { modulus: u64, values: Vec<u64> },
}

impl CountTable {
    pub fn modulus(&self) -> Option<u64> {
        match &self.data {
            TableData::Exact(_) => None,
            TableData::Modular { modulus, .. } => Some(*modulus),
        }
    }

    /// Largest index stored.
    pub fn limit(&self) -> u64 {
        match &self.data {
            TableData::Exact(v) => v.len() as u64 - 1,
            TableData::Modular { values, .. } => values.len() as u64 - 1,
        }
    }

    pub fn first_index(&self) -> u64 {
        self.first as u64
    }

    /// The value at index n, as a big integer in either representation.
    pub fn value(&self, n: u64) -> BigUint {
        match &self.data {
            TableData::Exact(v) => v[n as usize].clone(),
            TableData::Modular { values, .. } => BigUint::from(values[n as usize]),
        }
    }

    /// The residue at index n; requires a modular table.
    pub fn residue(&self, n: u64) -> u64 {
        match &self.data {
            TableData::Exact(_) => panic!("residue() on an exact table"),
            TableData::Modular { values, .. } => values[n as usize],
        }
    }

    pub fn residues(&self) -> Option<&[u64]> {
        match &self.data {
            TableData::Exact(_) => None,
            TableData::Modular { values, .. } => Some(values),
        }
    }

    /// Builds a modular table from raw residues (used for fault injection
    /// in verification tests).
    pub fn from_residues(name: &str, modulus: u64, values: Vec<u64>) -> CountTable {
        CountTable {
            name: name.to_string(),
            param: None,
            data: TableData::Modular { modulus, values },
            first: 1,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, BigUint)> + '_ {
        (self.first as u64..=self.limit()).map(|n| (n, self.value(n)))
    }
}

// Recurrence builders are written once, generic over exact/modular
// arithmetic.
trait Arith {
    type V: Clone;
    fn lift(&self, x: u64) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
}

struct Exact;
impl Arith for Exact {
    type V = BigUint;
    fn lift(&self, x: u64) -> BigUint {
        BigUint::from(x)
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
}

struct Mod(u64);
impl Arith for Mod {
    type V = u64;
    fn lift(&self, x: u64) -> u64 {
        x % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
}

fn wrap(name: String, param: Option<u64>, first: usize, data: TableData) -> CountTable {
    CountTable {
        name,
        param,
        data,
        first,
    }
}

macro_rules! dispatch {
    ($name:expr, $param:expr, $first:expr, $modulus:expr, $builder:ident ( $($arg:expr),* )) => {
        match $modulus {
            None => wrap($name, $param, $first, TableData::Exact($builder(&Exact, $($arg),*))),
            Some(m) => wrap(
                $name,
                $param,
                $first,
                TableData::Modular { modulus: m, values: $builder(&Mod(m), $($arg),*) },
            ),
        }
    };
}

fn s_values<A: Arith>(a: &A, n_max: u64) -> Vec<A::V> {
    // s(1)=1; s(2r)=s(2r-1); s(2r+1)=s(2r)+s(r)
    let n_max = n_max as usize;
    let mut v = vec![a.lift(0); n_max + 1];
    if n_max >= 1 {
        v[1] = a.lift(1);
    }
    for n in 2..=n_max {
        v[n] = if n % 2 == 0 {
            v[n - 1].clone()
        } else {
            a.add(&v[n - 1], &v[n / 2])
        };
    }
    v
}

fn s_star_values<A: Arith>(a: &A, r_max: u64) -> Vec<A::V> {
    // s*(1)=1; s*(r)=s*(r-1)+s*(⌊r/2⌋)
    let r_max = r_max as usize;
    let mut v = vec![a.lift(0); r_max + 1];
    if r_max >= 1 {
        v[1] = a.lift(1);
    }
    for r in 2..=r_max {
        v[r] = a.add(&v[r - 1], &v[r / 2]);
    }
    v
}

/// s_t(j) for j ≤ 2t+1, straight from the base data.
fn st_base(t: u64, j: u64) -> u64 {
    debug_assert!(j <= 2 * t + 1);
    u64::from(j == t || j == 2 * t + 1)
}

fn st_values<A: Arith>(a: &A, t: u64, n_max: u64) -> Vec<A::V> {
    // beyond the base range both parity recursions are unconditionally
    // valid: s_t(2m) = s_t(2m-1) needs m ≠ ⌊(t+1)/2⌋ and
    // s_t(2m+1) = s_t(2m) + s_t(m) needs t ∉ {2m, 2m+1}, and every
    // excluded index lies at or below 2t+1
    let n_max_us = n_max as usize;
    let mut v = vec![a.lift(0); n_max_us + 1];
    for j in 1..=n_max.min(2 * t + 1) {
        v[j as usize] = a.lift(st_base(t, j));
    }
    for n in (2 * t as usize + 2)..=n_max_us {
        v[n] = if n % 2 == 0 {
            v[n - 1].clone()
        } else {
            a.add(&v[n - 1], &v[n / 2])
        };
    }
    v
}

fn s_star_t_values<A: Arith>(a: &A, t: u64, r_max: u64) -> Vec<A::V> {
    // read off the dictionary s*_t(r) = s_t(2r) (r odd) / s_t(2r-1)
    // (r even). The divide-and-floor recurrence the s*_t table is usually
    // described by breaks at r = 2⌊(t+1)/2⌋ + 1 for t ≡ 3 (mod 4), so the
    // dictionary route is the one that is correct everywhere.
    let st = st_values(a, t, 2 * r_max);
    let mut v = vec![a.lift(0); r_max as usize + 1];
    for (r, slot) in v.iter_mut().enumerate().skip(1) {
        let j = if r % 2 == 1 { 2 * r } else { 2 * r - 1 };
        *slot = st[j].clone();
    }
    v
}

fn u_values<A: Arith>(a: &A, n_max: u64) -> Vec<A::V> {
    let s = s_values(a, n_max);
    let s2 = st_values(a, 2, n_max);
    s.iter().zip(&s2).map(|(x, y)| a.add(x, y)).collect()
}

fn w_values<A: Arith>(a: &A, n_max: u64) -> Vec<A::V> {
    // w(1)=w(2)=1; w(n)=w(n-1)+w(⌊n/2⌋) for n ≥ 3
    let n_max = n_max as usize;
    let mut v = vec![a.lift(0); n_max + 1];
    for slot in v.iter_mut().take(3).skip(1) {
        *slot = a.lift(1);
    }
    for n in 3..=n_max {
        v[n] = a.add(&v[n - 1], &v[n / 2]);
    }
    v
}

fn w_r_values<A: Arith>(a: &A, r: u64, n_max: u64) -> Vec<A::V> {
    // bases 0 except w_r(r)=w_r(2r)=1; the recurrence already holds at
    // n=2r but starting it at 2r+1 keeps the stated base intact
    let n_max_us = n_max as usize;
    let mut v = vec![a.lift(0); n_max_us + 1];
    for n in [r, 2 * r] {
        if n <= n_max {
            v[n as usize] = a.lift(1);
        }
    }
    for n in (2 * r as usize + 1)..=n_max_us {
        v[n] = a.add(&v[n - 1], &v[n / 2]);
    }
    v
}

fn v_values<A: Arith>(a: &A, k_max: u64) -> Vec<A::V> {
    let w = w_values(a, 1u64 << k_max);
    (0..=k_max).map(|k| w[1usize << k].clone()).collect()
}

/// s(n): number of sd-partitions (equivalently rb-partitions) of n.
pub fn s_table(n_max: u64, modulus: Option<u64>) -> CountTable {
    dispatch!("s".into(), None, 1, modulus, s_values(n_max))
}

/// s*(r) = s(2r) = s(2r−1).
pub fn s_star_table(r_max: u64, modulus: Option<u64>) -> CountTable {
    dispatch!("s*".into(), None, 1, modulus, s_star_values(r_max))
}

/// s_t(n): number of sd_t- (equivalently rb_t-) partitions of n.
pub fn st_table(t: u64, n_max: u64, modulus: Option<u64>) -> CountTable {
    assert!(t >= 1);
    dispatch!("s_t".into(), Some(t), 1, modulus, st_values(t, n_max))
}

/// s*_t(r): the t-tagged analogue of s*.
pub fn s_star_t_table(t: u64, r_max: u64, modulus: Option<u64>) -> CountTable {
    assert!(t >= 1);
    dispatch!("s*_t".into(), Some(t), 1, modulus, s_star_t_values(t, r_max))
}

/// u(n) = s(n) + s_2(n): number of up-partitions of n.
pub fn u_table(n_max: u64, modulus: Option<u64>) -> CountTable {
    dispatch!("u".into(), None, 1, modulus, u_values(n_max))
}

/// w(n) = u(2n)/2.
pub fn w_table(n_max: u64, modulus: Option<u64>) -> CountTable {
    dispatch!("w".into(), None, 1, modulus, w_values(n_max))
}

/// w_r(n) = s*_{2r−1}(n) + s*_{2r}(n); w_1 = w.
pub fn w_r_table(r: u64, n_max: u64, modulus: Option<u64>) -> CountTable {
    assert!(r >= 1);
    dispatch!("w_r".into(), Some(r), 1, modulus, w_r_values(r, n_max))
}

/// v(k) = w(2^k), indexed by k starting at 0.
pub fn v_table(k_max: u64, modulus: Option<u64>) -> CountTable {
    dispatch!("v".into(), None, 0, modulus, v_values(k_max))
}

const ENUM_BUDGET: u64 = 1_000_000;

fn check_enum_budget(what: &'static str, n: u64, count: BigUint) -> Result<(), CountingError> {
    if count > BigUint::from(ENUM_BUDGET) {
        return Err(CountingError::BudgetExceeded {
            what,
            n,
            count,
            budget: ENUM_BUDGET,
        });
    }
    Ok(())
}

/// Direct enumeration of sd-partitions of n, with a size guard.
pub fn enumerate_sd_checked(n: u64) -> Result<Vec<Partition>, CountingError> {
    check_enum_budget("sd", n, s_table(n.max(1), None).value(n.max(1)))?;
    Ok(enumerate_sd(n))
}

/// Direct enumeration of rb-partitions of n, with a size guard.
pub fn enumerate_rb_checked(n: u64) -> Result<Vec<RbPartition>, CountingError> {
    check_enum_budget("rb", n, s_table(n.max(1), None).value(n.max(1)))?;
    Ok(enumerate_rb(n))
}

/// Direct enumeration of rb_t-partitions of n, with a size guard.
pub fn enumerate_rbt_checked(t: u64, n: u64) -> Result<Vec<RbPartition>, CountingError> {
    check_enum_budget("rb", n, s_table(n.max(1), None).value(n.max(1)))?;
    Ok(enumerate_rbt(t, n))
}

/// Direct enumeration of up-partitions of n, with a size guard.
pub fn enumerate_up_checked(n: u64) -> Result<Vec<Partition>, CountingError> {
    check_enum_budget("up", n, u_table(n.max(1), None).value(n.max(1)))?;
    Ok(crate::classify::enumerate_up(n))
}

/// Direct enumeration of sd_t-partitions of n (sd-extensions of (t)).
pub fn enumerate_sdt(t: u64, n: u64) -> Vec<Partition> {
    let seed = Partition::from_sorted_unchecked(vec![t]);
    enumerate_sd_extensions(&seed, n)
}
