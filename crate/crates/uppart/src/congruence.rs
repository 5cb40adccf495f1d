//! Residue predictors for the w-sequence modulo powers of 2, and sweep
//! verification of each prediction against modularly computed tables.
//!
//! Sweeps run on tables built modulo 8 (which determines the mod-4 and
//! mod-2 statements as well), never on exact big integers.

use serde::Serialize;
use thiserror::Error;

use crate::counting::{w_table, CountTable};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("table too short: need index {need}, have {have}")]
    TableTooShort { need: u64, have: u64 },
    #[error("table must be modular with an even modulus divisible by {need}")]
    BadModulus { need: u64 },
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub predicted: u64,
    pub computed: u64,
}

/// Outcome of sweeping one congruence statement over a range.
#[derive(Clone, Debug, Serialize)]
pub struct CongruenceReport {
    pub schema: &'static str,
    pub theorem: String,
    pub range: (u64, u64),
    pub mismatches: Vec<Mismatch>,
    pub status: String,
}

impl CongruenceReport {
    fn build(theorem: &str, range: (u64, u64), mismatches: Vec<Mismatch>) -> Self {
        let status = if mismatches.is_empty() {
            "verified".to_string()
        } else {
            "mismatch".to_string()
        };
        CongruenceReport {
            schema: "uppart/1",
            theorem: theorem.to_string(),
            range,
            mismatches,
            status,
        }
    }

    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The binary expansion n = Σ 2^{n_i}, exponents strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryExpansion {
    pub exponents: Vec<u32>,
}

impl BinaryExpansion {
    pub fn of(n: u64) -> Self {
        assert!(n >= 1);
        let exponents = (0..64).filter(|&i| n >> i & 1 == 1).collect();
        BinaryExpansion { exponents }
    }

    pub fn n(&self) -> u64 {
        self.exponents.iter().map(|&e| 1u64 << e).sum()
    }

    pub fn lowest(&self) -> u32 {
        self.exponents[0]
    }

    pub fn highest(&self) -> u32 {
        *self.exponents.last().unwrap()
    }
}

fn require_modulus(table: &CountTable, need: u64) -> Result<u64, CongruenceError> {
    match table.modulus() {
        Some(m) if m % need == 0 => Ok(m),
        _ => Err(CongruenceError::BadModulus { need }),
    }
}

fn require_len(table: &CountTable, need: u64) -> Result<(), CongruenceError> {
    if table.limit() < need {
        return Err(CongruenceError::TableTooShort {
            need,
            have: table.limit(),
        });
    }
    Ok(())
}

/// Verifies the parity hereditary rule: for a sequence with a(c), a(2c)
/// odd, a(m) even for c < m < 2c, and a(n) = a(n−1) + a(⌊n/2⌋) from
/// n = 2c on, a(n) is odd exactly at n = 2^d·c. Hypotheses are checked
/// first; a violation is an error, not a mismatch.
pub fn parity_rule(c: u64, n_max: u64, table: &CountTable) -> Result<CongruenceReport, CongruenceError> {
    assert!(c >= 1);
    let m = require_modulus(table, 2)?;
    require_len(table, n_max)?;
    if n_max < 2 * c {
        return Err(CongruenceError::TableTooShort {
            need: 2 * c,
            have: n_max,
        });
    }
    let odd = |n: u64| table.residue(n) % 2 == 1;
    if !odd(c) {
        return Err(CongruenceError::HypothesisViolation(format!(
            "a({c}) must be odd"
        )));
    }
    if !odd(2 * c) {
        return Err(CongruenceError::HypothesisViolation(format!(
            "a({}) must be odd",
            2 * c
        )));
    }
    for k in c + 1..2 * c {
        if odd(k) {
            return Err(CongruenceError::HypothesisViolation(format!(
                "a({k}) must be even for {c} < {k} < {}",
                2 * c
            )));
        }
    }
    // the induction only consumes the recurrence beyond 2c; at n = 2c the
    // odd value is a hypothesis of its own (w itself has w(2) != w(1)+w(1))
    for n in 2 * c + 1..=n_max {
        if table.residue(n) != (table.residue(n - 1) + table.residue(n / 2)) % m {
            return Err(CongruenceError::HypothesisViolation(format!(
                "recurrence a(n)=a(n-1)+a(n/2) fails at n={n}"
            )));
        }
    }
    let mut mismatches = Vec::new();
    for n in c..=n_max {
        let predicted_odd = n % c == 0 && (n / c).is_power_of_two();
        if odd(n) != predicted_odd {
            mismatches.push(Mismatch {
                n,
                predicted: u64::from(predicted_odd),
                computed: table.residue(n) % 2,
            });
        }
    }
    Ok(CongruenceReport::build(
        &format!("parity(c={c})"),
        (c, n_max),
        mismatches,
    ))
}

/// Verifies that w is constant mod 4 on the odd numbers of each dyadic
/// window: w(m) ≡ w(2^b+1) mod 4 for odd m in [2^b+1, 2^{b+1}−1].
pub fn window_constancy_mod4(n_max: u64, table: &CountTable) -> Result<CongruenceReport, CongruenceError> {
    require_modulus(table, 4)?;
    require_len(table, n_max)?;
    let mut mismatches = Vec::new();
    let mut b = 1u32;
    while (1u64 << b) < n_max {
        let anchor = table.residue((1 << b) + 1) % 4;
        let top = ((1u64 << (b + 1)) - 1).min(n_max);
        let mut m = (1u64 << b) + 1;
        while m <= top {
            if table.residue(m) % 4 != anchor {
                mismatches.push(Mismatch {
                    n: m,
                    predicted: anchor,
                    computed: table.residue(m) % 4,
                });
            }
            m += 2;
        }
        b += 1;
    }
    Ok(CongruenceReport::build(
        "window-mod4",
        (3, n_max),
        mismatches,
    ))
}

/// Predicted residue of v(k) = w(2^k) modulo 8: 2⌊k/2⌋+1.
pub fn predict_v_mod8(k: u64) -> u64 {
    (2 * (k / 2) + 1) % 8
}

/// Verifies v(k) ≡ 2v(k−1) + v(k−2) mod 4 for 2 ≤ k ≤ K.
pub fn v_recurrence_check(k_max: u32, table: &CountTable) -> Result<CongruenceReport, CongruenceError> {
    require_modulus(table, 4)?;
    require_len(table, 1 << k_max)?;
    let v = |k: u32| table.residue(1 << k) % 4;
    let mut mismatches = Vec::new();
    for k in 2..=k_max {
        let predicted = (2 * v(k - 1) + v(k - 2)) % 4;
        if v(k) != predicted {
            mismatches.push(Mismatch {
                n: k as u64,
                predicted,
                computed: v(k),
            });
        }
    }
    Ok(CongruenceReport::build(
        "v-rec",
        (2, k_max as u64),
        mismatches,
    ))
}

/// Verifies v(k) ≡ 2⌊k/2⌋+1 mod 8 for 1 ≤ k ≤ K.
pub fn v_mod8_check(k_max: u32, table: &CountTable) -> Result<CongruenceReport, CongruenceError> {
    require_modulus(table, 8)?;
    require_len(table, 1 << k_max)?;
    let mut mismatches = Vec::new();
    for k in 1..=k_max {
        let predicted = predict_v_mod8(k as u64);
        let computed = table.residue(1 << k) % 8;
        if computed != predicted {
            mismatches.push(Mismatch {
                n: k as u64,
                predicted,
                computed,
            });
        }
    }
    Ok(CongruenceReport::build(
        "v-mod8",
        (1, k_max as u64),
        mismatches,
    ))
}

/// Prediction of w(n) mod 4 from the binary expansion of n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WMod4 {
    /// 2-powers carry the odd values v(k); out of the theorem's scope.
    TwoPower,
    Residue(u64),
}

/// For n not a 2-power, the residue of w(n) mod 4 determined by the lowest
/// exponent n_0 (mod 4) and the parity of the highest exponent n_k. The
/// odd case n_0 = 0 follows the n_0 ≡ 0 (mod 4) rule.
pub fn predict_w_mod4(n: u64) -> WMod4 {
    assert!(n >= 1);
    if n.is_power_of_two() {
        return WMod4::TwoPower;
    }
    let exp = BinaryExpansion::of(n);
    let n0 = exp.lowest() % 4;
    let nk_even = exp.highest().is_multiple_of(2);
    let residue = match (n0, nk_even) {
        (3, _) | (0, true) | (2, false) => 0,
        (1, _) | (0, false) | (2, true) => 2,
        _ => unreachable!(),
    };
    WMod4::Residue(residue)
}

/// Verifies the mod-4 prediction for every non-2-power n ≤ N.
pub fn w_mod4_check(n_max: u64, table: &CountTable) -> Result<CongruenceReport, CongruenceError> {
    require_modulus(table, 4)?;
    require_len(table, n_max)?;
    let mut mismatches = Vec::new();
    for n in 1..=n_max {
        if let WMod4::Residue(predicted) = predict_w_mod4(n) {
            let computed = table.residue(n) % 4;
            if computed != predicted {
                mismatches.push(Mismatch {
                    n,
                    predicted,
                    computed,
                });
            }
        }
    }
    Ok(CongruenceReport::build("w-mod4", (1, n_max), mismatches))
}

/// Runs every congruence check against a fresh mod-8 w-table up to N.
pub fn theorem_sweep(n_max: u64) -> Result<Vec<CongruenceReport>, CongruenceError> {
    assert!(n_max >= 16);
    let table = w_table(n_max, Some(8));
    theorem_sweep_on(&table)
}

/// Same as `theorem_sweep`, on a caller-supplied mod-8 table (lets tests
/// inject faults).
pub fn theorem_sweep_on(table: &CountTable) -> Result<Vec<CongruenceReport>, CongruenceError> {
    let n_max = table.limit();
    let k_max = n_max.ilog2();
    Ok(vec![
        parity_rule(1, n_max, table)?,
        window_constancy_mod4(n_max, table)?,
        v_recurrence_check(k_max, table)?,
        v_mod8_check(k_max, table)?,
        w_mod4_check(n_max, table)?,
    ])
}

/// One feature bucket of the mod-8 exploration.
#[derive(Clone, Debug, Serialize)]
pub struct Mod8Group {
    pub n0_mod8: u32,
    pub nk_parity: u32,
    pub residues_seen: Vec<u64>,
    pub count: u64,
}

/// Exploratory tabulation of w(n) mod 8. Nothing here is a theorem: the
/// report records what the scanned range shows and no more.
#[derive(Clone, Debug, Serialize)]
pub struct Mod8Exploration {
    pub schema: &'static str,
    pub status: &'static str,
    pub range: (u64, u64),
    /// (k, residue of w(2^k) mod 8) for the 2-powers in range.
    pub two_powers: Vec<(u32, u64)>,
    pub groups: Vec<Mod8Group>,
    /// (n, w(n) mod 8) for every n in range.
    pub entries: Vec<(u64, u64)>,
}

pub fn explore_w_mod8(n_max: u64) -> Mod8Exploration {
    assert!(n_max >= 16);
    let table = w_table(n_max, Some(8));
    let mut two_powers = Vec::new();
    let mut entries = Vec::with_capacity(n_max as usize);
    let mut buckets: std::collections::BTreeMap<(u32, u32), (std::collections::BTreeSet<u64>, u64)> =
        Default::default();
    for n in 1..=n_max {
        let r = table.residue(n);
        entries.push((n, r));
        if n.is_power_of_two() {
            two_powers.push((n.ilog2(), r));
            continue;
        }
        let exp = BinaryExpansion::of(n);
        let key = (exp.lowest() % 8, exp.highest() % 2);
        let slot = buckets.entry(key).or_default();
        slot.0.insert(r);
        slot.1 += 1;
    }
    let groups = buckets
        .into_iter()
        .map(|((n0_mod8, nk_parity), (set, count))| Mod8Group {
            n0_mod8,
            nk_parity,
            residues_seen: set.into_iter().collect(),
            count,
        })
        .collect();
    Mod8Exploration {
        schema: "uppart/1",
        status: "CONJECTURAL",
        range: (1, n_max),
        two_powers,
        groups,
        entries,
    }
}
