//! Acceptance suite: one criterion per function, one printed PASS/FAIL
//! line each, and a final gate that fails if any criterion failed.

mod common;

use num_bigint::BigUint;
use num_traits::Zero;
use uppart::biject::{enumerate_rbt, rb_to_sd, sd_to_rb};
use uppart::classify::{
    enumerate_sd, is_sign_partition_bruteforce, is_up_bruteforce, is_up_theorem, Budget,
};
use uppart::congruence::{parity_rule, theorem_sweep};
use uppart::counting::{
    enumerate_sdt, s_star_t_table, s_star_table, s_table, st_table, u_table, v_table, w_r_table,
    w_table,
};
use uppart::partition::{partitions_of, Partition};
use uppart::paths::PathEngine;
use uppart::series::{
    s_functional_equation_holds, series_s, series_st, series_u, series_w,
    st_functional_equation_holds, w_functional_equation_holds,
};

fn criterion_1_classification() -> Result<(), String> {
    // the theorem criterion and the defining property agree for all
    // partitions of n ≤ 18
    let mut engine = PathEngine::new();
    let budget = Budget::default();
    for n in 0..=18u64 {
        for mu in partitions_of(n) {
            let brute = is_up_bruteforce(&mut engine, &mu, budget)
                .map_err(|e| e.to_string())?
                .is_up;
            if brute != is_up_theorem(&mu) {
                return Err(format!("disagreement at μ={mu}"));
            }
        }
    }
    Ok(())
}

fn criterion_2_small_counts() -> Result<(), String> {
    let u = u_table(8, None);
    let expected_u = [1u32, 2, 2, 2, 4, 4, 6, 6];
    for (n, &e) in (1..=8u64).zip(&expected_u) {
        if u.value(n) != BigUint::from(e) {
            return Err(format!("u({n}) = {} ≠ {e}", u.value(n)));
        }
    }
    let w = w_table(4, None);
    let expected_w = [1u32, 1, 2, 3];
    for (n, &e) in (1..=4u64).zip(&expected_w) {
        if w.value(n) != BigUint::from(e) {
            return Err(format!("w({n}) = {} ≠ {e}", w.value(n)));
        }
    }
    Ok(())
}

fn criterion_3_identity_web() -> Result<(), String> {
    const N: u64 = 200;
    let s = s_table(2 * N + 1, None);
    let s_star = s_star_table(N, None);
    let u = u_table(2 * N, None);
    let w = w_table(N, None);
    let v = v_table(7, None);
    let tagged: Vec<_> = (1..=N).map(|t| st_table(t, N, None)).collect();
    for r in 1..=N {
        if s.value(2 * r) != s.value(2 * r - 1)
            || s.value(2 * r + 1) != s.value(2 * r) + s.value(r)
        {
            return Err(format!("s halving identities fail at r={r}"));
        }
        if s_star.value(r) != s.value(2 * r) {
            return Err(format!("s*({r}) ≠ s(2·{r})"));
        }
        if w.value(r) * 2u32 != u.value(2 * r) {
            return Err(format!("2w({r}) ≠ u(2·{r})"));
        }
    }
    for n in 1..=N {
        let total: BigUint = tagged.iter().map(|t| t.value(n)).sum();
        if total != s.value(n) {
            return Err(format!("Σ_t s_t({n}) ≠ s({n})"));
        }
        if u.value(n) != s.value(n) + tagged[1].value(n) {
            return Err(format!("u({n}) ≠ s({n}) + s_2({n})"));
        }
        if n >= 2 {
            let high: BigUint = tagged[2..].iter().map(|t| t.value(n)).sum();
            if tagged[0].value(n) != high {
                return Err(format!("s_1({n}) ≠ Σ_t≥3 s_t({n})"));
            }
        }
    }
    for t in 1..=10u64 {
        let star = s_star_t_table(t, N / 2, None);
        let st = st_table(t, N, None);
        for r in 1..=N / 2 {
            let j = if r % 2 == 1 { 2 * r } else { 2 * r - 1 };
            if star.value(r) != st.value(j) {
                return Err(format!("s*_{t}({r}) dictionary fails"));
            }
        }
    }
    for k in 0..=7u64 {
        if v.value(k) != w_table(1 << k, None).value(1 << k) {
            return Err(format!("v({k}) ≠ w(2^{k})"));
        }
    }
    Ok(())
}

fn criterion_4_bijections() -> Result<(), String> {
    for n in 0..=64u64 {
        for sd in enumerate_sd(n) {
            let rb = sd_to_rb(&sd).map_err(|e| format!("{sd}: {e}"))?;
            if rb.size() != n || rb_to_sd(&rb) != sd {
                return Err(format!("round trip fails at {sd}"));
            }
        }
    }
    for t in 1..=10u64 {
        for n in 0..=40u64 {
            let sd_t = enumerate_sdt(t, n);
            let rb_t = enumerate_rbt(t, n);
            if sd_t.len() != rb_t.len() {
                return Err(format!(
                    "|sd_{t}({n})| = {} ≠ |rb_{t}({n})| = {}",
                    sd_t.len(),
                    rb_t.len()
                ));
            }
            for mu in &sd_t {
                let rb = sd_to_rb(mu).map_err(|e| e.to_string())?;
                if rb.largest_part_multiplicity() != Some(t) {
                    return Err(format!("{mu} does not land in rb_{t}"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_5_generating_functions() -> Result<(), String> {
    const D: usize = 200;
    if !s_functional_equation_holds(&series_s(D)) {
        return Err("S(q)(1−q) = q(1+S(q²)) fails".into());
    }
    for t in 1..=6u64 {
        if !st_functional_equation_holds(t, &series_st(t, D)) {
            return Err(format!("S_{t} functional equation fails"));
        }
    }
    if !w_functional_equation_holds(&series_w(D)) {
        return Err("W(q)(1−q) = q(1−q) + (1+q)W(q²) fails".into());
    }
    // U(q) = 2(S_1(q) + S_2(q)) carries the up-counts from n = 2 on
    let u_series = series_u(D);
    let u = u_table(D as u64, None);
    for n in 2..=D {
        let coeff = u_series.coeff(n).to_biguint().ok_or("negative coefficient")?;
        if coeff != u.value(n as u64) {
            return Err(format!("[q^{n}] U ≠ u({n})"));
        }
    }
    Ok(())
}

fn criterion_6_congruences() -> Result<(), String> {
    // parity, window constancy mod 4, v-recurrence, v mod 8 (k ≤ 16) and
    // w mod 4, all swept to N = 2^16
    let reports = theorem_sweep(1 << 16).map_err(|e| e.to_string())?;
    for report in reports {
        if !report.verified() {
            let m = &report.mismatches[0];
            return Err(format!("{} mismatch at n={}", report.theorem, m.n));
        }
    }
    Ok(())
}

fn criterion_7_sign_partitions() -> Result<(), String> {
    let mut engine = PathEngine::new();
    let budget = Budget::default();
    for n in 1..=12u64 {
        for mu in partitions_of(n).filter(is_up_theorem) {
            if !is_sign_partition_bruteforce(&mut engine, &mu, budget).map_err(|e| e.to_string())? {
                return Err(format!("up-partition {mu} is not a sign partition"));
            }
        }
    }
    let staircase = Partition::new(vec![3, 2, 1]).map_err(|e| e.to_string())?;
    let chi = engine.character_value(&staircase, &staircase).value;
    if !chi.is_zero() {
        return Err(format!("χ^(3,2,1)((3,2,1)) = {chi} ≠ 0"));
    }
    if is_up_theorem(&staircase) {
        return Err("(3,2,1) wrongly classified as up".into());
    }
    if !is_sign_partition_bruteforce(&mut engine, &staircase, budget).map_err(|e| e.to_string())? {
        return Err("(3,2,1) should be a sign partition".into());
    }
    Ok(())
}

fn criterion_8_oeis() -> Result<(), String> {
    use uppart::bfile::{compare, BFile, SequenceDiff};
    type ValueFn = Box<dyn Fn(u64) -> BigUint>;
    let cases: [(&str, i64, ValueFn); 3] = [
        ("b040039.txt", 1, {
            let t = s_table(160, None);
            Box::new(move |n| t.value(n))
        }),
        ("b033485.txt", 0, {
            let t = s_star_table(160, None);
            Box::new(move |n| t.value(n))
        }),
        ("b075535.txt", 0, {
            let t = w_table(160, None);
            Box::new(move |n| t.value(n))
        }),
    ];
    for (name, offset, value) in cases {
        let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
        let bfile = BFile::parse(&text).map_err(|e| e.to_string())?;
        match compare(&bfile, offset, 150, &value) {
            SequenceDiff::Agreement(terms) if terms >= 100 => {}
            SequenceDiff::Agreement(terms) => {
                return Err(format!("{name}: only {terms} terms compared"))
            }
            SequenceDiff::Divergence { n, .. } => {
                return Err(format!("{name}: divergence at n={n}"))
            }
        }
    }
    Ok(())
}

fn criterion_9_wr_parity() -> Result<(), String> {
    for r in 1..=6u64 {
        let table = w_r_table(r, 1 << 12, Some(2));
        let report = parity_rule(r, 1 << 12, &table).map_err(|e| e.to_string())?;
        if !report.verified() {
            let m = &report.mismatches[0];
            return Err(format!("w_{r} parity mismatch at n={}", m.n));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    type Criterion = fn() -> Result<(), String>;
    let criteria: [(&str, Criterion); 9] = [
        ("classification equivalence (n ≤ 18)", criterion_1_classification),
        ("small count tables u(1..8), w(1..4)", criterion_2_small_counts),
        ("exact identity web to N = 200", criterion_3_identity_web),
        ("sd/rb bijections (n ≤ 64, t ≤ 10)", criterion_4_bijections),
        ("generating functions to degree 200", criterion_5_generating_functions),
        ("congruence sweep mod 2/4/8 to 2^16", criterion_6_congruences),
        ("sign partitions and the (3,2,1) witness", criterion_7_sign_partitions),
        ("OEIS fixture agreement (≥ 100 terms)", criterion_8_oeis),
        ("w_r parity rule (r ≤ 6, N = 2^12)", criterion_9_wr_parity),
    ];
    let mut failed = Vec::new();
    for (i, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {}: PASS — {label}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL — {label}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
