//! Command-line front end: counting tables, classification, path listing,
//! congruence verification, enumeration and OEIS b-file cross-checks.
//!
//! Exit codes: 0 success / all verified, 1 verification mismatch,
//! 2 bad arguments, 3 enumeration budget exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use uppart::bfile::{compare, BFile, SequenceDiff};
use uppart::classify::{
    is_sd, is_sd_extension_of, is_up_bruteforce, is_up_theorem, Budget, ClassifyError,
};
use uppart::congruence::{
    explore_w_mod8, parity_rule, theorem_sweep_on, v_mod8_check, v_recurrence_check,
    w_mod4_check, window_constancy_mod4, CongruenceReport,
};
use uppart::counting::{
    enumerate_rb_checked, enumerate_rbt_checked, enumerate_sd_checked, enumerate_up_checked,
    s_star_t_table, s_star_table, s_table, st_table, u_table, v_table, w_r_table, w_table,
    CountTable, CountingError,
};
use uppart::partition::{partitions_of, Partition};
use uppart::paths::{PathEngine, PathTrace};

#[derive(Parser)]
#[command(name = "uppart", version, about = "Unique path partitions toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit CSV instead of JSON where both are supported.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a counting sequence table.
    Count(CountArgs),
    /// Classify a partition: sd / sd-extension / up, with brute force.
    Classify(ClassifyArgs),
    /// Count (and optionally list) μ-paths in λ.
    Paths(PathsArgs),
    /// Verify the congruence theorems and the classification equivalence.
    Verify(VerifyArgs),
    /// Compare a computed sequence against a local OEIS b-file.
    OeisCheck(OeisArgs),
    /// List all objects of a kind for a given n.
    Enumerate(EnumerateArgs),
    /// Tabulate w(n) mod 8 by binary-expansion features (conjectural).
    ExploreMod8(ExploreArgs),
}

#[derive(Args)]
struct CountArgs {
    /// One of: s, s_t, s*, s*_t, u, w, w_r, v.
    sequence: String,
    /// Largest index to compute.
    #[arg(long, default_value_t = 20)]
    limit: u64,
    /// Tag t for s_t / s*_t.
    #[arg(long)]
    t: Option<u64>,
    /// Family index r for w_r.
    #[arg(long)]
    r: Option<u64>,
    /// Compute the table modulo this value.
    #[arg(long)]
    modulus: Option<u64>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Partition as comma-separated parts, e.g. "3,2,1"; "0" is empty.
    mu: String,
    /// Cap on p(n) for the brute-force check.
    #[arg(long, default_value_t = 200_000)]
    budget: u64,
}

#[derive(Args)]
struct PathsArgs {
    lambda: String,
    mu: String,
    /// Also report the signed (Murnaghan–Nakayama) value.
    #[arg(long)]
    signed: bool,
    /// List up to this many explicit path traces.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep bound for the congruence checks.
    #[arg(long, default_value_t = 65_536)]
    limit: u64,
    /// Bound for the classification equivalence check.
    #[arg(long, default_value_t = 14)]
    class_limit: u64,
    /// Comma-separated subset of: parity, window-mod4, v-rec, v-mod8,
    /// w-mod4, wr-parity, classification. Default: all.
    #[arg(long, value_delimiter = ',')]
    theorems: Vec<String>,
}

#[derive(Args)]
struct OeisArgs {
    /// One of: s, s*, u, w.
    sequence: String,
    /// Path to the b-file.
    bfile: PathBuf,
    /// Added to each b-file index to get the sequence index n.
    #[arg(long, default_value_t = 0)]
    offset: i64,
    /// Compare at most up to this sequence index.
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// One of: up, sd, rb, rb_t.
    kind: String,
    n: u64,
    /// Tag t for rb_t.
    #[arg(long)]
    t: Option<u64>,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long, default_value_t = 4096)]
    limit: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink = Output::new(cli.out.clone());
    let code = match &cli.command {
        Command::Count(args) => cmd_count(args, cli.csv, &mut sink),
        Command::Classify(args) => cmd_classify(args, &mut sink),
        Command::Paths(args) => cmd_paths(args, &mut sink),
        Command::Verify(args) => cmd_verify(args, &mut sink),
        Command::OeisCheck(args) => cmd_oeis_check(args, &mut sink),
        Command::Enumerate(args) => cmd_enumerate(args, &mut sink),
        Command::ExploreMod8(args) => cmd_explore(args, &mut sink),
    };
    match code {
        Ok(code) => {
            if let Err(e) = sink.finish() {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

enum CliError {
    BadArgs(String),
    Budget(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::BadArgs(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::BadArgs(m) | CliError::Budget(m) | CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<CountingError> for CliError {
    fn from(e: CountingError) -> Self {
        match e {
            CountingError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        }
    }
}

/// Buffers lines and flushes to stdout or --out at the end.
struct Output {
    path: Option<PathBuf>,
    buf: String,
}

impl Output {
    fn new(path: Option<PathBuf>) -> Self {
        Output {
            path,
            buf: String::new(),
        }
    }

    fn line(&mut self, s: &str) {
        self.buf.push_str(s);
        self.buf.push('\n');
    }

    fn json(&mut self, v: &Value) {
        self.line(&serde_json::to_string_pretty(v).expect("serializable"));
    }

    fn finish(self) -> Result<(), String> {
        match self.path {
            None => {
                print!("{}", self.buf);
                Ok(())
            }
            Some(p) => fs::write(&p, self.buf).map_err(|e| format!("{}: {e}", p.display())),
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u64>, _> = trimmed.split(',').map(|p| p.trim().parse()).collect();
    let parts =
        parts.map_err(|_| CliError::BadArgs(format!("cannot parse partition {trimmed:?}")))?;
    Partition::new(parts).map_err(|e| CliError::BadArgs(e.to_string()))
}

fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

fn trace_json(t: &PathTrace) -> Value {
    json!({
        "partitions": t.partitions.iter().map(partition_json).collect::<Vec<_>>(),
        "legs": t.legs,
        "sign": t.sign(),
    })
}

fn build_table(args: &CountArgs) -> Result<CountTable, CliError> {
    let need_param = |name: &str, v: Option<u64>| {
        v.ok_or_else(|| CliError::BadArgs(format!("sequence {name} requires --{}", if name.starts_with('s') { "t" } else { "r" })))
    };
    let n = args.limit;
    if n < 1 {
        return Err(CliError::BadArgs("--limit must be at least 1".into()));
    }
    let m = args.modulus;
    Ok(match args.sequence.as_str() {
        "s" => s_table(n, m),
        "s_t" | "st" => st_table(need_param("s_t", args.t)?, n, m),
        "s*" | "s_star" => s_star_table(n, m),
        "s*_t" | "s_star_t" => s_star_t_table(need_param("s*_t", args.t)?, n, m),
        "u" => u_table(n, m),
        "w" => w_table(n, m),
        "w_r" | "wr" => w_r_table(need_param("w_r", args.r)?, n, m),
        "v" => v_table(n, m),
        other => {
            return Err(CliError::BadArgs(format!(
                "unknown sequence {other:?}; expected s, s_t, s*, s*_t, u, w, w_r or v"
            )))
        }
    })
}

fn cmd_count(args: &CountArgs, csv: bool, out: &mut Output) -> Result<ExitCode, CliError> {
    let table = build_table(args)?;
    if csv {
        out.line("n,value");
        for (n, v) in table.iter() {
            out.line(&format!("{n},{v}"));
        }
    } else {
        let values: Vec<Value> = table
            .iter()
            .map(|(n, v)| json!({"n": n, "value": v.to_string()}))
            .collect();
        out.json(&json!({
            "schema": "uppart/1",
            "sequence": table.name,
            "param": table.param,
            "modulus": table.modulus(),
            "values": values,
        }));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: &ClassifyArgs, out: &mut Output) -> Result<ExitCode, CliError> {
    let mu = parse_partition(&args.mu)?;
    let one_one = Partition::new(vec![1, 1]).expect("valid");
    let sd = is_sd(&mu).is_sd;
    let sd_ext = is_sd_extension_of(&mu, &one_one);
    let theorem = is_up_theorem(&mu);
    let budget = Budget {
        max_partitions: args.budget,
    };
    let mut engine = PathEngine::new();
    let (brute, witness, budget_note) = match is_up_bruteforce(&mut engine, &mu, budget) {
        Ok(v) => {
            let witness = v.witness.as_ref().map(|(lambda, traces)| {
                json!({
                    "lambda": partition_json(lambda),
                    "traces": [trace_json(&traces[0]), trace_json(&traces[1])],
                })
            });
            (json!(v.is_up), witness.unwrap_or(Value::Null), Value::Null)
        }
        Err(e @ ClassifyError::BudgetExceeded { .. }) => {
            (Value::Null, Value::Null, json!(e.to_string()))
        }
    };
    out.json(&json!({
        "schema": "uppart/1",
        "mu": partition_json(&mu),
        "sd": sd,
        "sd_ext_of_1_1": sd_ext,
        "up_theorem": theorem,
        "up_bruteforce": brute,
        "witness": witness,
        "budget_exceeded": budget_note,
    }));
    Ok(ExitCode::SUCCESS)
}

fn cmd_paths(args: &PathsArgs, out: &mut Output) -> Result<ExitCode, CliError> {
    let lambda = parse_partition(&args.lambda)?;
    let mu = parse_partition(&args.mu)?;
    if lambda.size() != mu.size() {
        return Err(CliError::BadArgs(format!(
            "|λ| = {} but |μ| = {}; sizes must match",
            lambda.size(),
            mu.size()
        )));
    }
    let mut engine = PathEngine::new();
    let count = engine.count_paths(&lambda, &mu).count;
    let chi = args
        .signed
        .then(|| engine.character_value(&lambda, &mu).value.to_string());
    let traces = args.limit.map(|limit| {
        let en = engine.enumerate_paths(&lambda, &mu, limit.max(1));
        json!({
            "truncated": en.truncated,
            "traces": en.traces.iter().map(trace_json).collect::<Vec<_>>(),
        })
    });
    out.json(&json!({
        "schema": "uppart/1",
        "lambda": partition_json(&lambda),
        "mu": partition_json(&mu),
        "count": count.to_string(),
        "chi": chi,
        "paths": traces,
    }));
    Ok(ExitCode::SUCCESS)
}

fn report_line(report: &CongruenceReport) -> String {
    if report.verified() {
        format!(
            "verified  {} [{}..{}]",
            report.theorem, report.range.0, report.range.1
        )
    } else {
        let m = &report.mismatches[0];
        format!(
            "MISMATCH  {} at n={}: predicted {}, computed {}",
            report.theorem, m.n, m.predicted, m.computed
        )
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut Output) -> Result<ExitCode, CliError> {
    let wants = |name: &str| args.theorems.is_empty() || args.theorems.iter().any(|t| t == name);
    if args.limit < 16 {
        return Err(CliError::BadArgs("--limit must be at least 16".into()));
    }
    let table = w_table(args.limit, Some(8));
    let mut reports: Vec<CongruenceReport> = Vec::new();
    let all = args.theorems.is_empty();
    if all {
        reports = theorem_sweep_on(&table)
            .map_err(|e| CliError::BadArgs(e.to_string()))?;
    } else {
        let k_max = args.limit.ilog2();
        let mut push = |r: Result<CongruenceReport, _>| -> Result<(), CliError> {
            reports.push(r.map_err(|e: uppart::congruence::CongruenceError| {
                CliError::BadArgs(e.to_string())
            })?);
            Ok(())
        };
        if wants("parity") {
            push(parity_rule(1, args.limit, &table))?;
        }
        if wants("window-mod4") {
            push(window_constancy_mod4(args.limit, &table))?;
        }
        if wants("v-rec") {
            push(v_recurrence_check(k_max, &table))?;
        }
        if wants("v-mod8") {
            push(v_mod8_check(k_max, &table))?;
        }
        if wants("w-mod4") {
            push(w_mod4_check(args.limit, &table))?;
        }
    }
    if wants("wr-parity") {
        let bound = args.limit.min(4096);
        for r in 1..=6u64 {
            let wr = w_r_table(r, bound, Some(8));
            let report =
                parity_rule(r, bound, &wr).map_err(|e| CliError::BadArgs(e.to_string()))?;
            reports.push(report);
        }
    }
    let mut all_ok = true;
    for report in &reports {
        all_ok &= report.verified();
        out.line(&report_line(report));
    }
    if wants("classification") {
        let (ok, detail) = classification_equivalence(args.class_limit);
        all_ok &= ok;
        out.line(&detail);
    }
    out.line(if all_ok {
        "verify: all checks passed"
    } else {
        "verify: FAILURES above"
    });
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn classification_equivalence(n_max: u64) -> (bool, String) {
    let mut engine = PathEngine::new();
    let budget = Budget::default();
    for n in 0..=n_max {
        for mu in partitions_of(n) {
            let brute = match is_up_bruteforce(&mut engine, &mu, budget) {
                Ok(v) => v.is_up,
                Err(e) => return (false, format!("MISMATCH  classification: {e}")),
            };
            if brute != is_up_theorem(&mu) {
                return (
                    false,
                    format!("MISMATCH  classification at μ={mu} (n={n})"),
                );
            }
        }
    }
    (true, format!("verified  classification [0..{n_max}]"))
}

fn cmd_oeis_check(args: &OeisArgs, out: &mut Output) -> Result<ExitCode, CliError> {
    let text = fs::read_to_string(&args.bfile)
        .map_err(|e| CliError::Io(format!("{}: {e}", args.bfile.display())))?;
    let bfile = BFile::parse(&text).map_err(|e| CliError::BadArgs(e.to_string()))?;
    let max_index = bfile
        .entries
        .iter()
        .map(|&(i, _)| i + args.offset)
        .filter(|&i| i >= 1)
        .max()
        .unwrap_or(0)
        .max(1) as u64;
    let n_max = args.limit.unwrap_or(max_index).min(max_index);
    let table = match args.sequence.as_str() {
        "s" => s_table(n_max, None),
        "s*" | "s_star" => s_star_table(n_max, None),
        "u" => u_table(n_max, None),
        "w" => w_table(n_max, None),
        other => {
            return Err(CliError::BadArgs(format!(
                "unknown sequence {other:?}; expected s, s*, u or w"
            )))
        }
    };
    let diff = compare(&bfile, args.offset, n_max, |n| table.value(n));
    match diff {
        SequenceDiff::Agreement(terms) => {
            out.json(&json!({
                "schema": "uppart/1",
                "sequence": table.name,
                "bfile": args.bfile.display().to_string(),
                "status": "agreement",
                "terms_compared": terms,
            }));
            Ok(ExitCode::SUCCESS)
        }
        SequenceDiff::Divergence {
            n,
            expected,
            computed,
        } => {
            out.json(&json!({
                "schema": "uppart/1",
                "sequence": table.name,
                "bfile": args.bfile.display().to_string(),
                "status": "divergence",
                "n": n,
                "expected": expected.to_string(),
                "computed": computed.to_string(),
            }));
            Ok(ExitCode::FAILURE)
        }
    }
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut Output) -> Result<ExitCode, CliError> {
    let n = args.n;
    let (lines, expected): (Vec<String>, BigUint) = match args.kind.as_str() {
        "up" => {
            let items = enumerate_up_checked(n)?;
            let count = u_table(n.max(1), None).value(n.max(1));
            (items.iter().map(|p| part_line(p.parts())).collect(), count)
        }
        "sd" => {
            let items = enumerate_sd_checked(n)?;
            let count = s_table(n.max(1), None).value(n.max(1));
            (items.iter().map(|p| part_line(p.parts())).collect(), count)
        }
        "rb" => {
            let items = enumerate_rb_checked(n)?;
            let count = s_table(n.max(1), None).value(n.max(1));
            (items.iter().map(|r| part_line(&r.parts())).collect(), count)
        }
        "rb_t" | "rbt" => {
            let t = args
                .t
                .ok_or_else(|| CliError::BadArgs("kind rb_t requires --t".into()))?;
            let items = enumerate_rbt_checked(t, n)?;
            let count = st_table(t, n.max(1), None).value(n.max(1));
            (items.iter().map(|r| part_line(&r.parts())).collect(), count)
        }
        other => {
            return Err(CliError::BadArgs(format!(
                "unknown kind {other:?}; expected up, sd, rb or rb_t"
            )))
        }
    };
    let count = lines.len();
    for line in lines {
        out.line(&line);
    }
    out.line(&format!("count: {count}"));
    // n = 0 has the single empty object but no table entry
    if n >= 1 {
        debug_assert_eq!(BigUint::from(count), expected);
    }
    Ok(ExitCode::SUCCESS)
}

fn part_line(parts: &[u64]) -> String {
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn cmd_explore(args: &ExploreArgs, out: &mut Output) -> Result<ExitCode, CliError> {
    if args.limit < 16 {
        return Err(CliError::BadArgs("--limit must be at least 16".into()));
    }
    let report = explore_w_mod8(args.limit);
    out.line(&serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}
