//! Command-line front end for the pattern-occurrence engines.
//!
//! Subcommands: `sequence` (one truncated coefficient across n), `fullpoly`
//! (the whole distribution polynomial at one n), `joint` (two patterns at
//! once), `oracle` (brute-force scan), `verify` (engines against the
//! oracle), and `conjecture` (polynomial-times-2^n fitting).
//!
//! Exit codes: 0 success, 1 usage error, 2 computation refusal (limits),
//! 3 verification mismatch.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;

use patdist_core::engines::{EngineKind, JointKind};
use patdist_core::oracle::{
    brute_force_distribution, first_mismatch, first_mismatch_bi, first_mismatch_q, Mismatch,
    OracleOptions, DEFAULT_ORACLE_LIMIT,
};
use patdist_core::perm::Permutation;
use patdist_core::poly::{Cap, QPoly};
use patdist_core::seqtools::{
    check_poly_times_2n, emit, parse_json, EmitFormat, FitResult, FitVerdict, SequenceRecord,
};

#[derive(Parser)]
#[command(
    name = "patdist",
    version,
    about = "Exact enumeration of permutations by pattern-occurrence counts",
    after_help = "Exit codes: 0 success, 1 usage error, 2 refusal (limits), 3 verify mismatch.\n\
                  Every flag can also be set via PATDIST_<FLAG> environment variables."
)]
struct Cli {
    /// Size of the worker pool for parallel work (oracle scans, verify).
    #[arg(long, global = true, env = "PATDIST_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Terms of s_n(pattern, r) for n = 1..=n-max at a fixed cap r.
    Sequence(SequenceArgs),
    /// The full distribution polynomial f_n(t) for one pattern.
    Fullpoly(FullpolyArgs),
    /// Joint two-pattern sequence: permutations with r1 occurrences of the
    /// first pattern and r2 of the second.
    Joint(JointArgs),
    /// Brute-force joint distribution over all of S_n.
    Oracle(OracleArgs),
    /// Check every engine against the brute-force oracle.
    Verify(VerifyArgs),
    /// Probe whether the (123, 132) joint count has the shape p(n) * 2^n.
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct SequenceArgs {
    /// Pattern digits: 123, 1234, 132, 1243, 12354, 231, 2341 (or 1432,
    /// served by the 2341 engine).
    #[arg(long, env = "PATDIST_PATTERN")]
    pattern: String,
    /// Occurrence count to enumerate (the truncation cap).
    #[arg(long, env = "PATDIST_R")]
    r: usize,
    /// Last n to emit (sequences start at n = 1).
    #[arg(long = "n-max", env = "PATDIST_N_MAX", default_value_t = 15)]
    n_max: usize,
    /// Refine by inversion count; terms become polynomials in q
    /// (plain/json output only).
    #[arg(long, env = "PATDIST_Q")]
    q: bool,
    /// Output format: bfile, json, csv, or plain.
    #[arg(long, env = "PATDIST_FORMAT", default_value = "plain")]
    format: String,
    /// Bound on memoized states; beyond it the engine recomputes
    /// (identical results, less memory).
    #[arg(long = "memo-limit", env = "PATDIST_MEMO_LIMIT")]
    memo_limit: Option<usize>,
    /// Opt-in cache directory for computed sequences.
    #[arg(long = "cache-dir", env = "PATDIST_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct FullpolyArgs {
    /// Pattern digits (same set as `sequence`).
    #[arg(long, env = "PATDIST_PATTERN")]
    pattern: String,
    /// Permutation length n.
    #[arg(long, env = "PATDIST_N")]
    n: usize,
    /// Track inversions: emits g_n(t, q) instead of f_n(t).
    #[arg(long, env = "PATDIST_Q")]
    q: bool,
    /// Output format: plain or json.
    #[arg(long, env = "PATDIST_FORMAT", default_value = "plain")]
    format: String,
    /// Refuse full-mode runs above this n (state space grows explosively).
    #[arg(long = "full-limit", env = "PATDIST_FULL_LIMIT", default_value_t = 11)]
    full_limit: usize,
}

#[derive(Args)]
struct JointArgs {
    /// Pattern pair, comma separated: "123,132" or "1234,1243".
    #[arg(long, env = "PATDIST_PATTERNS")]
    patterns: String,
    /// Cap for the first pattern's count.
    #[arg(long, env = "PATDIST_R1")]
    r1: usize,
    /// Cap for the second pattern's count.
    #[arg(long, env = "PATDIST_R2")]
    r2: usize,
    /// Last n to emit.
    #[arg(long = "n-max", env = "PATDIST_N_MAX", default_value_t = 15)]
    n_max: usize,
    /// Refine by inversion count (plain/json output only).
    #[arg(long, env = "PATDIST_Q")]
    q: bool,
    /// Output format: bfile, json, csv, or plain.
    #[arg(long, env = "PATDIST_FORMAT", default_value = "plain")]
    format: String,
    #[arg(long = "memo-limit", env = "PATDIST_MEMO_LIMIT")]
    memo_limit: Option<usize>,
    #[arg(long = "cache-dir", env = "PATDIST_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Comma-separated pattern digit strings; any patterns are accepted
    /// here (e.g. "321" or all six of S_3).
    #[arg(long, env = "PATDIST_PATTERNS")]
    patterns: String,
    /// Permutation length to scan (all n! permutations).
    #[arg(long, env = "PATDIST_N")]
    n: usize,
    /// Also record the inversion count (a final q exponent).
    #[arg(long, env = "PATDIST_Q")]
    q: bool,
    /// Refuse scans above this n.
    #[arg(long = "oracle-limit", env = "PATDIST_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    /// Output format: plain or json.
    #[arg(long, env = "PATDIST_FORMAT", default_value = "plain")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// What to verify: "all" (default), or a comma list of engine patterns
    /// and joint pairs ("132,231,123+132").
    #[arg(long, env = "PATDIST_PATTERNS", default_value = "all")]
    patterns: String,
    /// Verify n = 0..=n-max (bounded by the oracle limit).
    #[arg(long = "n-max", env = "PATDIST_N_MAX", default_value_t = 7)]
    n_max: usize,
    /// Also verify the inversion-refined engines.
    #[arg(long, env = "PATDIST_Q")]
    q: bool,
    #[arg(long = "oracle-limit", env = "PATDIST_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Occurrences of 123.
    #[arg(long, env = "PATDIST_R")]
    r: usize,
    /// Occurrences of 132.
    #[arg(long, env = "PATDIST_S")]
    s: usize,
    /// Last n fed to the fitter (default r + s + 12).
    #[arg(long = "n-max", env = "PATDIST_N_MAX")]
    n_max: Option<usize>,
    /// Output format: plain or json.
    #[arg(long, env = "PATDIST_FORMAT", default_value = "plain")]
    format: String,
}

/// Failures carrying their process exit code.
enum Failure {
    Usage(String),
    Refusal(String),
    MismatchFound(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Refusal(_) => 2,
            Failure::MismatchFound(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Refusal(m) | Failure::MismatchFound(m) => m,
        }
    }
}

impl From<patdist_core::Error> for Failure {
    fn from(e: patdist_core::Error) -> Self {
        match e {
            patdist_core::Error::OracleLimit { .. } => Failure::Refusal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("io error: {e}"))
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot size worker pool: {e}");
            std::process::exit(1);
        }
    }
    let result = match cli.command {
        Command::Sequence(args) => cmd_sequence(args),
        Command::Fullpoly(args) => cmd_fullpoly(args),
        Command::Joint(args) => cmd_joint(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Conjecture(args) => cmd_conjecture(args),
    };
    match result {
        Ok(()) => {}
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            std::process::exit(failure.code());
        }
    }
}

fn parse_format(s: &str) -> Result<EmitFormat, Failure> {
    EmitFormat::from_str(s).map_err(Failure::from)
}

fn require_n_max(n_max: usize) -> Result<(), Failure> {
    if n_max < 1 {
        return Err(Failure::Usage("n-max must be at least 1".into()));
    }
    Ok(())
}

/// Print emitted text with exactly one trailing newline.
fn print_block(text: &str) {
    if text.ends_with('\n') {
        print!("{text}");
    } else {
        println!("{text}");
    }
}

fn cache_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn load_cached(dir: &Option<PathBuf>, name: &str) -> Option<SequenceRecord> {
    let dir = dir.as_ref()?;
    let text = std::fs::read_to_string(cache_path(dir, name)).ok()?;
    parse_json(&text).ok()
}

fn store_cached(dir: &Option<PathBuf>, name: &str, rec: &SequenceRecord) -> Result<(), Failure> {
    let Some(dir) = dir else { return Ok(()) };
    std::fs::create_dir_all(dir)?;
    std::fs::write(cache_path(dir, name), emit(rec, EmitFormat::Json))?;
    Ok(())
}

fn cmd_sequence(args: SequenceArgs) -> Result<(), Failure> {
    require_n_max(args.n_max)?;
    let format = parse_format(&args.format)?;
    let (kind, alias) = EngineKind::from_digits(&args.pattern)?;
    let note = alias.then(|| {
        format!(
            "pattern {} served by the {} engine (its reversal)",
            args.pattern,
            kind.digits()
        )
    });

    if args.q {
        let terms = kind.sequence_q(args.r, args.n_max, args.memo_limit);
        return emit_q_sequence(
            kind.family(),
            &[args.pattern],
            &[args.r],
            note,
            &terms,
            format,
        );
    }

    let cache_name = format!("seq-{}-r{}-n{}.json", args.pattern, args.r, args.n_max);
    let record = match load_cached(&args.cache_dir, &cache_name) {
        Some(rec) => rec,
        None => {
            let values = kind.sequence(args.r, args.n_max, args.memo_limit);
            let rec = SequenceRecord {
                engine: kind.family().into(),
                patterns: vec![args.pattern.clone()],
                caps: vec![args.r as u64],
                q: false,
                note,
                offset: 1,
                values,
            };
            store_cached(&args.cache_dir, &cache_name, &rec)?;
            rec
        }
    };
    print_block(&emit(&record, format));
    Ok(())
}

fn emit_q_sequence(
    engine: &str,
    patterns: &[String],
    caps: &[usize],
    note: Option<String>,
    terms: &[QPoly],
    format: EmitFormat,
) -> Result<(), Failure> {
    match format {
        EmitFormat::Plain => {
            let rendered: Vec<String> = terms.iter().map(|p| p.to_string()).collect();
            println!("{}", rendered.join("; "));
            Ok(())
        }
        EmitFormat::Json => {
            let values: Vec<Vec<String>> = terms
                .iter()
                .map(|p| p.coeffs().iter().map(BigInt::to_string).collect())
                .collect();
            let obj = serde_json::json!({
                "engine": engine,
                "patterns": patterns,
                "caps": caps,
                "q": true,
                "note": note,
                "offset": 1,
                "values": values,
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
            Ok(())
        }
        other => Err(Failure::Usage(format!(
            "q-refined terms are polynomials in q; format {other} cannot hold them \
             (use plain or json)"
        ))),
    }
}

fn cmd_fullpoly(args: FullpolyArgs) -> Result<(), Failure> {
    let format = parse_format(&args.format)?;
    let (kind, alias) = EngineKind::from_digits(&args.pattern)?;
    if args.n > args.full_limit {
        return Err(Failure::Refusal(format!(
            "full-mode n = {} exceeds the limit {} (raise --full-limit to force)",
            args.n, args.full_limit
        )));
    }
    if alias {
        eprintln!(
            "note: pattern {} served by the {} engine (its reversal)",
            args.pattern,
            kind.digits()
        );
    }
    match (args.q, format) {
        (false, EmitFormat::Plain) => {
            println!("{}", kind.evaluate(args.n, Cap::Unbounded));
        }
        (false, EmitFormat::Json) => {
            let poly = kind.evaluate(args.n, Cap::Unbounded);
            let obj = serde_json::json!({
                "pattern": args.pattern,
                "n": args.n,
                "q": false,
                "coefficients": poly.coeff_strings(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
        }
        (true, EmitFormat::Plain) => {
            println!("{}", kind.evaluate_q(args.n, Cap::Unbounded));
        }
        (true, EmitFormat::Json) => {
            let poly = kind.evaluate_q(args.n, Cap::Unbounded);
            let obj = serde_json::json!({
                "pattern": args.pattern,
                "n": args.n,
                "q": true,
                "coefficients": poly.coeff_strings(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
        }
        (_, other) => {
            return Err(Failure::Usage(format!(
                "fullpoly supports plain or json output, not {other}"
            )));
        }
    }
    Ok(())
}

fn parse_pattern_pair(s: &str) -> Result<JointKind, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!(
            "expected two comma-separated patterns, got {s:?}"
        )));
    }
    Ok(JointKind::from_digit_pair(parts[0], parts[1])?)
}

fn cmd_joint(args: JointArgs) -> Result<(), Failure> {
    require_n_max(args.n_max)?;
    let format = parse_format(&args.format)?;
    let kind = parse_pattern_pair(&args.patterns)?;
    let (a, b) = kind.digit_pair();
    let patterns = vec![a.to_string(), b.to_string()];

    if args.q {
        let mut engine = kind.engine::<QPoly>(Cap::Finite(args.r1), Cap::Finite(args.r2));
        engine.set_memo_limit(args.memo_limit);
        let terms: Vec<QPoly> = (1..=args.n_max)
            .map(|n| engine.poly(n).coeff(args.r1, args.r2))
            .collect();
        return emit_q_sequence(
            "joint",
            &patterns,
            &[args.r1, args.r2],
            None,
            &terms,
            format,
        );
    }

    let cache_name = format!(
        "joint-{}-{}-r{}-{}-n{}.json",
        a, b, args.r1, args.r2, args.n_max
    );
    let record = match load_cached(&args.cache_dir, &cache_name) {
        Some(rec) => rec,
        None => {
            let values = kind.sequence(args.r1, args.r2, args.n_max, args.memo_limit);
            let rec = SequenceRecord {
                engine: "joint".into(),
                patterns,
                caps: vec![args.r1 as u64, args.r2 as u64],
                q: false,
                note: None,
                offset: 1,
                values,
            };
            store_cached(&args.cache_dir, &cache_name, &rec)?;
            rec
        }
    };
    print_block(&emit(&record, format));
    Ok(())
}

fn parse_oracle_patterns(s: &str) -> Result<Vec<Permutation>, Failure> {
    let taus: Vec<Permutation> = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|item| Permutation::from_digits(item).map_err(Failure::from))
        .collect::<Result<_, _>>()?;
    if taus.is_empty() {
        return Err(Failure::Usage("need at least one pattern".into()));
    }
    Ok(taus)
}

fn cmd_oracle(args: OracleArgs) -> Result<(), Failure> {
    let format = parse_format(&args.format)?;
    let taus = parse_oracle_patterns(&args.patterns)?;
    let opts = OracleOptions {
        limit: args.oracle_limit,
        track_inversions: args.q,
    };
    let dist = brute_force_distribution(args.n, &taus, &opts)?;
    match format {
        EmitFormat::Plain => println!("{dist}"),
        EmitFormat::Json => {
            let terms: Vec<serde_json::Value> = dist
                .terms()
                .map(|(exps, count)| {
                    serde_json::json!({
                        "exponents": exps,
                        "count": count.to_string(),
                    })
                })
                .collect();
            let obj = serde_json::json!({
                "patterns": taus.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "n": args.n,
                "q": args.q,
                "total": dist.total().to_string(),
                "terms": terms,
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
        }
        other => {
            return Err(Failure::Usage(format!(
                "oracle output is a multivariate polynomial; format {other} cannot hold it \
                 (use plain or json)"
            )));
        }
    }
    Ok(())
}

/// One verification task: an engine (or joint pair) against the oracle for
/// every n up to the bound.
enum VerifyTask {
    Single(EngineKind),
    Joint(JointKind),
}

impl VerifyTask {
    fn label(&self) -> String {
        match self {
            VerifyTask::Single(kind) => kind.digits().to_string(),
            VerifyTask::Joint(kind) => {
                let (a, b) = kind.digit_pair();
                format!("{a}+{b}")
            }
        }
    }

    fn run(&self, n_max: usize, q: bool, limit: usize) -> Result<String, (String, Mismatch)> {
        let opts = OracleOptions {
            limit,
            track_inversions: false,
        };
        let q_opts = OracleOptions {
            limit,
            track_inversions: true,
        };
        let label = self.label();
        match self {
            VerifyTask::Single(kind) => {
                let tau = [kind.pattern()];
                let mut plain = kind.evaluator::<num_bigint::BigInt>(Cap::Unbounded);
                let mut refined = kind.evaluator::<QPoly>(Cap::Unbounded);
                for n in 0..=n_max {
                    let scan = brute_force_distribution(n, &tau, &opts)
                        .expect("bound checked before dispatch");
                    let expected = scan.to_trunc_poly(Cap::Unbounded);
                    if let Some(m) = first_mismatch(n, &plain.poly(n), &expected) {
                        return Err((label, m));
                    }
                    if q {
                        let scan = brute_force_distribution(n, &tau, &q_opts)
                            .expect("bound checked before dispatch");
                        let expected = scan.to_trunc_qpoly(Cap::Unbounded);
                        if let Some(m) = first_mismatch_q(n, &refined.poly(n), &expected) {
                            return Err((label, m));
                        }
                    }
                }
            }
            VerifyTask::Joint(kind) => {
                let taus = kind.patterns();
                let mut plain = kind.engine::<num_bigint::BigInt>(Cap::Unbounded, Cap::Unbounded);
                for n in 0..=n_max {
                    let scan = brute_force_distribution(n, &taus, &opts)
                        .expect("bound checked before dispatch");
                    let expected = scan.to_bi_poly(Cap::Unbounded, Cap::Unbounded);
                    if let Some(m) = first_mismatch_bi(n, &plain.poly(n), &expected) {
                        return Err((label, m));
                    }
                    if q {
                        let scan = brute_force_distribution(n, &taus, &q_opts)
                            .expect("bound checked before dispatch");
                        let refined = kind.evaluate_q(n, Cap::Unbounded, Cap::Unbounded);
                        if refined != scan.to_bi_qpoly(Cap::Unbounded, Cap::Unbounded) {
                            let m = Mismatch {
                                n,
                                exponents: Vec::new(),
                                engine: BigInt::from(0),
                                oracle: BigInt::from(0),
                            };
                            return Err((format!("{label}[q]"), m));
                        }
                    }
                }
            }
        }
        let suffix = if q { " (plain and q-refined)" } else { "" };
        Ok(format!(
            "ok  {label:<11} matches the oracle for n = 0..={n_max}{suffix}"
        ))
    }
}

fn parse_verify_tasks(s: &str) -> Result<Vec<VerifyTask>, Failure> {
    if s == "all" {
        let mut tasks: Vec<VerifyTask> = EngineKind::ALL
            .into_iter()
            .map(VerifyTask::Single)
            .collect();
        tasks.extend(JointKind::ALL.into_iter().map(VerifyTask::Joint));
        return Ok(tasks);
    }
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|item| match item.split_once('+') {
            Some((a, b)) => Ok(VerifyTask::Joint(JointKind::from_digit_pair(a, b)?)),
            None => {
                let (kind, _) = EngineKind::from_digits(item)?;
                Ok(VerifyTask::Single(kind))
            }
        })
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.n_max > args.oracle_limit {
        return Err(Failure::Refusal(format!(
            "verification scans all n! permutations; n = {} exceeds the oracle limit {} \
             (raise --oracle-limit to force)",
            args.n_max, args.oracle_limit
        )));
    }
    let tasks = parse_verify_tasks(&args.patterns)?;
    let results: Vec<Result<String, (String, Mismatch)>> = tasks
        .par_iter()
        .map(|task| task.run(args.n_max, args.q, args.oracle_limit))
        .collect();

    let mut failed = None;
    for result in results {
        match result {
            Ok(line) => println!("{line}"),
            Err((label, m)) => {
                println!("MISMATCH {label}: {m}");
                failed.get_or_insert(label);
            }
        }
    }
    match failed {
        None => Ok(()),
        Some(label) => Err(Failure::MismatchFound(format!(
            "engine {label} disagrees with the oracle"
        ))),
    }
}

fn render_poly_coeffs(fit: &FitResult) -> String {
    let mut out = String::new();
    for (k, c) in fit.poly_coeffs.iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        match k {
            0 => write!(out, "{c}").expect("string write"),
            1 => write!(out, "({c})*n").expect("string write"),
            _ => write!(out, "({c})*n^{k}").expect("string write"),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn cmd_conjecture(args: ConjectureArgs) -> Result<(), Failure> {
    let n_max = args.n_max.unwrap_or(args.r + args.s + 12);
    let format = parse_format(&args.format)?;
    let fit = check_poly_times_2n(args.r, args.s, n_max);
    if let FitVerdict::InsufficientData { required, given } = fit.verdict {
        return Err(Failure::Usage(format!(
            "insufficient data: the degree-{} fit needs n-max >= {required}, got {given}",
            args.r + args.s
        )));
    }
    match format {
        EmitFormat::Plain => {
            println!(
                "counts: permutations with {} occurrences of 123 and {} of 132",
                args.r, args.s
            );
            println!("checked n = {}..={}", fit.valid_from, fit.checked_to);
            match fit.verdict {
                FitVerdict::Fits => {
                    println!("verdict: fits");
                    println!(
                        "a(n) = p(n) * 2^n with p(n) = {} (degree {}), valid from n = {}",
                        render_poly_coeffs(&fit),
                        fit.poly_coeffs.len().saturating_sub(1),
                        fit.valid_from
                    );
                }
                FitVerdict::FailsAt(n) => {
                    println!("verdict: fails at n = {n}");
                }
                FitVerdict::InsufficientData { .. } => unreachable!("handled above"),
            }
        }
        EmitFormat::Json => {
            let (verdict, fails_at) = match fit.verdict {
                FitVerdict::Fits => ("fits", None),
                FitVerdict::FailsAt(n) => ("fails-at", Some(n)),
                FitVerdict::InsufficientData { .. } => unreachable!("handled above"),
            };
            let obj = serde_json::json!({
                "r": args.r,
                "s": args.s,
                "verdict": verdict,
                "fails_at": fails_at,
                "valid_from": fit.valid_from,
                "checked_to": fit.checked_to,
                "poly_coeffs": fit
                    .poly_coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
        }
        other => {
            return Err(Failure::Usage(format!(
                "conjecture reports support plain or json output, not {other}"
            )));
        }
    }
    Ok(())
}
