//! Command-line front end: single-knot queries, range verification and
//! machine-readable tables.
//!
//! Every command emits in one of three formats (`--format human|json|csv`).
//! The json and csv outputs are deterministic: rows are sorted
//! lexicographically by `(p, q)`, rationals are rendered as exact
//! `num/den` strings, and timing information only appears in the human
//! format.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 resource-cap error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, QuarterRational};
use crate::batson::{
    batson_sequence_with_cap, pretzel_f, verify_theorem_with_cap, BatsonSequence, InvariantRecord,
};
use crate::braid::DEFAULT_BRAID_CAP;
use crate::error::{Error, Result};
use crate::knot::TorusKnot;
use crate::signature::{sigma_count_with_cap, sigma_two_strand, DEFAULT_SIGMA_CAP};
use crate::upsilon::upsilon_fk_fast;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Largest strand count accepted on the command line; keeps every
/// intermediate product comfortably inside 64-bit arithmetic.
pub const MAX_PARAMETER: i64 = 1_000_000;

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "ust",
    version,
    about = "Exact torus-knot invariant data: upsilon, signature, band-move \
             cobordism sequences, and verification of upsilon - sigma/2 = b2^-"
)]
pub struct RunConfig {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker pool size for the range commands (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    workers: Option<usize>,

    /// Cap on p*q for signature scans.
    #[arg(long, global = true, value_name = "M", default_value_t = DEFAULT_SIGMA_CAP)]
    sigma_cap: i64,

    /// Cap on q(p-1) for braid simulations.
    #[arg(long, global = true, value_name = "M", default_value_t = DEFAULT_BRAID_CAP)]
    braid_cap: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// upsilon(T(p,q)) by the recursion and by the band-move sum.
    Upsilon {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// sigma(T(p,q)) with its cross-checks.
    Sigma {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// The band-move cobordism sequence for T(p,q), one row per step.
    Batson {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// Check upsilon - sigma/2 = b2^- for every coprime pair q < p <= N.
    Verify {
        #[arg(long, value_name = "N")]
        max: i64,
    },
    /// f(P(-2,p,q)) = (2-p-q)/2 for odd p, q >= 3.
    Pretzel { p: i64, q: i64 },
    /// Invariant records for every coprime pair q < p <= N.
    Table {
        #[arg(long, value_name = "N")]
        max: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

/// Entry point used by the binary: parses `std::env::args_os()` and writes
/// to standard output.
pub fn main_entry() -> i32 {
    let mut stdout = std::io::stdout().lock();
    run(std::env::args_os(), &mut stdout)
}

/// Parses `args` and executes the command, writing the report to `out`
/// (or to `--out PATH` when given). Returns the process exit code.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            err.print().ok();
            return code;
        }
    };
    match execute(&config) {
        Ok((text, code)) => {
            let delivered = match &config.out {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out
                    .write_all(text.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            if let Err(msg) = delivered {
                eprintln!("error: {msg}");
                return EXIT_USAGE;
            }
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_RESOURCE,
        Error::Verification { .. } => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

fn execute(config: &RunConfig) -> Result<(String, i32)> {
    match config.command {
        Command::Upsilon { p, q } => cmd_upsilon(p, q, config),
        Command::Sigma { p, q } => cmd_sigma(p, q, config),
        Command::Batson { p, q } => cmd_batson(p, q, config),
        Command::Verify { max } => cmd_verify(max, config),
        Command::Pretzel { p, q } => cmd_pretzel(p, q, config),
        Command::Table { max } => cmd_table(max, config),
    }
}

fn parse_knot(p: i64, q: i64) -> Result<TorusKnot> {
    for v in [p, q] {
        if v.unsigned_abs() > MAX_PARAMETER as u64 {
            return Err(Error::TooLarge {
                got: v,
                max: MAX_PARAMETER,
            });
        }
    }
    TorusKnot::new(p, q)
}

fn check_range_bound(max: i64) -> Result<()> {
    if max < 2 {
        return Err(Error::RangeTooSmall(max));
    }
    if max > MAX_PARAMETER {
        return Err(Error::TooLarge {
            got: max,
            max: MAX_PARAMETER,
        });
    }
    Ok(())
}

/// All coprime pairs `q < p <= max`, sorted lexicographically by `(p, q)`.
fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    let mut pairs = Vec::new();
    for p in 2..=max {
        for q in 1..p {
            if gcd(p, q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

/// Runs `job` on a pool of the requested size, or on the global pool.
fn with_pool<R: Send>(workers: Option<usize>, job: impl FnOnce() -> R + Send) -> Result<R> {
    match workers {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::WorkerPool(e.to_string()))?;
            Ok(pool.install(job))
        }
        None => Ok(job()),
    }
}

// ---------------------------------------------------------------- upsilon

#[derive(Serialize)]
struct UpsilonReport {
    p: i64,
    q: i64,
    upsilon_fk: QuarterRational,
    upsilon_batson: QuarterRational,
    agree: bool,
}

fn cmd_upsilon(p: i64, q: i64, config: &RunConfig) -> Result<(String, i32)> {
    let k = parse_knot(p, q)?;
    let by_recursion = upsilon_fk_fast(k);
    let by_bands = crate::batson::upsilon_batson(k);
    let report = UpsilonReport {
        p: k.p(),
        q: k.q(),
        upsilon_fk: by_recursion,
        upsilon_batson: by_bands,
        agree: by_recursion == by_bands,
    };
    let text = match config.format {
        Format::Human => format!(
            "{}: upsilon = {} (recursion), {} (band-move sum), agree: {}\n",
            k,
            report.upsilon_fk,
            report.upsilon_batson,
            if report.agree { "yes" } else { "NO" }
        ),
        Format::Json => json_pretty(&report),
        Format::Csv => {
            let mut s = String::from("p,q,upsilon_fk,upsilon_batson,agree\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{}",
                report.p,
                report.q,
                report.upsilon_fk.fraction_string(),
                report.upsilon_batson.fraction_string(),
                report.agree
            );
            s
        }
    };
    let code = if report.agree { EXIT_OK } else { EXIT_VERIFICATION };
    Ok((text, code))
}

// ------------------------------------------------------------------ sigma

#[derive(Serialize)]
struct SigmaReport {
    p: i64,
    q: i64,
    sigma: i64,
    /// Value of the two-strand Seifert-form oracle, when `q = 2`.
    two_strand_oracle: Option<i64>,
    /// Number of band moves whose step parity was checked.
    band_move_steps: usize,
    step_parity_ok: bool,
}

fn cmd_sigma(p: i64, q: i64, config: &RunConfig) -> Result<(String, i32)> {
    let k = parse_knot(p, q)?;
    let sigma = sigma_count_with_cap(k, config.sigma_cap)?;
    let two_strand_oracle = if k.q() == 2 {
        let value = sigma_two_strand(k.p())?;
        if value != sigma {
            return Err(crate::error::verification(
                k.p(),
                k.q(),
                "sigma count == two-strand oracle",
                value,
                sigma,
            ));
        }
        Some(value)
    } else {
        None
    };
    // building the sequence validates sigma(M_C) in {-1,+1} at every step
    let sequence = batson_sequence_with_cap(k, config.sigma_cap)?;
    let report = SigmaReport {
        p: k.p(),
        q: k.q(),
        sigma,
        two_strand_oracle,
        band_move_steps: sequence.steps.len(),
        step_parity_ok: true,
    };
    let text = match config.format {
        Format::Human => {
            let oracle = match report.two_strand_oracle {
                Some(v) => format!("{v} (agrees)"),
                None => "n/a".to_string(),
            };
            format!(
                "{}: sigma = {}\n  two-strand oracle: {}\n  band-move step parity: ok over {} steps\n",
                k, report.sigma, oracle, report.band_move_steps
            )
        }
        Format::Json => json_pretty(&report),
        Format::Csv => {
            let mut s = String::from("p,q,sigma,two_strand_oracle,band_move_steps,step_parity_ok\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{}",
                report.p,
                report.q,
                report.sigma,
                report
                    .two_strand_oracle
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
                report.band_move_steps,
                report.step_parity_ok
            );
            s
        }
    };
    Ok((text, EXIT_OK))
}

// ----------------------------------------------------------------- batson

fn cmd_batson(p: i64, q: i64, config: &RunConfig) -> Result<(String, i32)> {
    let k = parse_knot(p, q)?;
    let sequence = batson_sequence_with_cap(k, config.sigma_cap)?;
    let text = match config.format {
        Format::Human => render_sequence_human(&sequence),
        Format::Json => json_pretty(&sequence),
        Format::Csv => render_sequence_csv(&sequence),
    };
    Ok((text, EXIT_OK))
}

fn render_sequence_human(seq: &BatsonSequence) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "Band-move sequence for {}: {} step{}",
        seq.target,
        seq.steps.len(),
        if seq.steps.len() == 1 { "" } else { "s" }
    );
    if !seq.steps.is_empty() {
        let _ = writeln!(
            s,
            "{:>4} {:>6} {:>6} {:>6} {:>6} {:>10} {:>8} {:>8} {:>9} {:>9}",
            "step", "p", "q", "t", "h", "next", "w_half", "ups_d", "sigma_mc", "b2_minus"
        );
        for (i, step) in seq.steps.iter().enumerate() {
            let _ = writeln!(
                s,
                "{:>4} {:>6} {:>6} {:>6} {:>6} {:>10} {:>8} {:>8} {:>9} {:>9}",
                i + 1,
                step.p,
                step.q,
                step.t,
                step.h,
                step.next.to_string(),
                step.half_writhe_delta,
                step.upsilon_delta.to_string(),
                step.sigma_mc,
                step.b2_minus_step
            );
        }
    }
    let _ = writeln!(
        s,
        "totals: upsilon = {}, b2_minus = {}",
        seq.upsilon_batson, seq.b2_minus_total
    );
    s
}

fn render_sequence_csv(seq: &BatsonSequence) -> String {
    let mut s = String::from(
        "step,p,q,t,h,next_p,next_q,half_writhe_delta,upsilon_delta,sigma_mc,b2_minus\n",
    );
    for (i, step) in seq.steps.iter().enumerate() {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            i + 1,
            step.p,
            step.q,
            step.t,
            step.h,
            step.next.p(),
            step.next.q(),
            step.half_writhe_delta,
            step.upsilon_delta.fraction_string(),
            step.sigma_mc,
            step.b2_minus_step
        );
    }
    let _ = writeln!(
        s,
        "total,{},{},,,,,,{},,{}",
        seq.target.p(),
        seq.target.q(),
        seq.upsilon_batson.fraction_string(),
        seq.b2_minus_total
    );
    s
}

// ----------------------------------------------------------------- verify

#[derive(Serialize)]
struct FailureRow {
    p: i64,
    q: i64,
    check: String,
    expected: String,
    actual: String,
}

#[derive(Serialize)]
struct VerificationReport {
    max: i64,
    pairs_checked: u64,
    failures: Vec<FailureRow>,
    sigma_cap: i64,
    braid_cap: i64,
}

fn cmd_verify(max: i64, config: &RunConfig) -> Result<(String, i32)> {
    check_range_bound(max)?;
    let pairs = coprime_pairs(max);
    let sigma_cap = config.sigma_cap;
    let started = Instant::now();
    let outcomes: Vec<Option<FailureRow>> = with_pool(config.workers, || {
        pairs
            .par_iter()
            .map(|&(p, q)| {
                let k = TorusKnot::new(p, q).expect("pairs are coprime");
                match verify_theorem_with_cap(k, sigma_cap) {
                    Ok(_) => Ok(None),
                    Err(Error::Verification {
                        p,
                        q,
                        check,
                        expected,
                        actual,
                    }) => Ok(Some(FailureRow {
                        p,
                        q,
                        check: check.to_string(),
                        expected,
                        actual,
                    })),
                    Err(other) => Err(other),
                }
            })
            .collect::<Result<Vec<_>>>()
    })??;
    let elapsed = started.elapsed();
    let report = VerificationReport {
        max,
        pairs_checked: outcomes.len() as u64,
        failures: outcomes.into_iter().flatten().collect(),
        sigma_cap,
        braid_cap: config.braid_cap,
    };
    let code = if report.failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    };
    let text = match config.format {
        Format::Human => {
            let mut s = format!(
                "checked {} coprime pairs with p <= {} (sigma cap {}) in {:.3}s: {} failure{}\n",
                report.pairs_checked,
                report.max,
                report.sigma_cap,
                elapsed.as_secs_f64(),
                report.failures.len(),
                if report.failures.len() == 1 { "" } else { "s" }
            );
            for f in &report.failures {
                let _ = writeln!(
                    s,
                    "  T({},{}) {}: expected {}, got {}",
                    f.p, f.q, f.check, f.expected, f.actual
                );
            }
            s
        }
        Format::Json => json_pretty(&report),
        Format::Csv => {
            let mut s = String::from("p,q,check,expected,actual\n");
            for f in &report.failures {
                let _ = writeln!(s, "{},{},{},{},{}", f.p, f.q, f.check, f.expected, f.actual);
            }
            s
        }
    };
    Ok((text, code))
}

// ---------------------------------------------------------------- pretzel

#[derive(Serialize)]
struct PretzelReport {
    p: i64,
    q: i64,
    f: QuarterRational,
}

fn cmd_pretzel(p: i64, q: i64, config: &RunConfig) -> Result<(String, i32)> {
    for v in [p, q] {
        if v.unsigned_abs() > MAX_PARAMETER as u64 {
            return Err(Error::TooLarge {
                got: v,
                max: MAX_PARAMETER,
            });
        }
    }
    let value = pretzel_f(p, q)?;
    let report = PretzelReport { p, q, f: value };
    let text = match config.format {
        Format::Human => format!("f(P(-2,{p},{q})) = {value}\n"),
        Format::Json => json_pretty(&report),
        Format::Csv => format!("p,q,f\n{},{},{}\n", p, q, value.fraction_string()),
    };
    Ok((text, EXIT_OK))
}

// ------------------------------------------------------------------ table

fn cmd_table(max: i64, config: &RunConfig) -> Result<(String, i32)> {
    check_range_bound(max)?;
    let pairs = coprime_pairs(max);
    let sigma_cap = config.sigma_cap;
    let records: Vec<InvariantRecord> = with_pool(config.workers, || {
        pairs
            .par_iter()
            .map(|&(p, q)| {
                let k = TorusKnot::new(p, q).expect("pairs are coprime");
                verify_theorem_with_cap(k, sigma_cap)
            })
            .collect::<Result<Vec<_>>>()
    })??;
    let text = match config.format {
        Format::Human => {
            let mut s = format!(
                "{:>6} {:>6} {:>9} {:>7} {:>9} {:>12}\n",
                "p", "q", "upsilon", "sigma", "b2_minus", "ups-sigma/2"
            );
            for (pair, r) in pairs.iter().zip(&records) {
                let _ = writeln!(
                    s,
                    "{:>6} {:>6} {:>9} {:>7} {:>9} {:>12}",
                    pair.0,
                    pair.1,
                    r.upsilon.to_string(),
                    r.sigma,
                    r.b2_minus,
                    r.upsilon_minus_half_sigma.to_string()
                );
            }
            s
        }
        Format::Json => json_pretty(&records),
        Format::Csv => {
            let mut s =
                String::from("p,q,upsilon,sigma,b2_minus,upsilon_minus_half_sigma\n");
            for (pair, r) in pairs.iter().zip(&records) {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    pair.0,
                    pair.1,
                    r.upsilon.fraction_string(),
                    r.sigma,
                    r.b2_minus,
                    r.upsilon_minus_half_sigma.fraction_string()
                );
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
