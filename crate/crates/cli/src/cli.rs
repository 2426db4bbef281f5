//! Argument parsing and the subcommands of the `cyclemod` binary.
//!
//! Exit codes: 0 success, 2 malformed input, 3 invalid sequence (for
//! example a non-unit trailing coefficient), 4 verification failure,
//! 5 a derived level exceeded the level cap.

use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use cyclemod_core::period::{
    derived_chain_capped, detected_sum_period, minimal_period, predict_sum_period, PeriodReport,
    DEFAULT_LEVEL_CAP,
};
use cyclemod_core::sequence::SequenceSpec;
use cyclemod_core::Modulus;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::DEFAULT_SEED;
use crate::render::render_period;
use crate::spec_json::{self, SpecError};
use crate::tables;
use crate::verify::{self, Suite, SuiteReport, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;
pub const EXIT_LEVEL_CAP: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "cyclemod", version, about = "Periods of periodic sequences modulo m and of their partial sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal period of a sequence.
    Period {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Predicted period of the partial-sum sequence.
    SumPeriod {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also measure the period by brute force and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Periods of the derived sequences S^0 .. S^depth.
    Chain {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Maximum number of terms materialized for one derived level.
        #[arg(long, env = "CYCLEMOD_LEVEL_CAP", default_value_t = DEFAULT_LEVEL_CAP)]
        level_cap: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Pisano periods for a range of moduli.
    Pisano {
        /// Inclusive range `LO,HI`.
        #[arg(long, value_name = "LO,HI")]
        range: String,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run verification sweeps; exits 4 on the first failing suite.
    Verify {
        /// sum-period, zero-tail, closed-form, pascal, period-sum,
        /// freyd-brown, chain or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random specs for the corpus-driven suites.
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        max_m: Option<u64>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["fib", "block", "spec"])))]
pub struct SpecArgs {
    /// General Fibonacci sequence with F_0 = A, F_1 = B.
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    pub fib: Option<String>,
    /// A block of residues repeated forever.
    #[arg(long, value_name = "X,Y,...", allow_hyphen_values = true)]
    pub block: Option<String>,
    /// Inline JSON spec or path to a JSON file.
    #[arg(long, value_name = "JSON|PATH")]
    pub spec: Option<String>,
    /// Modulus (required with --fib and --block).
    #[arg(long = "m", value_name = "M")]
    pub m: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Core(#[from] cyclemod_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_MALFORMED,
            CliError::Spec(e) if e.is_invariant_violation() => EXIT_INVALID,
            CliError::Spec(_) => EXIT_MALFORMED,
            CliError::Core(cyclemod_core::Error::LevelCapExceeded { .. }) => EXIT_LEVEL_CAP,
            CliError::Core(_) => EXIT_INVALID,
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

fn parse_list(text: &str, flag: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("--{flag}: `{t}` is not an integer")))
        })
        .collect()
}

impl SpecArgs {
    pub fn resolve(&self) -> Result<SequenceSpec, CliError> {
        if let Some(source) = &self.spec {
            if self.m.is_some() {
                return Err(CliError::Usage("--m cannot be combined with --spec".into()));
            }
            return Ok(spec_json::load_spec(source)?);
        }
        let m = self
            .m
            .ok_or_else(|| CliError::Usage("--m is required with --fib and --block".into()))?;
        let m = Modulus::new(m)?;
        if let Some(fib) = &self.fib {
            match parse_list(fib, "fib")?[..] {
                [a, b] => Ok(SequenceSpec::general_fibonacci(a, b, m)),
                _ => Err(CliError::Usage("--fib expects exactly two integers A,B".into())),
            }
        } else {
            let block = self.block.as_deref().unwrap_or_default();
            Ok(SequenceSpec::block(&parse_list(block, "block")?, m)?)
        }
    }
}

#[derive(Serialize)]
struct PeriodOutput {
    modulus: Modulus,
    period: u64,
}

#[derive(Serialize)]
struct SumPeriodOutput {
    #[serde(flatten)]
    report: PeriodReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    detected_sum_period: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
}

/// Runs the parsed command, writing results to `out`. Returns the exit
/// code for outcomes that are not errors (0, or 4 on a failed check).
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Period { spec, format } => cmd_period(&spec.resolve()?, *format, out),
        Command::SumPeriod { spec, verify, format } => {
            cmd_sum_period(&spec.resolve()?, *verify, *format, out)
        }
        Command::Chain {
            spec,
            depth,
            level_cap,
            format,
        } => cmd_chain(&spec.resolve()?, *depth, *level_cap, *format, out),
        Command::Pisano { range, jobs, format } => cmd_pisano(range, *jobs, *format, out),
        Command::Verify {
            suite,
            cases,
            seed,
            max_m,
            jobs,
            format,
        } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(|e| CliError::Usage(e.to_string()))?]
            };
            let opts = VerifyOptions {
                cases: *cases,
                seed: *seed,
                max_m: *max_m,
            };
            cmd_verify(&suites, &opts, *jobs, *format, out)
        }
    }
}

pub fn cmd_period(spec: &SequenceSpec, format: OutputFormat, out: &mut dyn Write) -> Result<i32, CliError> {
    let period = minimal_period(spec)?;
    match format {
        OutputFormat::Text => {
            writeln!(out, "{period}")?;
            writeln!(out, "{}", render_period(spec, period))?;
        }
        OutputFormat::Json => {
            let json = serde_json::to_string(&PeriodOutput {
                modulus: spec.modulus(),
                period,
            })
            .expect("serializable");
            writeln!(out, "{json}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "modulus,period")?;
            writeln!(out, "{},{period}", spec.modulus())?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_sum_period(
    spec: &SequenceSpec,
    verify: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let report = predict_sum_period(spec)?;
    let detected = if verify {
        Some(detected_sum_period(spec)?)
    } else {
        None
    };
    let verdict = detected.map(|d| {
        if d == report.predicted_sum_period {
            "MATCH"
        } else {
            "MISMATCH"
        }
    });
    match format {
        OutputFormat::Text => {
            writeln!(out, "period: {}", report.period)?;
            writeln!(out, "tail_sum: {}", report.tail_sum)?;
            writeln!(out, "order_multiplier: {}", report.order_multiplier)?;
            writeln!(out, "predicted_sum_period: {}", report.predicted_sum_period)?;
            if let (Some(d), Some(v)) = (detected, verdict) {
                writeln!(out, "detected_sum_period: {d}")?;
                writeln!(out, "verdict: {v}")?;
            }
        }
        OutputFormat::Json => {
            let json = serde_json::to_string(&SumPeriodOutput {
                report,
                detected_sum_period: detected,
                verdict,
            })
            .expect("serializable");
            writeln!(out, "{json}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["period", "tail_sum", "order_multiplier", "predicted_sum_period", "modulus"];
            let mut row = vec![
                report.period.to_string(),
                report.tail_sum.to_string(),
                report.order_multiplier.to_string(),
                report.predicted_sum_period.to_string(),
                report.modulus.to_string(),
            ];
            if let (Some(d), Some(v)) = (detected, verdict) {
                header.extend(["detected_sum_period", "verdict"]);
                row.extend([d.to_string(), v.to_owned()]);
            }
            w.write_record(header)?;
            w.write_record(row)?;
            w.flush()?;
        }
    }
    Ok(if verdict == Some("MISMATCH") {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    })
}

pub fn cmd_chain(
    spec: &SequenceSpec,
    depth: usize,
    level_cap: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (chain, levels) = derived_chain_capped(spec, depth, level_cap)?;
    match format {
        OutputFormat::Text => {
            writeln!(out, "level\tperiod\ttail_sum\tmultiplier\tblock")?;
            for (l, level) in chain.levels.iter().zip(&levels) {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    l.level,
                    l.period,
                    l.tail_sum,
                    l.multiplier,
                    render_period(&level.spec, l.period)
                )?;
            }
        }
        OutputFormat::Json => {
            writeln!(out, "{}", serde_json::to_string(&chain).expect("serializable"))?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["level", "period", "tail_sum", "multiplier"])?;
            for l in &chain.levels {
                w.write_record([
                    l.level.to_string(),
                    l.period.to_string(),
                    l.tail_sum.to_string(),
                    l.multiplier.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_range(range: &str) -> Result<(Modulus, Modulus), CliError> {
    let bad = || CliError::Usage(format!("--range expects LO,HI with 2 <= LO <= HI, got `{range}`"));
    let (lo, hi) = range.split_once(',').ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((Modulus::new(lo)?, Modulus::new(hi)?))
}

pub fn cmd_pisano(range: &str, jobs: usize, format: OutputFormat, out: &mut dyn Write) -> Result<i32, CliError> {
    let (lo, hi) = parse_range(range)?;
    let table = crate::worker_pool(jobs).install(|| tables::pisano_table(lo, hi));
    match format {
        OutputFormat::Text => {
            writeln!(out, "m\tpi\tpi=6m")?;
            for r in &table {
                writeln!(out, "{}\t{}\t{}", r.m, r.pi, r.ratio_times_6m)?;
            }
        }
        OutputFormat::Json => writeln!(out, "{}", tables::to_json(&table))?,
        OutputFormat::Csv => tables::write_csv(&table, &mut *out)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    suites: &[Suite],
    opts: &VerifyOptions,
    jobs: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let pool = crate::worker_pool(jobs);
    let reports: Vec<SuiteReport> = pool.install(|| suites.iter().map(|&s| verify::run(s, opts)).collect());
    match format {
        OutputFormat::Text => {
            for r in &reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} ({} cases): {}", r.suite, r.cases, r.summary)?;
                if let Some(c) = &r.counterexample {
                    writeln!(out, "  counterexample: {c}")?;
                }
            }
        }
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&reports).expect("serializable"))?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "cases", "passed", "summary", "counterexample"])?;
            for r in &reports {
                w.write_record([
                    r.suite.clone(),
                    r.cases.to_string(),
                    r.passed.to_string(),
                    r.summary.clone(),
                    r.counterexample.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
