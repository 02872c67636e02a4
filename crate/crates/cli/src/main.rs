//! `hardyops`: symbolic verdicts and numeric audits for pairs of inner
//! symbols stored as JSON files.
//!
//! Exit codes: 0 success, 1 a numeric check disagrees with its verdict,
//! 2 usage, parse, validation or resource-limit error, 3 every numeric
//! check landed in the inconclusive band.

mod reproduce;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hardyops_core::audit::{
    numeric_audit, random_audit, AuditConfig, SymbolicVerdicts, DEFAULT_FAIL_THRESHOLD,
    DEFAULT_MAX_BASIS, DEFAULT_PASS_THRESHOLD,
};
use hardyops_core::report::to_json_pretty;
use hardyops_core::InnerSymbol;
use serde::Serialize;

const EXIT_DISAGREEMENT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "hardyops", version, about = "Inner-symbol verdicts and truncated-operator audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every symbolic verdict for a pair of symbols.
    Check {
        phi1: PathBuf,
        phi2: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the verdicts against truncated-operator residuals.
    Audit {
        phi1: PathBuf,
        phi2: PathBuf,
        #[command(flatten)]
        numeric: NumericArgs,
        /// Recorded in the report; the audit itself is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the fixed example suite as CSV and JSON into a directory.
    Reproduce {
        #[arg(long, default_value = "hardyops-report")]
        out: PathBuf,
    },
    /// Audit seeded random pairs and summarize disagreements.
    RandomAudit {
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Numbers of variables to cycle through.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        dimensions: Vec<usize>,
        #[command(flatten)]
        numeric: NumericArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct NumericArgs {
    /// Per-variable degree cap D (default depends on n).
    #[arg(short = 'D', long)]
    degree: Option<usize>,
    /// Interior margin B (default ceil(D/4)).
    #[arg(short = 'B', long)]
    margin: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_PASS_THRESHOLD)]
    pass_threshold: f64,
    #[arg(long, default_value_t = DEFAULT_FAIL_THRESHOLD)]
    fail_threshold: f64,
    /// Largest allowed basis size (D+1)^n.
    #[arg(long, env = "HARDYOPS_MAX_BASIS", default_value_t = DEFAULT_MAX_BASIS)]
    max_basis: usize,
}

impl NumericArgs {
    fn config(&self, seed: Option<u64>) -> AuditConfig {
        AuditConfig {
            degree: self.degree,
            margin: self.margin,
            pass_threshold: self.pass_threshold,
            fail_threshold: self.fail_threshold,
            max_basis: self.max_basis,
            seed,
            ..AuditConfig::default()
        }
    }
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Serialize)]
struct CheckReport<'a> {
    phi1: &'a InnerSymbol,
    phi2: &'a InnerSymbol,
    #[serde(flatten)]
    verdicts: SymbolicVerdicts,
}

fn read_symbol(path: &Path) -> Result<InnerSymbol, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    InnerSymbol::from_json(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    match cli.command {
        Command::Check { phi1, phi2, out } => {
            let (a, b) = (read_symbol(&phi1)?, read_symbol(&phi2)?);
            let report = CheckReport {
                phi1: &a,
                phi2: &b,
                verdicts: SymbolicVerdicts::compute(&a, &b)?,
            };
            emit(&to_json_pretty(&report)?, out.as_deref())?;
            Ok(0)
        }
        Command::Audit {
            phi1,
            phi2,
            numeric,
            seed,
            out,
        } => {
            let (a, b) = (read_symbol(&phi1)?, read_symbol(&phi2)?);
            let report = numeric_audit(&a, &b, &numeric.config(seed))?;
            emit(&report.to_json()?, out.as_deref())?;
            let code = if report.disagreements() > 0 {
                EXIT_DISAGREEMENT
            } else if report.all_inconclusive() {
                EXIT_INCONCLUSIVE
            } else {
                0
            };
            eprintln!(
                "{} checks, {} disagreeing, {} inconclusive",
                report.numeric.len(),
                report.disagreements(),
                report.inconclusive()
            );
            Ok(code)
        }
        Command::Reproduce { out } => {
            let rows = reproduce::write_bundle(&out)?;
            let failing = rows.iter().filter(|r| !r.consistent).count();
            eprintln!("{} rows written to {}, {failing} inconsistent", rows.len(), out.display());
            Ok(if failing > 0 { EXIT_DISAGREEMENT } else { 0 })
        }
        Command::RandomAudit {
            trials,
            seed,
            dimensions,
            numeric,
            out,
        } => {
            if trials == 0 {
                return Err(UsageError("--trials must be at least 1".into()));
            }
            let summary = random_audit(trials, seed, &dimensions, &numeric.config(Some(seed)))?;
            emit(&summary.to_json()?, out.as_deref())?;
            eprintln!(
                "{} pairs, {} disagreements, {} inconclusive",
                summary.trials, summary.disagreements, summary.inconclusive_pairs
            );
            Ok(if summary.disagreements > 0 { EXIT_DISAGREEMENT } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
