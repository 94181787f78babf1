//! Command-line front end. `run_cli` is what the `qlbn` binary calls; it
//! writes to the given streams and returns the process exit status.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classical::infer_classical;
use crate::error::{Error, Result};
use crate::network::{validate, BayesianNetwork, NetworkDocument};
use crate::quantum::{infer_quantum, ExplicitPhases, PhaseStrategy};
use crate::query::Query;
use crate::report::{
    comparison_report_with, format_probability, write_sweep_csv, ReportLayout,
};
use crate::sweep::{sweep, SweepConfig, SweepMode};
use crate::sync::SyncPairSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qlbn", about = "Classical and quantum-like inference on Bayesian networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a network document and list every violated invariant.
    Validate { file: PathBuf },
    /// Posterior of one target variable.
    Infer {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        target: String,
        /// `Name=state`, repeatable.
        #[arg(long, value_parser = parse_evidence)]
        evidence: Vec<(String, String)>,
        #[arg(long, value_enum, default_value_t = Mode::Classical)]
        mode: Mode,
        /// `zero`, `uniform:<radians>`, `sync` or `file:<path>`.
        #[arg(long, default_value = "sync")]
        phases: String,
    },
    /// Attainable posterior envelope under phase variation, as CSV.
    Sweep {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, value_parser = parse_evidence)]
        evidence: Vec<(String, String)>,
        /// Lattice step in radians, or `pi/N`.
        #[arg(long, value_parser = parse_angle, default_value = "pi/4")]
        step: f64,
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest per-outcome term count swept exhaustively.
        #[arg(long, default_value_t = 4)]
        max_exhaustive: usize,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classical/quantum comparison table over single-variable evidence.
    Report {
        #[arg(long)]
        network: PathBuf,
        #[arg(long, default_value = "sync")]
        phases: String,
        /// Comma-separated evidence rows; declaration order by default.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<String>>,
        /// Comma-separated query columns; declaration order by default.
        #[arg(long, value_delimiter = ',')]
        columns: Option<Vec<String>>,
        /// Omit the no-evidence row.
        #[arg(long)]
        no_prior: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Classical,
    Quantum,
}

fn parse_evidence(arg: &str) -> std::result::Result<(String, String), String> {
    match arg.split_once('=') {
        Some((name, state)) if !name.is_empty() && !state.is_empty() => {
            Ok((name.to_string(), state.to_string()))
        }
        _ => Err(format!("expected Name=state, got `{arg}`")),
    }
}

fn parse_angle(arg: &str) -> std::result::Result<f64, String> {
    let arg = arg.trim();
    if let Some(rest) = arg.strip_prefix("pi/") {
        let div: f64 = rest.parse().map_err(|e| format!("bad divisor `{rest}`: {e}"))?;
        return Ok(PI / div);
    }
    arg.parse().map_err(|e| format!("bad angle `{arg}`: {e}"))
}

struct Loaded {
    network: BayesianNetwork,
    pairs: SyncPairSet,
}

fn load(path: &Path) -> Result<Loaded> {
    let text = fs::read_to_string(path)?;
    let doc = NetworkDocument::from_json(&text)?;
    let network = BayesianNetwork::from_document(&doc)?;
    let pairs = SyncPairSet::from_names(&network, &doc.sync_pairs)?;
    Ok(Loaded { network, pairs })
}

fn strategy(spec: &str, pairs: &SyncPairSet) -> std::result::Result<PhaseStrategy, CliError> {
    match spec.split_once(':') {
        None if spec == "zero" => Ok(PhaseStrategy::ZeroInterference),
        None if spec == "sync" => Ok(PhaseStrategy::Synchronicity(pairs.clone())),
        Some(("uniform", angle)) => parse_angle(angle)
            .map(PhaseStrategy::Uniform)
            .map_err(CliError::Usage),
        Some(("file", path)) => {
            let text = fs::read_to_string(path).map_err(Error::from)?;
            Ok(PhaseStrategy::Explicit(ExplicitPhases::from_json(&text)?))
        }
        _ => Err(CliError::Usage(format!(
            "unknown phase strategy `{spec}`; expected zero, uniform:<θ>, sync or file:<path>"
        ))),
    }
}

fn query(network: &BayesianNetwork, target: &str, evidence: &[(String, String)]) -> Result<Query> {
    let pairs: Vec<(&str, &str)> = evidence
        .iter()
        .map(|(n, s)| (n.as_str(), s.as_str()))
        .collect();
    Query::new(network, target, &pairs)
}

enum CliError {
    Usage(String),
    Failed(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Failed(err)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Failed(err.into())
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
/// Exit status: 0 success, 1 invalid input or failed inference, 2 usage.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
        Err(CliError::Failed(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    match command {
        Command::Validate { file } => {
            let text = fs::read_to_string(&file)?;
            let doc = NetworkDocument::from_json(&text)?;
            let report = validate(&doc);
            if !report.is_empty() {
                write!(out, "{}: {} finding(s)\n{report}", file.display(), report.findings.len())?;
                return Ok(EXIT_INVALID);
            }
            let network = BayesianNetwork::from_document(&doc)?;
            let pairs = SyncPairSet::from_names(&network, &doc.sync_pairs)?;
            writeln!(
                out,
                "{}: ok ({} variables, {} sync pairs)",
                file.display(),
                network.len(),
                pairs.len()
            )?;
            Ok(EXIT_OK)
        }
        Command::Infer {
            network,
            target,
            evidence,
            mode,
            phases,
        } => {
            let loaded = load(&network)?;
            let q = query(&loaded.network, &target, &evidence)?;
            let (name, states, probabilities) = match mode {
                Mode::Classical => {
                    let d = infer_classical(&loaded.network, &q)?;
                    (d.target, d.states, d.probabilities)
                }
                Mode::Quantum => {
                    let s = strategy(&phases, &loaded.pairs)?;
                    let d = infer_quantum(&loaded.network, &q, &s)?;
                    (d.target, d.states, d.probabilities)
                }
            };
            // Occurring state first for binary variables: `Burglar t 0.1333 f 0.8667`.
            let mut line = name;
            for (state, p) in states.iter().zip(&probabilities).rev() {
                line.push_str(&format!(" {state} {}", format_probability(*p)));
            }
            writeln!(out, "{line}")?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            network,
            target,
            evidence,
            step,
            samples,
            seed,
            max_exhaustive,
            out: csv_path,
        } => {
            let loaded = load(&network)?;
            let q = query(&loaded.network, &target, &evidence)?;
            let config = SweepConfig {
                step,
                max_exhaustive_terms: max_exhaustive,
                samples,
                seed,
            };
            let envelope = sweep(&loaded.network, &q, &config, &loaded.pairs)?;
            match csv_path {
                Some(path) => {
                    write_sweep_csv(&envelope, fs::File::create(&path)?)?;
                    let mode = match envelope.mode {
                        SweepMode::Exhaustive => "exhaustive",
                        SweepMode::Sampled => "sampled",
                    };
                    writeln!(
                        out,
                        "{} ({mode}, {} probes)",
                        envelope.target,
                        envelope.probes.len()
                    )?;
                    for r in &envelope.ranges {
                        writeln!(out, "  {} [{}, {}]", r.state, r.min, r.max)?;
                    }
                }
                None => write_sweep_csv(&envelope, &mut *out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Report {
            network,
            phases,
            rows,
            columns,
            no_prior,
            out: csv_path,
        } => {
            let loaded = load(&network)?;
            let s = strategy(&phases, &loaded.pairs)?;
            let mut layout = ReportLayout::declaration(&loaded.network);
            if let Some(rows) = rows {
                layout.evidence = rows;
            }
            if let Some(columns) = columns {
                layout.queries = columns;
            }
            layout.include_prior = !no_prior;
            let report = comparison_report_with(&loaded.network, &s, &layout)?;
            write!(out, "{}", report.render_table())?;
            if let Some(path) = csv_path {
                report.write_csv(fs::File::create(&path)?)?;
            }
            Ok(EXIT_OK)
        }
    }
}
