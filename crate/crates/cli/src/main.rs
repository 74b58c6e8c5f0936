use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mindex_cli::golden::{check_equivalence, run_golden, Equivalence, Status};
use mindex_cli::report::Outcome;
use mindex_cli::sweep::{run_sweep, InstanceResult, SweepConfig};
use mindex_cli::verify::run_verify;
use mindex_cli::{CliError, Exit, RunConfig};
use mindex_core::darboux::calibrate;
use mindex_core::families::AnchorCase;

#[derive(Parser)]
#[command(name = "mindex", version, about = "Recurrence relations of multi-indexed orthogonal polynomials")]
struct Cli {
    /// Run the redundant cross-checks even in release builds.
    #[arg(long, global = true)]
    checked: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Params {
    /// L, J, W or AW.
    #[arg(long)]
    family: String,
    /// Seed tokens such as `1I,2II`.
    #[arg(long, default_value = "")]
    indices: String,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Four comma-separated values.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long)]
    t: Option<String>,
}

impl Params {
    fn config(&self, y: String, x: Option<String>, nmax: usize) -> RunConfig {
        RunConfig {
            family: self.family.clone(),
            indices: self.indices.clone(),
            g: self.g.clone(),
            h: self.h.clone(),
            a: self.a.clone(),
            t: self.t.clone(),
            y,
            x,
            nmax,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build X and solve for the recurrence coefficients of one instance.
    Verify {
        #[command(flatten)]
        params: Params,
        /// `min` for Y = 1, or coefficients `c0,c1,...` of Y.
        #[arg(long, default_value = "min", allow_hyphen_values = true)]
        y: String,
        /// Explicit X coefficients instead of one built from Y.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the coefficient table as CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compare against the tabulated closed forms or equivalences.
    Appendixb {
        /// Case id such as `L.Ex2`.
        #[arg(long, conflicts_with = "equiv", required_unless_present = "equiv")]
        case: Option<String>,
        /// Check both index-set equivalences of this family at the given parameters.
        #[arg(long)]
        equiv: bool,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the calibrated conventions for an index set.
    Calibrate {
        #[command(flatten)]
        params: Params,
    },
    /// Run a batch of instances from a TOML file.
    Sweep {
        config: PathBuf,
        /// Output directory for per-instance reports.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Stdout that tolerates a closed pipe.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn write_json<T: serde::Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => fs::write(p, json)?,
        None => emit(&json)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Exit, CliError> {
    if cli.checked {
        mindex_core::set_checked(true);
    }
    match cli.cmd {
        Cmd::Verify { params, y, x, nmax, out, csv } => {
            let cfg = params.config(y, x, nmax);
            let report = run_verify(&cfg)?;
            match &out {
                Some(p) => fs::write(p, report.to_json()?)?,
                None => emit(&report.to_json()?)?,
            }
            if let Some(p) = csv {
                report.write_csv(fs::File::create(p)?)?;
            }
            for f in &report.failures {
                eprintln!("FAIL: {f}");
            }
            Ok(match report.outcome {
                Outcome::Pass => Exit::Pass,
                Outcome::Fail => Exit::Inconsistent,
            })
        }
        Cmd::Appendixb { case, equiv, params, nmax, out } => {
            let spec = params.config("min".into(), None, nmax).spec()?;
            if equiv {
                let mut reports = Vec::new();
                for which in Equivalence::ALL {
                    reports.push(check_equivalence(&spec, which, nmax)?);
                }
                write_json(&out, &reports)?;
                let ok = reports.iter().all(|r| r.constant.is_some());
                return Ok(if ok { Exit::Pass } else { Exit::Inconsistent });
            }
            let case: AnchorCase = case.expect("clap enforces").parse()?;
            let report = run_golden(case, &spec, nmax)?;
            write_json(&out, &report)?;
            eprintln!(
                "{case}: {} match, {} mismatch, {} undefined, {} unavailable",
                report.count(Status::Match),
                report.count(Status::Mismatch),
                report.count(Status::Undefined),
                report.count(Status::ExternalDataUnavailable)
            );
            Ok(if report.passed() { Exit::Pass } else { Exit::Inconsistent })
        }
        Cmd::Calibrate { params } => {
            let cfg = params.config("min".into(), None, 0);
            let cal = calibrate(&cfg.spec()?, &cfg.index_set()?)?;
            write_json(&None, &mindex_cli::report::CalibrationSummary::from(&cal))?;
            Ok(Exit::Pass)
        }
        Cmd::Sweep { config, out } => {
            let sweep = SweepConfig::from_toml(&fs::read_to_string(&config)?)?;
            let instances = sweep.instances()?;
            let entries = run_sweep(&instances, out.as_deref())?;
            let mut failed = 0;
            for e in &entries {
                let status = match &e.result {
                    InstanceResult::Report(r) if r.outcome == Outcome::Pass => "pass".to_string(),
                    InstanceResult::Report(r) => format!("FAIL {}", r.failures.join("; ")),
                    InstanceResult::Error(msg) => format!("ERROR {msg}"),
                };
                if !e.passed() {
                    failed += 1;
                }
                emit(&format!("{} {} {{{}}} y={} {status}", e.hash, e.config.family, e.config.indices, e.config.y))?;
            }
            eprintln!("{} instances, {failed} not passing", entries.len());
            Ok(if failed == 0 { Exit::Pass } else { Exit::Inconsistent })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::Error as u8)
        }
    }
}
