//! The `pushpa` command line.
//!
//! Exit codes: 0 success (or a converged estimate), 1 parse, validation or
//! I/O error, 2 not pseudo-Anosov, 3 iteration budget exhausted, 4 a `verify`
//! check failed.

pub mod commands;
pub mod config;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use config::{OutputFormat, PartialConfig, RunConfig, SeedCurve, CONFIG_ENV};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pushpa_core::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Error = 1,
    NonPseudoAnosov = 2,
    BudgetExceeded = 3,
    CheckFailed = 4,
}

impl From<pushpa_core::GrowthStatus> for Exit {
    fn from(s: pushpa_core::GrowthStatus) -> Exit {
        match s {
            pushpa_core::GrowthStatus::Converged => Exit::Success,
            pushpa_core::GrowthStatus::NonPseudoAnosov => Exit::NonPseudoAnosov,
            pushpa_core::GrowthStatus::BudgetExceeded => Exit::BudgetExceeded,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pushpa",
    version,
    about = "Point-pushing pseudo-Anosov braids: dilatations, bounds and strand counts"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Iteration budget for dilatation estimates
    #[arg(long, global = true)]
    pub max_iter: Option<usize>,
    /// Convergence tolerance on successive growth ratios
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Iterations before convergence may be declared
    #[arg(long, global = true)]
    pub burn_in: Option<usize>,
    /// Seed curve punctures, written i,j
    #[arg(long, global = true, value_name = "I,J")]
    pub seed_curve: Option<SeedCurve>,
    #[arg(long = "format", global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// key = value config file
    #[arg(long, global = true, env = CONFIG_ENV)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the dilatation of a braid such as "B3: s2 s1'"
    Dilatation {
        braid: String,
        /// Include every growth ratio in the report
        #[arg(long)]
        trace: bool,
    },
    /// Push a puncture along a loop such as "L4: g1 g2'"
    Push {
        #[arg(value_name = "LOOP", required_unless_present = "chain", conflicts_with = "chain")]
        loop_text: Option<String>,
        /// Push along the figure-eight chain for n (sphere with n - 1 punctures)
        #[arg(long, alias = "fig7", value_name = "N")]
        chain: Option<usize>,
    },
    /// Closed-form bounds for one surface or a sweep of spheres
    Bounds {
        /// Genus
        #[arg(long, default_value_t = 0)]
        p: u32,
        /// Number of punctures
        #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
        n: Option<u32>,
        /// Inclusive puncture range such as 4..16
        #[arg(long, value_parser = parse_range)]
        sweep: Option<RangeInclusive<u32>>,
    },
    /// Strand counts of the extremal figure-eight chain models
    Strands {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Crossings in the chain
        #[arg(long)]
        k: usize,
        /// Cycles to simulate
        #[arg(long)]
        m: usize,
        /// Report every crossing visit instead of per-cycle totals
        #[arg(long)]
        visits: bool,
    },
    /// Run the built-in consistency checks
    Verify {
        /// Run only the named checks
        #[arg(long)]
        only: Vec<String>,
        /// Seed for the randomized checks
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Lower,
    Upper,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a range like 4..16, got {s:?}"))?;
    let a: u32 = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

impl GlobalArgs {
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let flags = PartialConfig {
            max_iter: self.max_iter,
            tolerance: self.tolerance,
            burn_in: self.burn_in,
            seed_curve: self.seed_curve,
            output_format: self.format,
            output_path: self.output.clone(),
        };
        let file = match &self.config {
            Some(path) => PartialConfig::load_file(path)?,
            None => PartialConfig::default(),
        };
        RunConfig::resolve(flags.over(file))
    }
}

/// A finished report and the exit code it implies.
pub struct Report {
    pub body: String,
    pub exit: Exit,
}

pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Report, CliError> {
    match command {
        Command::Dilatation { braid, trace } => commands::dilatation(braid, *trace, cfg),
        Command::Push { loop_text, chain } => commands::push(loop_text.as_deref(), *chain, cfg),
        Command::Bounds { p, n, sweep } => commands::bounds(*p, *n, sweep.clone(), cfg),
        Command::Strands { model, k, m, visits } => commands::strands(*model, *k, *m, *visits, cfg),
        Command::Verify { only, seed } => commands::verify(only, *seed, cfg),
    }
}

/// Parses `args`, runs the command, writes its report and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Error as i32 } else { Exit::Success as i32 };
        }
    };
    let outcome = cli.global.resolve().and_then(|cfg| {
        let report = execute(&cli.command, &cfg)?;
        emit(&cfg, report)
    });
    match outcome {
        Ok(exit) => exit as i32,
        Err(e) => {
            eprintln!("error: {e}");
            Exit::Error as i32
        }
    }
}

fn emit(cfg: &RunConfig, report: Report) -> Result<Exit, CliError> {
    match &cfg.output_path {
        Some(path) => std::fs::write(path, report.body.as_bytes())?,
        None => std::io::stdout().lock().write_all(report.body.as_bytes())?,
    }
    Ok(report.exit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..16").unwrap(), 4..=16);
        assert_eq!(parse_range("4..=16").unwrap(), 4..=16);
        assert!(parse_range("16..4").is_err());
        assert!(parse_range("4-16").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn push_needs_exactly_one_source() {
        assert!(Cli::try_parse_from(["pushpa", "push"]).is_err());
        assert!(Cli::try_parse_from(["pushpa", "push", "L4: g1", "--chain", "5"]).is_err());
        assert!(Cli::try_parse_from(["pushpa", "push", "--fig7", "5"]).is_ok());
    }
}
