//! Run configuration: flags override the config file, which overrides defaults.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use pushpa_core::GrowthOptions;

use crate::CliError;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "PUSHPA_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <OutputFormat as ValueEnum>::from_str(s, true)
    }
}

/// A `(i, j)` puncture pair written `i,j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedCurve(pub usize, pub usize);

impl FromStr for SeedCurve {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (i, j) = s.split_once(',').ok_or_else(|| format!("expected i,j but got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad puncture index {t:?}: {e}"));
        Ok(SeedCurve(parse(i)?, parse(j)?))
    }
}

impl fmt::Display for SeedCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

/// Settings that may come from flags or a config file; `None` means unset.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PartialConfig {
    pub max_iter: Option<usize>,
    pub tolerance: Option<f64>,
    pub burn_in: Option<usize>,
    pub seed_curve: Option<SeedCurve>,
    pub output_format: Option<OutputFormat>,
    pub output_path: Option<PathBuf>,
}

impl PartialConfig {
    /// Fields set in `self` win over those in `lower`.
    pub fn over(self, lower: PartialConfig) -> PartialConfig {
        PartialConfig {
            max_iter: self.max_iter.or(lower.max_iter),
            tolerance: self.tolerance.or(lower.tolerance),
            burn_in: self.burn_in.or(lower.burn_in),
            seed_curve: self.seed_curve.or(lower.seed_curve),
            output_format: self.output_format.or(lower.output_format),
            output_path: self.output_path.or(lower.output_path),
        }
    }

    /// `key = value` lines; blank lines and `#` comments are skipped.
    pub fn parse_file_text(text: &str, origin: &Path) -> Result<PartialConfig, CliError> {
        let mut cfg = PartialConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Config(format!("{}:{}: {msg}", origin.display(), lineno + 1));
            let (key, value) =
                line.split_once('=').ok_or_else(|| bad(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            fn num<T: FromStr>(v: &str) -> Result<T, String>
            where
                T::Err: fmt::Display,
            {
                v.parse::<T>().map_err(|e| format!("bad value {v:?}: {e}"))
            }
            match key {
                "max_iter" => cfg.max_iter = Some(num(value).map_err(bad)?),
                "tolerance" => cfg.tolerance = Some(num(value).map_err(bad)?),
                "burn_in" => cfg.burn_in = Some(num(value).map_err(bad)?),
                "seed_curve" => cfg.seed_curve = Some(value.parse().map_err(bad)?),
                "output_format" | "format" => cfg.output_format = Some(value.parse().map_err(bad)?),
                "output_path" | "output" => cfg.output_path = Some(PathBuf::from(value)),
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn load_file(path: &Path) -> Result<PartialConfig, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        PartialConfig::parse_file_text(&text, path)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub max_iter: usize,
    pub tolerance: f64,
    pub burn_in: usize,
    pub seed_curve: SeedCurve,
    pub output_format: Option<OutputFormat>,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    /// Fills unset fields with defaults. An unset burn-in shrinks below a
    /// small iteration budget so that `max_iter > burn_in` keeps holding.
    pub fn resolve(p: PartialConfig) -> Result<RunConfig, CliError> {
        let defaults = GrowthOptions::default();
        let max_iter = p.max_iter.unwrap_or(defaults.max_iter);
        let burn_in = p.burn_in.unwrap_or_else(|| defaults.burn_in.min(max_iter.saturating_sub(1)));
        let cfg = RunConfig {
            max_iter,
            tolerance: p.tolerance.unwrap_or(defaults.tolerance),
            burn_in,
            seed_curve: p.seed_curve.unwrap_or(SeedCurve(1, 2)),
            output_format: p.output_format,
            output_path: p.output_path,
        };
        cfg.growth_options().validate()?;
        Ok(cfg)
    }

    pub fn growth_options(&self) -> GrowthOptions {
        GrowthOptions {
            max_iter: self.max_iter,
            tolerance: self.tolerance,
            burn_in: self.burn_in,
            seed_curve: Some((self.seed_curve.0, self.seed_curve.1)),
        }
    }

    pub fn format_or(&self, default: OutputFormat) -> OutputFormat {
        self.output_format.unwrap_or(default)
    }
}
