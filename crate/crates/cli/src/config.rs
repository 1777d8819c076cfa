use std::fmt;
use std::path::Path;
use std::str::FromStr;

use lenslab::{NumericOptions, VerifyConfig};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Output encodings understood by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    Svg,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            Self::Text => "text",
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Svg => "svg",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "svg" => Ok(Self::Svg),
            other => Err(CliError::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// Settings shared by all subcommands. Flags override these; a config file
/// is only read when its path is passed explicitly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliConfig {
    pub tol: f64,
    pub eps_t: f64,
    pub scan_points: usize,
    pub grid_radial: usize,
    pub grid_angular: usize,
    /// `None` lets each subcommand pick its natural format.
    pub output_format: Option<OutputFormat>,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            eps_t: 1e-9,
            scan_points: 2048,
            grid_radial: 64,
            grid_angular: 512,
            output_format: None,
        }
    }
}

const MIN_POINTS: usize = 8;

impl CliConfig {
    /// Defaults overlaid with `key = value` lines. Blank lines and lines
    /// starting with `#` are ignored; unknown keys are an error.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key=value", lineno + 1))
            })?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| CliError::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
            value
                .parse()
                .map_err(|_| format!("invalid value `{value}` for `{key}`"))
        }
        match key {
            "tol" => self.tol = num(key, value)?,
            "eps_t" => self.eps_t = num(key, value)?,
            "scan_points" => self.scan_points = num(key, value)?,
            "grid_radial" => self.grid_radial = num(key, value)?,
            "grid_angular" => self.grid_angular = num(key, value)?,
            "output_format" | "format" => {
                self.output_format = Some(value.parse().map_err(|e: CliError| e.to_string())?)
            }
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Config(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if !(self.eps_t > 0.0 && self.eps_t < 1e-2) {
            return Err(CliError::Config(format!(
                "eps_t must lie in (0, 1e-2), got {}",
                self.eps_t
            )));
        }
        for (name, n) in [
            ("scan_points", self.scan_points),
            ("grid_radial", self.grid_radial),
            ("grid_angular", self.grid_angular),
        ] {
            if n < MIN_POINTS {
                return Err(CliError::Config(format!(
                    "{name} must be at least {MIN_POINTS}, got {n}"
                )));
            }
        }
        Ok(())
    }

    pub fn numeric_options(&self) -> NumericOptions {
        NumericOptions {
            eps_t: self.eps_t,
            scan_points: self.scan_points,
            ..NumericOptions::default()
        }
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            tol: self.tol,
            eps_t: self.eps_t,
            scan_points: self.scan_points,
            grid_radial: self.grid_radial,
            grid_angular: self.grid_angular,
            ..VerifyConfig::default()
        }
    }
}
