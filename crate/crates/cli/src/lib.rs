//! Library side of the `lenslab` command-line tool: configuration, the
//! subcommand bodies and the CSV/JSON/SVG emitters. `main.rs` only parses
//! flags and maps [`Status`] / [`CliError`] to exit codes.

pub mod commands;
pub mod config;
pub mod grid;

use std::io::Write;
use std::path::Path;

pub use commands::{cmd_order, cmd_scan, cmd_verify, Method, OrderReport, CSV_HEADER};
pub use config::{CliConfig, OutputFormat};
pub use grid::{grid_image, render_svg, Curve, GridImage, GridSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lens(#[from] lenslab::LensError),
    #[error("{0}")]
    Range(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot access `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("serializing output: {0}")]
    Serialize(#[source] serde_json::Error),
}

impl CliError {
    /// Every error is a domain or usage error.
    pub fn exit_code(&self) -> u8 {
        1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A residual exceeded its tolerance or a check failed.
    Fail,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Self::Pass => 0,
            Self::Fail => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub body: String,
    pub status: Status,
}

impl CommandOutput {
    pub fn new(body: String, status: Status) -> Self {
        Self { body, status }
    }
}

/// `lenslab grid-image`. The SVG is produced even for α outside the convex
/// regime; only the starlike regime `0 < |α| ≤ 2` is required.
pub fn cmd_grid_image(alpha: f64, spec: &GridSpec) -> Result<CommandOutput, CliError> {
    let img = grid_image(alpha, spec)?;
    Ok(CommandOutput::new(render_svg(&img), Status::Pass))
}

/// Writes `body` to `out`, or to stdout when no path is given.
pub fn emit(body: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
