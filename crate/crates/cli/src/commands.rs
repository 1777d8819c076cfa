use std::fmt::Write as _;

use lenslab::{
    closed_form_order, full_verify, numeric_order_with, LensParam64, OrderKind, OrderResult64,
};
use serde::{Deserialize, Serialize};

use crate::config::{CliConfig, OutputFormat};
use crate::{CliError, CommandOutput, Status};

/// Which order estimate(s) `order` reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Numeric,
    Both,
}

/// What `order` prints. Fields a method does not compute are `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderReport {
    pub alpha: f64,
    pub kind: OrderKind,
    pub method: Method,
    pub closed_form: Option<f64>,
    pub numeric: Option<f64>,
    pub residual: Option<f64>,
    pub minimizer_t: Option<f64>,
    pub minimizer_x: Option<f64>,
    pub endpoint_limit: bool,
    pub tol: f64,
    pub pass: bool,
}

pub const CSV_HEADER: &str = "alpha,closed_form,numeric,residual,minimizer_t";

/// Twelve significant digits in scientific notation.
pub fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Twelve significant digits, positional where that stays short.
fn fmt_text(x: f64) -> String {
    let rounded: f64 = fmt_sig12(x).parse().unwrap_or(x);
    if rounded == 0.0 || (1e-4..1e7).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn csv_field(x: Option<f64>) -> String {
    x.map(fmt_sig12).unwrap_or_default()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(CliError::Serialize)?;
    s.push('\n');
    Ok(s)
}

fn reject_format(cmd: &str, format: OutputFormat) -> CliError {
    CliError::Usage(format!("`{cmd}` cannot write {format} output"))
}

pub fn order_report(
    alpha: f64,
    kind: OrderKind,
    method: Method,
    cfg: &CliConfig,
) -> Result<OrderReport, CliError> {
    LensParam64::new(alpha)?.require(kind)?;
    if method == Method::Closed {
        return Ok(OrderReport {
            alpha,
            kind,
            method,
            closed_form: Some(closed_form_order(alpha, kind)?),
            numeric: None,
            residual: None,
            minimizer_t: None,
            minimizer_x: None,
            endpoint_limit: false,
            tol: cfg.tol,
            pass: true,
        });
    }
    let r = numeric_order_with(alpha, kind, cfg.tol, &cfg.numeric_options())?;
    Ok(OrderReport {
        alpha,
        kind,
        method,
        closed_form: (method == Method::Both).then_some(r.closed_form),
        numeric: Some(r.numeric),
        residual: Some(r.residual),
        minimizer_t: (!r.endpoint_limit).then_some(r.minimizer_t),
        minimizer_x: r.minimizer_x,
        endpoint_limit: r.endpoint_limit,
        tol: r.tol,
        pass: r.pass,
    })
}

fn order_text(r: &OrderReport) -> String {
    let mut rows: Vec<(&str, String)> = vec![
        ("alpha", fmt_text(r.alpha)),
        ("kind", r.kind.name().to_string()),
    ];
    let opt = |x: Option<f64>| x.map(fmt_text);
    for (key, value) in [
        ("closed_form", opt(r.closed_form)),
        ("numeric", opt(r.numeric)),
        ("residual", opt(r.residual)),
        ("minimizer_t", opt(r.minimizer_t)),
        ("minimizer_x", opt(r.minimizer_x)),
    ] {
        if let Some(v) = value {
            rows.push((key, v));
        }
    }
    if r.endpoint_limit {
        rows.push(("infimum", "limit at z -> 1".to_string()));
    }
    rows.push(("tol", fmt_text(r.tol)));
    rows.push(("status", if r.pass { "pass" } else { "FAIL" }.to_string()));

    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

/// `lenslab order`: exit 0 on pass, 2 when the residual exceeds `tol`.
pub fn cmd_order(
    alpha: f64,
    kind: OrderKind,
    method: Method,
    cfg: &CliConfig,
    format: Option<OutputFormat>,
) -> Result<CommandOutput, CliError> {
    let report = order_report(alpha, kind, method, cfg)?;
    let body = match format.or(cfg.output_format).unwrap_or(OutputFormat::Text) {
        OutputFormat::Text => order_text(&report),
        OutputFormat::Json => to_json(&report)?,
        OutputFormat::Csv => format!(
            "{CSV_HEADER}\n{},{},{},{},{}\n",
            fmt_sig12(report.alpha),
            csv_field(report.closed_form),
            csv_field(report.numeric),
            csv_field(report.residual),
            csv_field(report.minimizer_t),
        ),
        f @ OutputFormat::Svg => return Err(reject_format("order", f)),
    };
    Ok(CommandOutput::new(body, Status::from_pass(report.pass)))
}

/// `steps` values from `lo` to `hi` inclusive, endpoints exact.
pub fn alpha_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let n = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let i = i as f64;
            ((n - i) * lo + i * hi) / n
        })
        .collect()
}

pub fn scan_rows(
    alpha_min: f64,
    alpha_max: f64,
    steps: usize,
    kind: OrderKind,
    cfg: &CliConfig,
) -> Result<Vec<OrderResult64>, CliError> {
    if steps < 2 {
        return Err(CliError::Range(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    if !(alpha_min > 0.0 && alpha_min < alpha_max) {
        return Err(CliError::Range(format!(
            "need 0 < alpha-min < alpha-max, got {alpha_min}..{alpha_max}"
        )));
    }
    kind.check(alpha_max)?;
    alpha_grid(alpha_min, alpha_max, steps)
        .into_iter()
        .map(|a| {
            Ok(numeric_order_with(
                a,
                kind,
                cfg.tol,
                &cfg.numeric_options(),
            )?)
        })
        .collect()
}

pub fn scan_csv(rows: &[OrderResult64]) -> String {
    let mut out = String::with_capacity(80 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_sig12(r.alpha),
            fmt_sig12(r.closed_form),
            fmt_sig12(r.numeric),
            fmt_sig12(r.residual),
            fmt_sig12(r.minimizer_t),
        );
    }
    out
}

/// `lenslab scan`: one row per α in ascending order; exit 2 if any row
/// misses `tol`.
pub fn cmd_scan(
    alpha_min: f64,
    alpha_max: f64,
    steps: usize,
    kind: OrderKind,
    cfg: &CliConfig,
    format: Option<OutputFormat>,
) -> Result<CommandOutput, CliError> {
    let format = match format.or(cfg.output_format) {
        None | Some(OutputFormat::Csv) => OutputFormat::Csv,
        Some(OutputFormat::Json) => OutputFormat::Json,
        Some(f) => return Err(reject_format("scan", f)),
    };
    let rows = scan_rows(alpha_min, alpha_max, steps, kind, cfg)?;
    let pass = rows.iter().all(|r| r.pass);
    let body = match format {
        OutputFormat::Json => to_json(&rows)?,
        _ => scan_csv(&rows),
    };
    Ok(CommandOutput::new(body, Status::from_pass(pass)))
}

/// `lenslab verify`: the full check battery as JSON; exit 2 on any failure.
pub fn cmd_verify(
    alpha: f64,
    cfg: &CliConfig,
    format: Option<OutputFormat>,
) -> Result<CommandOutput, CliError> {
    if let Some(f) = format.filter(|f| *f != OutputFormat::Json) {
        return Err(reject_format("verify", f));
    }
    let p = LensParam64::new(alpha)?;
    let report = full_verify(&p, &cfg.verify_config());
    let mut body = report.to_json();
    body.push('\n');
    Ok(CommandOutput::new(body, Status::from_pass(report.overall)))
}
