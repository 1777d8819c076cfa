use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lenslab::OrderKind;
use lenslab_cli::{
    cmd_grid_image, cmd_order, cmd_scan, cmd_verify, emit, CliConfig, CliError, CommandOutput,
    GridSpec, Method, OutputFormat,
};

#[derive(Parser, Debug)]
#[command(
    name = "lenslab",
    version,
    about = "Orders of starlikeness and convexity of conformal lens maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order of starlikeness or convexity for one alpha
    Order {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = KindArg::Starlike)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate closed-form and numeric orders over an alpha range (CSV)
    Scan {
        #[arg(long)]
        alpha_min: f64,
        #[arg(long)]
        alpha_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Convex)]
        kind: KindArg,
        #[command(flatten)]
        common: Common,
    },
    /// Run every identity and order check for one alpha (JSON report)
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Render the image of a polar grid as SVG
    GridImage {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 12)]
        rays: usize,
        #[arg(long, default_value_t = 6)]
        circles: usize,
        /// Polyline points per circle or ray
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Residual tolerance (overrides the config file)
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value settings file
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> Result<CliConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => CliConfig::load(path)?,
            None => CliConfig::default(),
        };
        if let Some(tol) = self.tol {
            cfg.tol = tol;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum KindArg {
    Starlike,
    Convex,
}

impl From<KindArg> for OrderKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Starlike => OrderKind::Starlike,
            KindArg::Convex => OrderKind::Convex,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MethodArg {
    Closed,
    Numeric,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Numeric => Method::Numeric,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
    Svg,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Svg => OutputFormat::Svg,
        }
    }
}

fn run(cli: Cli) -> Result<CommandOutput, CliError> {
    let (output, common) = match &cli.command {
        Command::Order {
            alpha,
            kind,
            method,
            common,
        } => {
            let cfg = common.config()?;
            let format = common.format.map(Into::into);
            (
                cmd_order(*alpha, (*kind).into(), (*method).into(), &cfg, format)?,
                common,
            )
        }
        Command::Scan {
            alpha_min,
            alpha_max,
            steps,
            kind,
            common,
        } => {
            let cfg = common.config()?;
            let format = common.format.map(Into::into);
            (
                cmd_scan(*alpha_min, *alpha_max, *steps, (*kind).into(), &cfg, format)?,
                common,
            )
        }
        Command::Verify { alpha, common } => {
            let cfg = common.config()?;
            (
                cmd_verify(*alpha, &cfg, common.format.map(Into::into))?,
                common,
            )
        }
        Command::GridImage {
            alpha,
            rays,
            circles,
            samples,
            common,
        } => {
            common.config()?;
            if let Some(f) = common.format.filter(|f| !matches!(f, FormatArg::Svg)) {
                return Err(CliError::Usage(format!(
                    "`grid-image` cannot write {} output",
                    OutputFormat::from(f)
                )));
            }
            let spec = GridSpec {
                rays: *rays,
                circles: *circles,
                samples_per_curve: *samples,
            };
            (cmd_grid_image(*alpha, &spec)?, common)
        }
    };
    emit(&output.body, common.out.as_deref())?;
    Ok(output)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(output) => ExitCode::from(output.status.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
