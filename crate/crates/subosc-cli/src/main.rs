//! `subosc`: synthesize bandpass functions that track a slow target on a
//! window, inspect their exact spectra, and measure what was achieved.

mod emit;
mod jobs;
mod params;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use emit::{parse_format, OutFormat, Output};
use params::{parse_mode, parse_target, JobParams, SweepParams};

#[derive(Debug)]
pub enum CliError {
    Lib(subosc::Error),
    Io(std::io::Error),
    Config(String),
}

impl From<subosc::Error> for CliError {
    fn from(e: subosc::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Config(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    /// 2: the request cannot be satisfied (bad parameters, infeasible plan,
    /// capacity). 3: the computation broke down numerically. 4: I/O.
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Lib(subosc::Error::Domain(_)) => 2,
            CliError::Lib(subosc::Error::Plan(_)) => 2,
            CliError::Lib(subosc::Error::Capacity { .. }) => 2,
            CliError::Lib(subosc::Error::Numeric(_)) => 3,
            CliError::Lib(subosc::Error::NonFiniteCoefficient { .. }) => 3,
            CliError::Io(_) => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "subosc",
    version,
    about = "Bandpass function synthesis and verification",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve parameters into a synthesis plan and emit it as JSON.
    Plan(JobArgs),
    /// Assemble the function and emit waveform samples.
    Synth(JobArgs),
    /// Emit the exact spectrum on a frequency grid.
    Spectrum(JobArgs),
    /// Assemble, measure, and emit the verification report as JSON.
    Verify(JobArgs),
    /// Measure every cell of a parameter grid, one row per cell.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Named preset: flat-top or flat-top-real.
    #[arg(long)]
    preset: Option<String>,
    /// Target: the word "constant" or JSON like {"kind":"sinusoid","frequency":1.5}.
    #[arg(long)]
    target: Option<String>,
    /// Carrier frequency, rad per unit time.
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Envelope dilation; the occupied band is omega ± pi/delta.
    #[arg(long)]
    delta: Option<f64>,
    /// Fixed truncation order (skips the budgeted order search).
    #[arg(long)]
    order: Option<usize>,
    /// Working window endpoints.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    interval: Option<Vec<f64>>,
    /// Total error budget; selects the order automatically.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Band edges; determines omega and delta (instead of --omega).
    #[arg(long, num_args = 2, value_names = ["W1", "W2"], allow_negative_numbers = true)]
    band: Option<Vec<f64>>,
    /// one-sided, two-sided-half, or two-sided-conjugate.
    #[arg(long)]
    mode: Option<String>,
    /// Assemble even when the plan is infeasible.
    #[arg(long)]
    force: bool,
    /// Samples per period (waveforms) or per spectral piece (spectra).
    #[arg(long)]
    grid_density: Option<f64>,
    /// Half-width of the sample window (synth) or measurement survey (verify).
    #[arg(long)]
    window: Option<f64>,
    /// JSON file with the same fields; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv, json, or svg.
    #[arg(long)]
    format: Option<String>,
}

impl JobArgs {
    fn params(&self) -> Result<JobParams, CliError> {
        let pair = |v: &Option<Vec<f64>>| v.as_ref().map(|v| (v[0], v[1]));
        let flags = JobParams {
            preset: self.preset.clone(),
            target: self.target.as_deref().map(parse_target).transpose()?,
            omega: self.omega,
            delta: self.delta,
            order: self.order,
            interval: pair(&self.interval),
            epsilon: self.epsilon,
            band: pair(&self.band),
            mode: self.mode.as_deref().map(parse_mode).transpose()?,
            force: self.force,
            grid_density: self.grid_density,
            window: self.window,
        };
        Ok(match &self.config {
            Some(path) => flags.over(params::load_config(path)?),
            None => flags,
        })
    }

    fn output(&self) -> Output {
        Output::new(self.out.clone())
    }

    fn format(&self, default: OutFormat) -> Result<OutFormat, CliError> {
        self.format.as_deref().map(parse_format).transpose().map(|f| f.unwrap_or(default))
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Named preset supplying the fixed axes.
    #[arg(long)]
    preset: Option<String>,
    /// Target: the word "constant" or a JSON record.
    #[arg(long)]
    target: Option<String>,
    /// Truncation orders, comma-separated.
    #[arg(long = "order", value_delimiter = ',')]
    orders: Vec<usize>,
    /// Dilations, comma-separated.
    #[arg(long = "delta", value_delimiter = ',')]
    deltas: Vec<f64>,
    /// Carrier frequencies, comma-separated.
    #[arg(long = "omega", value_delimiter = ',', allow_negative_numbers = true)]
    omegas: Vec<f64>,
    /// Window half-widths, comma-separated.
    #[arg(long = "half-width", value_delimiter = ',')]
    half_widths: Vec<f64>,
    /// Base window endpoints (half-widths rescale around its midpoint).
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    interval: Option<Vec<f64>>,
    /// one-sided, two-sided-half, or two-sided-conjugate.
    #[arg(long)]
    mode: Option<String>,
    /// Samples per period for the error measurement.
    #[arg(long)]
    grid_density: Option<f64>,
    /// Survey half-width for the dynamic-range measurement.
    #[arg(long)]
    window: Option<f64>,
    /// JSON file with the same fields; explicit flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
}

impl SweepArgs {
    fn params(&self) -> Result<SweepParams, CliError> {
        let flags = SweepParams {
            preset: self.preset.clone(),
            target: self.target.as_deref().map(parse_target).transpose()?,
            orders: self.orders.clone(),
            deltas: self.deltas.clone(),
            omegas: self.omegas.clone(),
            half_widths: self.half_widths.clone(),
            interval: self.interval.as_ref().map(|v| (v[0], v[1])),
            mode: self.mode.as_deref().map(parse_mode).transpose()?,
            grid_density: self.grid_density,
            window: self.window,
        };
        Ok(match &self.config {
            Some(path) => flags.over(params::load_sweep_config(path)?),
            None => flags,
        })
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Plan(args) => {
            let job = params::resolve(&args.params()?)?;
            jobs::run_plan(&job, &args.output(), args.format(OutFormat::Json)?)
        }
        Command::Synth(args) => {
            let job = params::resolve(&args.params()?)?;
            jobs::run_synth(&job, &args.output(), args.format(OutFormat::Csv)?)
        }
        Command::Spectrum(args) => {
            let job = params::resolve(&args.params()?)?;
            jobs::run_spectrum(&job, &args.output(), args.format(OutFormat::Csv)?)
        }
        Command::Verify(args) => {
            let job = params::resolve(&args.params()?)?;
            jobs::run_verify(&job, &args.output(), args.format(OutFormat::Json)?)
        }
        Command::Sweep(args) => {
            let sweep = params::resolve_sweep(&args.params()?)?;
            let format = args
                .format
                .as_deref()
                .map(parse_format)
                .transpose()?
                .unwrap_or(OutFormat::Csv);
            jobs::run_sweep(&sweep, &Output::new(args.out.clone()), format)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
