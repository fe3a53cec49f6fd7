//! Command-line front end: `pathloss`, `sweep`, `losprob`, `o2i`, `fit` and
//! `map`. [`run`] is what the binary calls; it never panics on bad input and
//! returns the process exit code.

mod commands;
mod config;
#[cfg(test)]
mod end_to_end;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::fitting::DistanceKind;
use crate::model::{Family, ModelId, Org, Scenario, Visibility};
use crate::o2i::O2iVariant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mmwchan", version, about = "Millimeter-wave channel model calculator")]
pub struct Cli {
    /// Flat TOML file of flag values; flags given on the command line win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mean path loss and σ of one model at one geometry.
    #[command(allow_negative_numbers = true)]
    Pathloss(PathlossArgs),
    /// Path loss of several models over a distance grid, as CSV.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// LOS probability curves, or their MSE against a reference curve.
    #[command(allow_negative_numbers = true)]
    Losprob(LosprobArgs),
    /// Outdoor-to-indoor (or in-car) total loss.
    #[command(allow_negative_numbers = true)]
    O2i(O2iArgs),
    /// Fit a path loss family to measurements.
    #[command(allow_negative_numbers = true)]
    Fit(FitArgs),
    /// Spatially consistent LOS and shadowing map, as CSV.
    #[command(allow_negative_numbers = true)]
    Map(MapArgs),
}

#[derive(Args, Debug)]
pub struct ModelArgs {
    /// Full id, `org:scenario:visibility:family`.
    #[arg(long, conflicts_with_all = ["org", "vis", "family"])]
    pub model: Option<ModelId>,
    #[arg(long)]
    pub org: Option<Org>,
    #[arg(long)]
    pub scenario: Option<Scenario>,
    #[arg(long)]
    pub vis: Option<Visibility>,
    /// Defaults to the first registered family.
    #[arg(long)]
    pub family: Option<Family>,
}

#[derive(Args, Debug)]
pub struct HeightArgs {
    /// BS height in meters (default: the scenario's).
    #[arg(long)]
    pub hbs: Option<f64>,
    /// UE height in meters (default: the scenario's).
    #[arg(long)]
    pub hue: Option<f64>,
    /// Street width W in meters.
    #[arg(long)]
    pub street_width: Option<f64>,
    /// Average building height h in meters.
    #[arg(long)]
    pub building_height: Option<f64>,
}

#[derive(Args, Debug)]
pub struct PathlossArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Carrier frequency in GHz.
    #[arg(long)]
    pub fc: f64,
    /// Horizontal distance in meters.
    #[arg(long, conflicts_with = "d3d")]
    pub d2d: Option<f64>,
    /// 3D distance in meters.
    #[arg(long)]
    pub d3d: Option<f64>,
    #[command(flatten)]
    pub heights: HeightArgs,
    /// Treat applicability violations as errors.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    #[value(name = "2d")]
    TwoD,
    #[value(name = "3d")]
    ThreeD,
}

impl From<Axis> for DistanceKind {
    fn from(a: Axis) -> Self {
        match a {
            Axis::TwoD => DistanceKind::TwoD,
            Axis::ThreeD => DistanceKind::ThreeD,
        }
    }
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Model ids; repeat the flag or separate with commas.
    #[arg(long = "model", value_delimiter = ',')]
    pub models: Vec<ModelId>,
    #[arg(long)]
    pub fc: f64,
    /// Smallest distance in meters.
    #[arg(long, default_value_t = 10.0)]
    pub min: f64,
    /// Largest distance in meters.
    #[arg(long, default_value_t = 500.0)]
    pub max: f64,
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    pub spacing: Spacing,
    /// Whether the distance column is d2D or d3D.
    #[arg(long, value_enum, default_value_t = Axis::TwoD)]
    pub axis: Axis,
    #[command(flatten)]
    pub heights: HeightArgs,
    #[arg(long)]
    pub strict: bool,
    /// Output file (default: stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LosprobArgs {
    /// Scenario whose LOS probability models are all included when no
    /// `--model` is given.
    #[arg(long)]
    pub scenario: Option<Scenario>,
    #[arg(long = "model", value_delimiter = ',')]
    pub models: Vec<ModelId>,
    #[arg(long)]
    pub hue: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub min: f64,
    #[arg(long, default_value_t = 1000.0)]
    pub max: f64,
    #[arg(long, default_value_t = 1001)]
    pub count: usize,
    /// CSV of `d_m,p_los` pairs; prints each model's MSE against it.
    #[arg(long)]
    pub reference: Option<PathBuf>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct O2iArgs {
    #[arg(long)]
    pub variant: O2iVariant,
    #[arg(long)]
    pub fc: f64,
    /// Outdoor path loss in dB.
    #[arg(long)]
    pub plb: f64,
    /// Indoor penetration depth in meters.
    #[arg(long, default_value_t = 0.0)]
    pub din: f64,
    /// Override the indoor loss per meter.
    #[arg(long)]
    pub indoor_slope: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitFamily {
    Ci,
    Cif,
    Abg,
    DualCif,
    DualAbg,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    #[arg(long, value_enum)]
    pub family: FitFamily,
    /// Measurement CSV (`fc_ghz,d_m,pl_db[,d_kind]`) or, with
    /// `--sweep-column`, a sweep CSV.
    #[arg(long)]
    pub input: PathBuf,
    /// Read this model column of a sweep CSV instead of measurements.
    #[arg(long, requires = "fc")]
    pub sweep_column: Option<String>,
    /// Carrier of the sweep column, in GHz.
    #[arg(long)]
    pub fc: Option<f64>,
    /// Distance kind of the sweep CSV.
    #[arg(long, value_enum, default_value_t = Axis::TwoD)]
    pub axis: Axis,
    /// BS height used to convert 2D distances.
    #[arg(long, requires = "hue")]
    pub hbs: Option<f64>,
    /// UE height used to convert 2D distances.
    #[arg(long, requires = "hbs")]
    pub hue: Option<f64>,
    /// CIF anchor frequency (default: mean of the records).
    #[arg(long)]
    pub f0: Option<f64>,
    /// Breakpoint candidates for dual-slope fits (default: every distinct
    /// measured distance strictly inside the data range).
    #[arg(long, value_delimiter = ',')]
    pub candidates: Vec<f64>,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    #[arg(long)]
    pub scenario: Scenario,
    /// Cells per side.
    #[arg(long)]
    pub size: usize,
    /// Cell edge in meters.
    #[arg(long)]
    pub cell: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Organization whose LOS probability model is used.
    #[arg(long, default_value_t = Org::Tr38901)]
    pub org: Org,
    /// Correlation distance in meters (default: per scenario).
    #[arg(long)]
    pub dcor: Option<f64>,
    /// Shadow fading σ in dB (default: the scenario's LOS σ).
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long)]
    pub hue: Option<f64>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Why a command failed, and hence its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Model(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Model(Error::Parse { .. } | Error::Io(_) | Error::UnknownModel(_) | Error::WrongKind { .. }) => {
                EXIT_USAGE
            }
            Failure::Model(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Model(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Model(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Model(Error::Io(e))
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// `x` with 6 significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let decimals = (5 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match config::parse(argv) {
        Ok(cli) => cli,
        Err(config::ParseOutcome::Clap(e)) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
        Err(config::ParseOutcome::Failure(f)) => {
            let _ = writeln!(err, "error: {f}");
            return f.exit_code();
        }
    };
    match commands::dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}
