use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qqcorr::config::{format_config, parse_config};
use qqcorr::error::Error;
use qqcorr::measures::{Measure, MeasureSet};
use qqcorr::presets::figure_preset;
use qqcorr::summary::{summarize, summary_csv};
use qqcorr::sweep::{self, format_float, run_sweep, SweepRow, SweepSpec};
use qqcorr::threshold::{find_threshold, ThresholdQuery};

/// Thermal quantum correlations (negativity, MIN, UIN, CHSH) of the
/// axially symmetric qubit-qutrit model.
#[derive(Parser)]
#[command(name = "qqcorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// `key = value` configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma separated subset of negativity,min,uin,chsh.
    #[arg(long)]
    measures: Option<String>,
    /// Number of grid points along the axis.
    #[arg(long)]
    steps: Option<usize>,
    /// Worker threads; output order does not depend on it.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate all measures at the configured couplings and temperature.
    Point {
        #[command(flatten)]
        common: Common,
        /// Temperature override.
        #[arg(long = "T")]
        temperature: Option<f64>,
    },
    /// Sweep the configured axis and write a CSV table.
    Sweep {
        #[command(flatten)]
        common: Common,
    },
    /// Locate where a measure crosses a level along the configured axis.
    Threshold {
        #[command(flatten)]
        common: Common,
        /// negativity, min, uin or chsh.
        #[arg(long)]
        measure: String,
        /// Crossing level (0 for sudden death, 2 for the CHSH bound).
        #[arg(long)]
        level: f64,
        /// Pick one value of the configured series as a fixed parameter.
        #[arg(long)]
        series_value: Option<f64>,
    },
    /// Run one of the figure presets (fig1..fig6).
    Preset {
        name: String,
        #[command(flatten)]
        common: Common,
        /// Print the preset as a config file instead of running it.
        #[arg(long)]
        show: bool,
        /// Append per-curve summary statistics instead of the full table.
        #[arg(long)]
        summary: bool,
    },
}

fn load_spec(common: &Common, base: Option<SweepSpec>) -> Result<SweepSpec, Error> {
    let mut spec = match (&common.config, base) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            parse_config(&text)?
        }
        (None, Some(spec)) => spec,
        (None, None) => return Err(Error::Config("--config is required".into())),
    };
    if let Some(m) = &common.measures {
        spec.measures =
            MeasureSet::parse(m).ok_or_else(|| Error::Config(format!("bad measure list `{m}`")))?;
    }
    if let Some(steps) = common.steps {
        spec.steps = steps;
    }
    spec.validate()?;
    Ok(spec)
}

fn output(common: &Common) -> Result<Box<dyn Write>, Error> {
    Ok(match &common.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Error::Config(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_failure(e: io::Error) -> Error {
    Error::Config(format!("write failed: {e}"))
}

fn write_rows(common: &Common, rows: &[SweepRow]) -> Result<(), Error> {
    let mut out = output(common)?;
    sweep::write_csv(&mut out, rows).map_err(io_failure)?;
    out.flush().map_err(io_failure)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Point { common, temperature } => {
            let spec = load_spec(&common, None)?;
            let t = temperature.unwrap_or(spec.temperature);
            let report = sweep::run_point(&spec.base, t, spec.measures)?;
            let row = SweepRow {
                axis: qqcorr::sweep::Coordinate::Temperature,
                series: None,
                temperature: t,
                params: spec.base,
                report,
            };
            write_rows(&common, &[row])
        }
        Command::Sweep { common } => {
            let spec = load_spec(&common, None)?;
            let rows = run_sweep(&spec, common.jobs)?;
            write_rows(&common, &rows)
        }
        Command::Threshold { common, measure, level, series_value } => {
            let mut spec = load_spec(&common, None)?;
            let measure = Measure::parse(&measure)
                .ok_or_else(|| Error::Config(format!("unknown measure `{measure}`")))?;
            if let Some(v) = series_value {
                let coordinate = spec
                    .series
                    .first()
                    .ok_or_else(|| Error::Config("--series-value given but no series configured".into()))?
                    .coordinate;
                spec = qqcorr::summary::single_curve(&spec, Some((coordinate, v)));
            }
            let x = find_threshold(&ThresholdQuery { spec, measure, level })?;
            let mut out = output(&common)?;
            writeln!(out, "{}", format_float(x)).map_err(io_failure)?;
            out.flush().map_err(io_failure)
        }
        Command::Preset { name, common, show, summary } => {
            let spec = load_spec(&common, Some(figure_preset(&name)?))?;
            if show {
                let mut out = output(&common)?;
                out.write_all(format_config(&spec).as_bytes()).map_err(io_failure)?;
                return out.flush().map_err(io_failure);
            }
            let rows = run_sweep(&spec, common.jobs)?;
            if summary {
                let text = summary_csv(&summarize(&spec, &rows)?);
                let mut out = output(&common)?;
                out.write_all(text.as_bytes()).map_err(io_failure)?;
                return out.flush().map_err(io_failure);
            }
            write_rows(&common, &rows)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config(_) | Error::UnknownPreset(_) => 2,
        Error::NoBracket { .. } => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qqcorr: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
