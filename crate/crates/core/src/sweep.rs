//! Parameter sweeps over the thermal state and CSV emission.

use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gibbs;
use crate::measures::{self, CorrelationReport, MeasureSet};
use crate::model::{ModelParams, PARAM_NAMES};

/// A sweepable coordinate: the temperature or one of the couplings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coordinate {
    Temperature,
    Coupling(usize),
}

impl Coordinate {
    pub fn parse(name: &str) -> Option<Coordinate> {
        if name == "T" {
            return Some(Coordinate::Temperature);
        }
        PARAM_NAMES.iter().position(|&n| n == name).map(Coordinate::Coupling)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Coordinate::Temperature => "T",
            Coordinate::Coupling(i) => PARAM_NAMES[*i],
        }
    }

    /// Writes `value` into the `(params, T)` pair.
    pub fn apply(&self, params: &mut ModelParams, temperature: &mut f64, value: f64) {
        match self {
            Coordinate::Temperature => *temperature = value,
            Coordinate::Coupling(i) => {
                params.set(PARAM_NAMES[*i], value);
            }
        }
    }
}

/// One family of curves: the coordinate `name` takes each of `values`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub coordinate: Coordinate,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: ModelParams,
    /// Used unless the axis or a series overrides it.
    pub temperature: f64,
    pub axis: Coordinate,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub series: Vec<Series>,
    pub measures: MeasureSet,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(Error::Config(format!(
                "range must satisfy start < stop, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.steps < 2 {
            return Err(Error::Config(format!("steps must be at least 2, got {}", self.steps)));
        }
        for s in &self.series {
            if s.coordinate == self.axis {
                return Err(Error::Config(format!(
                    "series `{}` duplicates the swept axis",
                    s.coordinate.name()
                )));
            }
            if s.values.is_empty() {
                return Err(Error::Config(format!("series `{}` has no values", s.coordinate.name())));
            }
        }
        if !self.base.is_finite() {
            return Err(Error::Config("couplings must be finite".into()));
        }
        if self.axis != Coordinate::Temperature
            && !self.series.iter().any(|s| s.coordinate == Coordinate::Temperature)
            && !(self.temperature > 0.0 && self.temperature.is_finite())
        {
            return Err(Error::Config(format!("temperature must be positive, got {}", self.temperature)));
        }
        Ok(())
    }

    /// Axis grid, endpoints included.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.steps;
        let h = (self.stop - self.start) / (n - 1) as f64;
        (0..n)
            .map(|i| if i == n - 1 { self.stop } else { self.start + i as f64 * h })
            .collect()
    }

    /// `(series coordinate, series value)` pairs in output order; a single
    /// `None` when no series is given.
    pub fn curves(&self) -> Vec<Option<(Coordinate, f64)>> {
        if self.series.is_empty() {
            return vec![None];
        }
        self.series
            .iter()
            .flat_map(|s| s.values.iter().map(move |&v| Some((s.coordinate, v))))
            .collect()
    }

    /// Couplings and temperature at one grid point.
    pub fn point(&self, curve: Option<(Coordinate, f64)>, axis_value: f64) -> (ModelParams, f64) {
        let mut params = self.base;
        let mut t = self.temperature;
        if let Some((c, v)) = curve {
            c.apply(&mut params, &mut t, v);
        }
        self.axis.apply(&mut params, &mut t, axis_value);
        (params, t)
    }
}

/// Thermal state at `(p, T)` followed by the requested measures.
pub fn run_point(p: &ModelParams, t: f64, which: MeasureSet) -> Result<CorrelationReport> {
    let rho = gibbs::gibbs_analytic(p, t)?;
    Ok(measures::evaluate(&rho, which))
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub axis: Coordinate,
    pub series: Option<(Coordinate, f64)>,
    pub temperature: f64,
    pub params: ModelParams,
    pub report: CorrelationReport,
}

impl SweepRow {
    pub fn axis_value(&self) -> f64 {
        match self.axis {
            Coordinate::Temperature => self.temperature,
            Coordinate::Coupling(i) => self.params.to_array()[i],
        }
    }
}

/// Evaluates every grid point. Rows come out ordered by curve, then by axis
/// value, whatever the number of worker threads.
pub fn run_sweep(spec: &SweepSpec, jobs: usize) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.grid();
    let points: Vec<_> = spec
        .curves()
        .into_iter()
        .flat_map(|c| grid.iter().map(move |&x| (c, x)))
        .collect();
    let eval = |&(curve, x): &(Option<(Coordinate, f64)>, f64)| -> Result<SweepRow> {
        let (params, t) = spec.point(curve, x);
        let report = run_point(&params, t, spec.measures).map_err(|e| Error::GridPoint {
            axis: spec.axis.name().to_string(),
            value: x,
            series: match curve {
                Some((c, v)) => format!("{} = {}", c.name(), v),
                None => "no series".to_string(),
            },
            source: Box::new(e),
        })?;
        Ok(SweepRow {
            axis: spec.axis,
            series: curve,
            temperature: t,
            params,
            report,
        })
    };
    if jobs <= 1 {
        return points.iter().map(eval).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {jobs} worker threads: {e}")))?;
    pool.install(|| points.par_iter().map(eval).collect())
}

pub const CSV_HEADER: &str =
    "axis,series_name,series_value,T,B1,B2,J,Jz,K,K1,K2,Dz,Gamma,Lambda,negativity,min,uin,chsh_max";

/// `%.12g`-style formatting: 12 significant digits, trailing zeros trimmed,
/// scientific notation outside `[1e-5, 1e12)`. `NaN` becomes an empty field.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return String::new();
    }
    if x == 0.0 {
        return "0".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    const SIG: i32 = 12;
    let sci = format!("{:.*e}", (SIG - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..SIG).contains(&exp) {
        let m = trim_zeros(mantissa);
        return format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (SIG - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn csv_row(row: &SweepRow) -> String {
    let mut line = String::new();
    let (sname, svalue) = match row.series {
        Some((c, v)) => (c.name(), format_float(v)),
        None => ("none", String::new()),
    };
    write!(line, "{},{},{},{}", row.axis.name(), sname, svalue, format_float(row.temperature)).unwrap();
    for v in row.params.to_array() {
        write!(line, ",{}", format_float(v)).unwrap();
    }
    let r = &row.report;
    for v in [r.negativity, r.min_value, r.uin_value, r.chsh_max] {
        write!(line, ",{}", format_float(v)).unwrap();
    }
    line
}

pub fn write_csv(out: &mut impl io::Write, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", csv_row(row))?;
    }
    Ok(())
}
