//! Per-curve summary statistics of a sweep.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::measures::Measure;
use crate::sweep::{format_float, Coordinate, SweepRow, SweepSpec};
use crate::threshold::{find_threshold, ThresholdQuery};

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSummary {
    pub series: Option<(Coordinate, f64)>,
    /// Maximum over the grid, per measure, in `Measure::ALL` order.
    pub max: [f64; 4],
    /// Axis value where each maximum is attained (first occurrence).
    pub argmax: [f64; 4],
    /// Death point of the negativity, when the curve brackets one.
    pub negativity_death: Option<f64>,
    /// Where the CHSH value crosses 2, when bracketed.
    pub chsh_crossing: Option<f64>,
}

/// Spec for one curve of `spec`, with the series value folded into the base.
pub fn single_curve(spec: &SweepSpec, curve: Option<(Coordinate, f64)>) -> SweepSpec {
    let mut out = spec.clone();
    out.series.clear();
    if let Some((c, v)) = curve {
        c.apply(&mut out.base, &mut out.temperature, v);
    }
    out
}

fn optional_threshold(spec: SweepSpec, measure: Measure, level: f64) -> Result<Option<f64>> {
    match find_threshold(&ThresholdQuery { spec, measure, level }) {
        Ok(x) => Ok(Some(x)),
        Err(Error::NoBracket { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Column of one measure along the rows of a single curve.
pub fn column(rows: &[&SweepRow], m: Measure) -> Vec<f64> {
    rows.iter().map(|r| r.report.value(m)).collect()
}

pub fn summarize(spec: &SweepSpec, rows: &[SweepRow]) -> Result<Vec<CurveSummary>> {
    let mut out = Vec::new();
    for curve in spec.curves() {
        let curve_rows: Vec<&SweepRow> = rows.iter().filter(|r| r.series == curve).collect();
        let mut max = [f64::NAN; 4];
        let mut argmax = [f64::NAN; 4];
        for (k, m) in Measure::ALL.iter().enumerate() {
            for r in &curve_rows {
                let v = r.report.value(*m);
                if !v.is_nan() && (max[k].is_nan() || v > max[k]) {
                    max[k] = v;
                    argmax[k] = r.axis_value();
                }
            }
        }
        let one = single_curve(spec, curve);
        let negativity_death = if spec.measures.negativity {
            optional_threshold(one.clone(), Measure::Negativity, 0.0)?
        } else {
            None
        };
        let chsh_crossing = if spec.measures.chsh {
            optional_threshold(one, Measure::Chsh, 2.0)?
        } else {
            None
        };
        out.push(CurveSummary {
            series: curve,
            max,
            argmax,
            negativity_death,
            chsh_crossing,
        });
    }
    Ok(out)
}

pub const SUMMARY_HEADER: &str = "series_name,series_value,max_negativity,max_min,max_uin,max_chsh,\
argmax_negativity,argmax_min,argmax_uin,argmax_chsh,negativity_death,chsh_crossing";

pub fn summary_csv(summaries: &[CurveSummary]) -> String {
    let mut out = String::new();
    writeln!(out, "{SUMMARY_HEADER}").unwrap();
    for s in summaries {
        let (name, value) = match s.series {
            Some((c, v)) => (c.name(), format_float(v)),
            None => ("none", String::new()),
        };
        write!(out, "{name},{value}").unwrap();
        for v in s.max.iter().chain(&s.argmax) {
            write!(out, ",{}", format_float(*v)).unwrap();
        }
        let opt = |x: Option<f64>| x.map(format_float).unwrap_or_default();
        writeln!(out, ",{},{}", opt(s.negativity_death), opt(s.chsh_crossing)).unwrap();
    }
    out
}

/// For a grid symmetric about zero: whether the maximum of `values` is not
/// matched at the mirrored grid point (within `tol`).
pub fn max_not_mirrored(values: &[f64], tol: f64) -> bool {
    let (i, &best) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty column");
    let mirrored = values[values.len() - 1 - i];
    mirrored < best - tol
}

/// Largest absolute jump between adjacent points divided by the median
/// jump.
pub fn jump_ratio(values: &[f64]) -> f64 {
    let mut jumps: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let largest = jumps.iter().copied().fold(0.0, f64::max);
    jumps.sort_by(f64::total_cmp);
    let n = jumps.len();
    let median = if n % 2 == 1 {
        jumps[n / 2]
    } else {
        0.5 * (jumps[n / 2 - 1] + jumps[n / 2])
    };
    largest / median
}
