//! Plain-text sweep configuration.
//!
//! ```text
//! # temperature scan in the style of the fig1 preset
//! preset = fig1          # optional starting point, applied before other keys
//! Jz = 1
//! T = 0.5                # temperature when T is not swept
//! axis = T
//! range = 0.05, 3        # or: start = 0.05 / stop = 3
//! steps = 60
//! series = Jz: 1, 2, 3   # repeatable; `series = none` clears
//! measures = negativity, min, uin, chsh
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::measures::{Measure, MeasureSet};
use crate::model::{ModelParams, PARAM_NAMES};
use crate::presets;
use crate::sweep::{format_float, Coordinate, Series, SweepSpec};

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            base: ModelParams::default(),
            temperature: 1.0,
            axis: Coordinate::Temperature,
            start: presets::T_RANGE.0,
            stop: presets::T_RANGE.1,
            steps: presets::T_RANGE.2,
            series: Vec::new(),
            measures: MeasureSet::ALL,
        }
    }
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Config(format!("line {line}: {msg}"))
}

fn number(line: usize, key: &str, s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| err(line, format!("`{key}` expects a number, got `{}`", s.trim())))?;
    if !v.is_finite() {
        return Err(err(line, format!("`{key}` must be finite")));
    }
    Ok(v)
}

fn numbers(line: usize, key: &str, s: &str) -> Result<Vec<f64>> {
    s.split(',').map(|v| number(line, key, v)).collect()
}

/// `(line number, key, value)` for every non-blank, non-comment line.
fn entries(text: &str) -> Result<Vec<(usize, String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (k, v) = content
            .split_once('=')
            .ok_or_else(|| err(line, format!("expected `key = value`, got `{content}`")))?;
        out.push((line, k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

pub fn parse_config(text: &str) -> Result<SweepSpec> {
    let entries = entries(text)?;
    let mut spec = SweepSpec::default();
    for (line, key, value) in &entries {
        if key == "preset" {
            spec = presets::figure_preset(value).map_err(|e| err(*line, e))?;
        }
    }
    let mut series_seen = false;
    for (line, key, value) in entries {
        match key.as_str() {
            "preset" => {}
            "T" | "temperature" => spec.temperature = number(line, &key, &value)?,
            "axis" => {
                spec.axis = Coordinate::parse(&value)
                    .ok_or_else(|| err(line, format!("unknown axis `{value}`")))?
            }
            "range" => {
                let v = numbers(line, &key, &value)?;
                if v.len() != 2 {
                    return Err(err(line, "`range` expects `start, stop`"));
                }
                (spec.start, spec.stop) = (v[0], v[1]);
            }
            "start" => spec.start = number(line, &key, &value)?,
            "stop" => spec.stop = number(line, &key, &value)?,
            "steps" => {
                spec.steps = value
                    .parse()
                    .map_err(|_| err(line, format!("`steps` expects a count, got `{value}`")))?
            }
            "series" => {
                if !series_seen {
                    spec.series.clear();
                    series_seen = true;
                }
                if value == "none" {
                    continue;
                }
                let (name, vals) = value
                    .split_once(':')
                    .ok_or_else(|| err(line, "`series` expects `Name: v1, v2, ...`"))?;
                let coordinate = Coordinate::parse(name.trim())
                    .ok_or_else(|| err(line, format!("unknown series coordinate `{}`", name.trim())))?;
                spec.series.push(Series {
                    coordinate,
                    values: numbers(line, "series", vals)?,
                });
            }
            "measures" => {
                spec.measures = MeasureSet::parse(&value)
                    .ok_or_else(|| err(line, format!("bad measure list `{value}`")))?
            }
            name if PARAM_NAMES.contains(&name) => {
                let v = number(line, name, &value)?;
                spec.base.set(name, v);
            }
            other => return Err(err(line, format!("unknown key `{other}`"))),
        }
    }
    spec.validate()?;
    Ok(spec)
}

/// Renders a spec in the format accepted by [`parse_config`].
pub fn format_config(spec: &SweepSpec) -> String {
    let mut out = String::new();
    for (name, v) in PARAM_NAMES.iter().zip(spec.base.to_array()) {
        writeln!(out, "{name} = {}", format_float(v)).unwrap();
    }
    writeln!(out, "T = {}", format_float(spec.temperature)).unwrap();
    writeln!(out, "axis = {}", spec.axis.name()).unwrap();
    writeln!(out, "range = {}, {}", format_float(spec.start), format_float(spec.stop)).unwrap();
    writeln!(out, "steps = {}", spec.steps).unwrap();
    if spec.series.is_empty() {
        writeln!(out, "series = none").unwrap();
    }
    for s in &spec.series {
        let vals: Vec<String> = s.values.iter().map(|&v| format_float(v)).collect();
        writeln!(out, "series = {}: {}", s.coordinate.name(), vals.join(", ")).unwrap();
    }
    let names: Vec<&str> = Measure::ALL
        .iter()
        .filter(|m| spec.measures.contains(**m))
        .map(Measure::name)
        .collect();
    writeln!(out, "measures = {}", names.join(", ")).unwrap();
    out
}
