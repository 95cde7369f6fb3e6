//! Parameter sets of the six figure presets.
//!
//! Couplings are fixed per figure; axis ranges are a convention. Presets use
//! `T` in `[0.05, 3]` (60 points, step 0.05) for temperature scans and
//! `[-3, 3]` (121 points, step 0.05) for field and anisotropy scans; both
//! grids are symmetric where it matters and contain 0.

use crate::error::{Error, Result};
use crate::measures::MeasureSet;
use crate::model::ModelParams;
use crate::sweep::{Coordinate, Series, SweepSpec};

pub const PRESET_NAMES: [&str; 6] = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"];

/// Couplings common to the temperature scans. `Jz` is the series variable of
/// the first figure.
pub const FIG1_BASE: ModelParams = ModelParams {
    b1: 0.3,
    b2: -0.7,
    j: 0.0,
    jz: 1.0,
    k: 0.2,
    k1: -0.1,
    k2: 0.22,
    dz: 0.32,
    gamma: -0.87,
    lambda: 0.31,
};

/// Strong ferromagnetic transverse exchange used by the field scans.
pub const FIELD_SCAN_BASE: ModelParams = ModelParams {
    b1: 0.0,
    b2: 0.0,
    j: -2.5,
    jz: -1.0,
    k: 0.2,
    k1: -0.1,
    k2: 0.22,
    dz: 0.32,
    gamma: -0.87,
    lambda: 0.31,
};

/// Base of the anisotropy scans.
pub const ANISOTROPY_SCAN_BASE: ModelParams = ModelParams {
    b1: 0.3,
    b2: -0.7,
    j: -1.4,
    jz: 1.0,
    k: 0.2,
    k1: -0.1,
    k2: 0.22,
    dz: 0.32,
    gamma: -0.87,
    lambda: 0.31,
};

pub const T_RANGE: (f64, f64, usize) = (0.05, 3.0, 60);
pub const FIELD_RANGE: (f64, f64, usize) = (-3.0, 3.0, 121);
pub const TEMPERATURE_SERIES: [f64; 3] = [0.5, 1.0, 1.5];
pub const JZ_SERIES: [f64; 3] = [1.0, 2.0, 3.0];
pub const J_SERIES: [f64; 4] = [0.0, -0.7, -1.4, -2.1];

fn coupling(name: &str) -> Coordinate {
    Coordinate::parse(name).expect("known coupling")
}

fn temperature_scan(base: ModelParams, series: Series) -> SweepSpec {
    SweepSpec {
        base,
        temperature: 1.0,
        axis: Coordinate::Temperature,
        start: T_RANGE.0,
        stop: T_RANGE.1,
        steps: T_RANGE.2,
        series: vec![series],
        measures: MeasureSet::ALL,
    }
}

fn field_scan(base: ModelParams, axis: &str) -> SweepSpec {
    let mut base = base;
    base.set(axis, 0.0);
    SweepSpec {
        base,
        temperature: TEMPERATURE_SERIES[0],
        axis: coupling(axis),
        start: FIELD_RANGE.0,
        stop: FIELD_RANGE.1,
        steps: FIELD_RANGE.2,
        series: vec![Series {
            coordinate: Coordinate::Temperature,
            values: TEMPERATURE_SERIES.to_vec(),
        }],
        measures: MeasureSet::ALL,
    }
}

pub fn figure_preset(name: &str) -> Result<SweepSpec> {
    Ok(match name {
        "fig1" => temperature_scan(
            FIG1_BASE,
            Series { coordinate: coupling("Jz"), values: JZ_SERIES.to_vec() },
        ),
        "fig2" => temperature_scan(
            FIG1_BASE,
            Series { coordinate: coupling("J"), values: J_SERIES.to_vec() },
        ),
        "fig3" => field_scan(FIELD_SCAN_BASE, "B1"),
        "fig4" => field_scan(FIELD_SCAN_BASE, "B2"),
        "fig5" => field_scan(ANISOTROPY_SCAN_BASE, "K1"),
        "fig6" => field_scan(ANISOTROPY_SCAN_BASE, "K2"),
        other => return Err(Error::UnknownPreset(other.to_string())),
    })
}
