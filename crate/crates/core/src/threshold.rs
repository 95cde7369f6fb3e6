//! Sudden-death and CHSH-crossing points along a sweep axis.

use crate::error::{Error, Result};
use crate::measures::{Measure, MeasureSet};
use crate::sweep::{run_point, SweepSpec};

pub const PRESCAN_POINTS: usize = 64;
pub const AXIS_TOL: f64 = 1e-6;
/// Values at or below this count as dead for a level-0 query.
pub const DEATH_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdQuery {
    pub spec: SweepSpec,
    pub measure: Measure,
    pub level: f64,
}

fn above(value: f64, level: f64) -> bool {
    if level == 0.0 {
        value > DEATH_FLOOR
    } else {
        value > level
    }
}

/// Locates where `f` crosses `level` on `[start, stop]`.
///
/// A 64-point pre-scan records every bracket where the sign of `f - level`
/// changes; bisection runs on the last one and shrinks it to `AXIS_TOL`. For
/// `level == 0` and a falling measure the returned value is the right end of
/// the final bracket, i.e. the smallest sampled axis value where the measure
/// is dead; otherwise the midpoint.
pub fn find_crossing(
    f: impl Fn(f64) -> Result<f64>,
    start: f64,
    stop: f64,
    level: f64,
) -> Result<f64> {
    let h = (stop - start) / (PRESCAN_POINTS - 1) as f64;
    let at = |i: usize| if i == PRESCAN_POINTS - 1 { stop } else { start + i as f64 * h };

    let mut prev_x = at(0);
    let mut prev_state = above(f(prev_x)?, level);
    let mut bracket = None;
    for i in 1..PRESCAN_POINTS {
        let x = at(i);
        let state = above(f(x)?, level);
        if state != prev_state {
            bracket = Some((prev_x, x, prev_state));
        }
        prev_x = x;
        prev_state = state;
    }
    let (mut lo, mut hi, lo_state) = bracket.ok_or(Error::NoBracket { level, start, stop })?;

    while hi - lo > AXIS_TOL {
        let mid = 0.5 * (lo + hi);
        if above(f(mid)?, level) == lo_state {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if level == 0.0 && lo_state { hi } else { 0.5 * (lo + hi) })
}

/// Crossing point of `q.measure` along the query's axis.
pub fn find_threshold(q: &ThresholdQuery) -> Result<f64> {
    q.spec.validate()?;
    if !q.spec.series.is_empty() {
        return Err(Error::Config("threshold queries sweep a single curve; drop the series".into()));
    }
    let only = MeasureSet::parse(q.measure.name()).expect("measure name parses");
    find_crossing(
        |x| {
            let (p, t) = q.spec.point(None, x);
            Ok(run_point(&p, t, only)?.value(q.measure))
        },
        q.spec.start,
        q.spec.stop,
        q.level,
    )
}
