use std::process::Command;

use qqcorr::error::Error;
use qqcorr::measures::{Measure, MeasureSet};
use qqcorr::model::ModelParams;
use qqcorr::presets::{figure_preset, FIG1_BASE};
use qqcorr::sweep::{run_point, run_sweep, write_csv, Coordinate, SweepSpec, CSV_HEADER};
use qqcorr::threshold::{find_threshold, ThresholdQuery};

fn fig1_jz1() -> SweepSpec {
    let mut s = figure_preset("fig1").unwrap();
    s.series.clear();
    s
}

fn csv(spec: &SweepSpec, jobs: usize) -> String {
    let mut out = Vec::new();
    write_csv(&mut out, &run_sweep(spec, jobs).unwrap()).unwrap();
    String::from_utf8(out).unwrap()
}

#[test]
fn fig1_high_temperature_is_separable() {
    let rep = run_point(&FIG1_BASE, 3.0, MeasureSet::ALL).unwrap();
    assert_eq!(rep.negativity, 0.0);
    assert!(rep.chsh_max < 2.0);
}

#[test]
fn fig1_low_temperature_regression() {
    let rep = run_point(&FIG1_BASE, 0.05, MeasureSet::ALL).unwrap();
    let pinned = [
        (rep.negativity, 0.378649573742),
        (rep.min_value, 0.286750999868),
        (rep.uin_value, 0.573502000704),
        (rep.chsh_max, 2.50878615852),
    ];
    for (got, want) in pinned {
        assert!((got - want).abs() <= 1e-9, "{got} vs {want}");
    }
}

#[test]
fn huge_temperature_is_uncorrelated() {
    let p = ModelParams::from_array([1.3, -2.0, 0.7, 2.5, -1.1, 0.4, 2.9, -0.6, 1.8, -2.2]);
    let rep = run_point(&p, 1e6, MeasureSet::ALL).unwrap();
    for m in Measure::ALL {
        assert!(rep.value(m) <= 1e-4, "{}", m.name());
    }
}

#[test]
fn invalid_temperature_propagates() {
    assert!(matches!(
        run_point(&FIG1_BASE, 0.0, MeasureSet::ALL),
        Err(Error::InvalidTemperature(_))
    ));
}

#[test]
fn thermal_decay_is_monotone_at_fig1() {
    let rows = run_sweep(&fig1_jz1(), 1).unwrap();
    assert_eq!(rows.len(), 60);
    for m in Measure::ALL {
        for w in rows.windows(2) {
            let (a, b) = (w[0].report.value(m), w[1].report.value(m));
            assert!(b <= a + 1e-8, "{} rises from {a} to {b} at T={}", m.name(), w[1].temperature);
        }
    }
}

#[test]
fn sweep_rows_equal_single_points() {
    let mut spec = figure_preset("fig4").unwrap();
    spec.steps = 7;
    let rows = run_sweep(&spec, 2).unwrap();
    assert_eq!(rows.len(), 21);
    for row in rows.iter().step_by(4) {
        let rep = run_point(&row.params, row.temperature, spec.measures).unwrap();
        for m in Measure::ALL {
            assert_eq!(rep.value(m).to_bits(), row.report.value(m).to_bits());
        }
    }
    assert_eq!(rows[0].series, Some((Coordinate::Temperature, 0.5)));
    assert_eq!(rows[20].series, Some((Coordinate::Temperature, 1.5)));
}

#[test]
fn csv_is_identical_across_job_counts() {
    let mut spec = figure_preset("fig1").unwrap();
    spec.steps = 9;
    let one = csv(&spec, 1);
    assert_eq!(one, csv(&spec, 3));
    assert_eq!(one, csv(&spec, 1));
    let mut lines = one.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.next().unwrap().split(',').next(), Some("T"));
    assert_eq!(one.lines().count(), 28);
}

#[test]
fn unrequested_measures_leave_empty_fields() {
    let mut spec = fig1_jz1();
    spec.steps = 2;
    spec.measures = MeasureSet::parse("negativity").unwrap();
    let text = csv(&spec, 1);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("T,none,,0.05,"));
    assert!(row.ends_with(",,,"), "{row}");
}

#[test]
fn fragility_ordering_at_fig1() {
    let spec = fig1_jz1();
    let at = |measure, level| {
        find_threshold(&ThresholdQuery { spec: spec.clone(), measure, level }).unwrap()
    };
    let chsh = at(Measure::Chsh, 2.0);
    let death = at(Measure::Negativity, 0.0);
    assert!(chsh + 1e-3 < death, "{chsh} {death}");
    let uin_at_death = run_point(&FIG1_BASE, death, MeasureSet::ALL).unwrap().uin_value;
    assert!(uin_at_death > 0.01);
    // UIN stays above 0.01 on the whole preset range
    let mut wide = spec.clone();
    wide.stop = 20.0;
    let q = ThresholdQuery { spec: wide, measure: Measure::Uin, level: 0.01 };
    let uin_low = find_threshold(&q).unwrap();
    assert!(death + 1e-3 < uin_low, "{death} {uin_low}");
}

#[test]
fn threshold_without_bracket() {
    let mut spec = fig1_jz1();
    spec.start = 2.0;
    let q = ThresholdQuery { spec, measure: Measure::Negativity, level: 0.0 };
    assert!(matches!(find_threshold(&q), Err(Error::NoBracket { .. })));
}

fn qqcorr(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qqcorr")).args(args).output().unwrap()
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("qqcorr-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn cli_point_and_exit_codes() {
    let cfg = write_temp("point.cfg", "preset = fig1\nseries = none\nT = 3\n");
    let out = qqcorr(&["point", "--config", cfg.to_str().unwrap(), "--measures", "negativity"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some(CSV_HEADER));
    assert!(text.lines().nth(1).unwrap().contains(",0,,,"));

    let bad = write_temp("bad.cfg", "B1 = 0.3\nwidth = 2\n");
    let out = qqcorr(&["sweep", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    assert_eq!(qqcorr(&["preset", "fig9"]).status.code(), Some(2));

    let flat = write_temp("flat.cfg", "preset = fig1\nseries = none\nrange = 2, 3\n");
    let out = qqcorr(&[
        "threshold", "--config", flat.to_str().unwrap(), "--measure", "negativity", "--level", "0",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let out = qqcorr(&["preset", "fig6", "--show"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("axis = K2"));
}

#[test]
fn cli_threshold_with_series_value() {
    let cfg = write_temp("thr.cfg", "preset = fig1\n");
    let out = qqcorr(&[
        "threshold", "--config", cfg.to_str().unwrap(), "--measure", "chsh", "--level", "2",
        "--series-value", "1",
    ]);
    assert!(out.status.success());
    let t: f64 = String::from_utf8(out.stdout).unwrap().trim().parse().unwrap();
    assert!((t - 0.51162877764).abs() < 1e-6, "{t}");
}

#[test]
fn cli_sweep_to_file() {
    let cfg = write_temp("sweep.cfg", "preset = fig3\nsteps = 3\nmeasures = min\n");
    let out_path = std::env::temp_dir().join(format!("qqcorr-{}-out.csv", std::process::id()));
    let out = qqcorr(&[
        "sweep", "--config", cfg.to_str().unwrap(), "--out", out_path.to_str().unwrap(), "--jobs", "2",
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().nth(1).unwrap().starts_with("B1,T,0.5,0.5,-3,"));
}
