//! C ABI over `qqcorr`.
//!
//! Every fallible function returns a [`QqStatus`]; on failure the message is
//! available from [`qq_last_error`] on the same thread. Handles are opaque
//! and owned by the caller, who releases them with the matching `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qqcorr::config::parse_config;
use qqcorr::error::Error;
use qqcorr::gibbs::{gibbs_analytic, DensityMatrix};
use qqcorr::measures::{evaluate, CorrelationReport, Measure, MeasureSet};
use qqcorr::model::ModelParams;
use qqcorr::presets::figure_preset;
use qqcorr::threshold::{find_threshold, ThresholdQuery};

pub const QQ_MEASURE_NEGATIVITY: u32 = 1;
pub const QQ_MEASURE_MIN: u32 = 2;
pub const QQ_MEASURE_UIN: u32 = 4;
pub const QQ_MEASURE_CHSH: u32 = 8;
pub const QQ_MEASURE_ALL: u32 = 15;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QqStatus {
    QqOk = 0,
    QqNullPointer = 1,
    QqInvalidArgument = 2,
    QqInvalidTemperature = 3,
    QqNumerical = 4,
    QqConfig = 5,
    QqNoBracket = 6,
    QqUnknownPreset = 7,
    QqPanic = 8,
}

/// Ten couplings of the model.
pub struct QqParams(ModelParams);

/// A validated 6x6 density matrix.
pub struct QqState(DensityMatrix);

/// Measure values; entries not requested in the mask are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QqReport {
    pub negativity: f64,
    pub min: f64,
    pub uin: f64,
    pub chsh_max: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> QqStatus {
    match e {
        Error::InvalidTemperature(_) => QqStatus::QqInvalidTemperature,
        Error::Config(_) => QqStatus::QqConfig,
        Error::NoBracket { .. } => QqStatus::QqNoBracket,
        Error::UnknownPreset(_) => QqStatus::QqUnknownPreset,
        Error::Dimension { .. } => QqStatus::QqInvalidArgument,
        Error::GridPoint { source, .. } => status_of(source),
        _ => QqStatus::QqNumerical,
    }
}

struct Fail(QqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(QqStatus::QqNullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QqStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QqStatus::QqOk,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QqStatus::QqPanic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(QqStatus::QqInvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn measure_set(mask: u32) -> Result<MeasureSet, Fail> {
    if mask == 0 || mask & !QQ_MEASURE_ALL != 0 {
        return Err(Fail(QqStatus::QqInvalidArgument, format!("bad measure mask {mask:#x}")));
    }
    Ok(MeasureSet {
        negativity: mask & QQ_MEASURE_NEGATIVITY != 0,
        min: mask & QQ_MEASURE_MIN != 0,
        uin: mask & QQ_MEASURE_UIN != 0,
        chsh: mask & QQ_MEASURE_CHSH != 0,
    })
}

fn report(r: &CorrelationReport) -> QqReport {
    QqReport {
        negativity: r.negativity,
        min: r.min_value,
        uin: r.uin_value,
        chsh_max: r.chsh_max,
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn qq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// All couplings zero.
#[no_mangle]
pub extern "C" fn qq_params_new() -> *mut QqParams {
    Box::into_raw(Box::new(QqParams(ModelParams::default())))
}

/// Base couplings of a figure preset (`"fig1"` .. `"fig6"`).
///
/// # Safety
/// `name` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qq_params_from_preset(name: *const c_char, out: *mut *mut QqParams) -> QqStatus {
    guard(|| {
        let spec = figure_preset(text(name, "name")?)?;
        write(out, Box::into_raw(Box::new(QqParams(spec.base))), "out")
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qq_params_free(p: *mut QqParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Sets a coupling by name (`B1`, `B2`, `J`, `Jz`, `K`, `K1`, `K2`, `Dz`,
/// `Gamma`, `Lambda`).
///
/// # Safety
/// `p` must be a live handle; `name` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn qq_params_set(p: *mut QqParams, name: *const c_char, value: f64) -> QqStatus {
    guard(|| {
        let p = p.as_mut().ok_or_else(|| null("params"))?;
        let name = text(name, "name")?;
        if !value.is_finite() {
            return Err(Fail(QqStatus::QqInvalidArgument, format!("{name} must be finite")));
        }
        if !p.0.set(name, value) {
            return Err(Fail(QqStatus::QqInvalidArgument, format!("unknown coupling `{name}`")));
        }
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `name` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qq_params_get(p: *const QqParams, name: *const c_char, out: *mut f64) -> QqStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("params"))?;
        let name = text(name, "name")?;
        let v = p
            .0
            .get(name)
            .ok_or_else(|| Fail(QqStatus::QqInvalidArgument, format!("unknown coupling `{name}`")))?;
        write(out, v, "out")
    })
}

/// Thermal state `exp(-H/T)/Z`.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qq_state_thermal(p: *const QqParams, temperature: f64, out: *mut *mut QqState) -> QqStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("params"))?;
        let rho = gibbs_analytic(&p.0, temperature)?;
        write(out, Box::into_raw(Box::new(QqState(rho))), "out")
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn qq_state_free(s: *mut QqState) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Matrix element `(row, col)`, both in `0..6`, in the basis
/// `|up,1>, |up,0>, |up,-1>, |down,1>, |down,0>, |down,-1>`.
///
/// # Safety
/// `s` must be a live handle; `re` and `im` writable.
#[no_mangle]
pub unsafe extern "C" fn qq_state_element(
    s: *const QqState,
    row: usize,
    col: usize,
    re: *mut f64,
    im: *mut f64,
) -> QqStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("state"))?;
        if row >= 6 || col >= 6 {
            return Err(Fail(QqStatus::QqInvalidArgument, format!("index ({row}, {col}) out of range")));
        }
        let z = s.0.matrix()[(row, col)];
        write(re, z.re, "re")?;
        write(im, z.im, "im")
    })
}

/// Measures selected by `mask` (`QQ_MEASURE_*` bits).
///
/// # Safety
/// `s` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qq_state_measures(s: *const QqState, mask: u32, out: *mut QqReport) -> QqStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("state"))?;
        let which = measure_set(mask)?;
        write(out, report(&evaluate(&s.0, which)), "out")
    })
}

/// Thermal state followed by the selected measures.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qq_run_point(p: *const QqParams, temperature: f64, mask: u32, out: *mut QqReport) -> QqStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("params"))?;
        let which = measure_set(mask)?;
        let rep = qqcorr::sweep::run_point(&p.0, temperature, which)?;
        write(out, report(&rep), "out")
    })
}

/// Crossing of `measure` (`"negativity"`, `"min"`, `"uin"`, `"chsh"`) through
/// `level` along the axis of a single-curve configuration given as text.
///
/// # Safety
/// `config` and `measure` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qq_find_threshold(
    config: *const c_char,
    measure: *const c_char,
    level: f64,
    out: *mut f64,
) -> QqStatus {
    guard(|| {
        let spec = parse_config(text(config, "config")?)?;
        let name = text(measure, "measure")?;
        let measure = Measure::parse(name)
            .ok_or_else(|| Fail(QqStatus::QqInvalidArgument, format!("unknown measure `{name}`")))?;
        let x = find_threshold(&ThresholdQuery { spec, measure, level })?;
        write(out, x, "out")
    })
}
