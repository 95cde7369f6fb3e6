use thiserror::Error;

/// Errors raised by the numerical kernels, the thermal-state builders and the
/// sweep driver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("temperature must be positive and finite, got {0}")]
    InvalidTemperature(f64),

    #[error("Boltzmann exponent is not finite after rescaling ({0})")]
    OverflowGuard(f64),

    #[error("rotation is not in SO(3) (orthogonality defect {defect:e}, det {det})")]
    InvalidRotation { defect: f64, det: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },

    #[error("no crossing of level {level} found on [{start}, {stop}]")]
    NoBracket { level: f64, start: f64, stop: f64 },

    #[error("unknown preset `{0}` (expected fig1..fig6)")]
    UnknownPreset(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("at {axis} = {value}, {series}: {source}")]
    GridPoint {
        axis: String,
        value: f64,
        series: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
