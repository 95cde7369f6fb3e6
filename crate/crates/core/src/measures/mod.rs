//! Correlation quantifiers for qubit-qutrit states.

mod bloch;
mod chsh;
mod min;
mod negativity;
mod uin;

pub use bloch::{bloch_fano, BlochFano};
pub use chsh::{
    chsh_max, chsh_max_from_beta, chsh_objective, chsh_starting_points, extract_chsh_observables,
    ChshObservables, ChshResult, AGREEMENT_TOL, LOW_DISCREPANCY_RESTARTS, RANDOM_RESTARTS,
};
pub use min::{min_from_bloch, min_measure, DEGENERATE_MARGINAL};
pub use negativity::{negativity, partial_transpose_qubit};
pub use uin::{qubit_direction_observable, skew_information, uin, uin_from_parts, uin_w_matrix};

use nalgebra::Matrix3;

use crate::gibbs::DensityMatrix;

/// Which quantifiers to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeasureSet {
    pub negativity: bool,
    pub min: bool,
    pub uin: bool,
    pub chsh: bool,
}

impl MeasureSet {
    pub const ALL: MeasureSet = MeasureSet {
        negativity: true,
        min: true,
        uin: true,
        chsh: true,
    };
    pub const NONE: MeasureSet = MeasureSet {
        negativity: false,
        min: false,
        uin: false,
        chsh: false,
    };

    /// Parses a comma separated list of `negativity`, `min`, `uin`, `chsh`
    /// (or `all`).
    pub fn parse(list: &str) -> Option<MeasureSet> {
        let mut set = MeasureSet::NONE;
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "all" => set = MeasureSet::ALL,
                _ => *set.flag_mut(Measure::parse(item)?) = true,
            }
        }
        (set != MeasureSet::NONE).then_some(set)
    }

    fn flag_mut(&mut self, m: Measure) -> &mut bool {
        match m {
            Measure::Negativity => &mut self.negativity,
            Measure::Min => &mut self.min,
            Measure::Uin => &mut self.uin,
            Measure::Chsh => &mut self.chsh,
        }
    }

    pub fn contains(&self, m: Measure) -> bool {
        let mut copy = *self;
        *copy.flag_mut(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Negativity,
    Min,
    Uin,
    Chsh,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Negativity, Measure::Min, Measure::Uin, Measure::Chsh];

    pub fn parse(name: &str) -> Option<Measure> {
        Some(match name {
            "negativity" => Measure::Negativity,
            "min" => Measure::Min,
            "uin" => Measure::Uin,
            "chsh" | "chsh_max" => Measure::Chsh,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Negativity => "negativity",
            Measure::Min => "min",
            Measure::Uin => "uin",
            Measure::Chsh => "chsh",
        }
    }

    pub fn evaluate(&self, rho: &DensityMatrix) -> f64 {
        match self {
            Measure::Negativity => negativity(rho),
            Measure::Min => min_measure(rho),
            Measure::Uin => uin(rho),
            Measure::Chsh => chsh_max(rho).value,
        }
    }
}

/// The four quantifiers for one state. Measures that were not requested hold
/// `NaN`.
#[derive(Debug, Clone)]
pub struct CorrelationReport {
    pub negativity: f64,
    pub min_value: f64,
    pub uin_value: f64,
    pub chsh_max: f64,
    pub chsh_rotation: Matrix3<f64>,
    pub chsh_restarts_agreeing: usize,
}

impl CorrelationReport {
    pub fn value(&self, m: Measure) -> f64 {
        match m {
            Measure::Negativity => self.negativity,
            Measure::Min => self.min_value,
            Measure::Uin => self.uin_value,
            Measure::Chsh => self.chsh_max,
        }
    }
}

pub fn evaluate(rho: &DensityMatrix, which: MeasureSet) -> CorrelationReport {
    let bf = bloch_fano(rho);
    let pick = |on: bool, f: &dyn Fn() -> f64| if on { f() } else { f64::NAN };
    let chsh = which.chsh.then(|| chsh_max_from_beta(&bf.beta_fixed()));
    CorrelationReport {
        negativity: pick(which.negativity, &|| negativity(rho)),
        min_value: pick(which.min, &|| min_from_bloch(&bf)),
        uin_value: pick(which.uin, &|| {
            let w = uin_w_matrix(rho).expect("density matrix is PSD");
            uin_from_parts(&w, &bf.x)
        }),
        chsh_max: chsh.as_ref().map_or(f64::NAN, |c| c.value),
        chsh_rotation: chsh.as_ref().map_or(Matrix3::identity(), |c| c.rotation),
        chsh_restarts_agreeing: chsh.as_ref().map_or(0, |c| c.restarts_agreeing),
    }
}
