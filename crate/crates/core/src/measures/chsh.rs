//! Maximal CHSH value for a qubit-qutrit state.
//!
//! Writing `rho = 1/2 (I (x) beta_0 + sum_i sigma_i (x) beta_i)`, the optimum
//! over dichotomic observables on both sides reduces to
//! `2 max_R sqrt(||(R beta)_1||_1^2 + ||(R beta)_2||_1^2)` over rotations
//! `R`, where `(R beta)_a = sum_i R_ai beta_i`. The rotation is searched by
//! multi-start Nelder-Mead on Z-Y-Z Euler angles.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bloch::bloch_fano;
use crate::error::{Error, Result};
use crate::gibbs::DensityMatrix;
use crate::linalg::{self, Axis, ComplexMatrix};
use crate::optimize::{self, NelderMeadOptions};

pub const LOW_DISCREPANCY_RESTARTS: usize = 24;
pub const RANDOM_RESTARTS: usize = 8;
pub const RESTART_SEED: u64 = 0x0C45_4B5E;
/// Restarts whose value is within this of the best count as agreeing.
pub const AGREEMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct ChshResult {
    pub value: f64,
    pub rotation: Matrix3<f64>,
    /// Number of restarts that reached the best value within `AGREEMENT_TOL`.
    pub restarts_agreeing: usize,
}

/// Dichotomic observables realizing the CHSH value for a given rotation.
#[derive(Debug, Clone)]
pub struct ChshObservables {
    pub a0: ComplexMatrix,
    pub a1: ComplexMatrix,
    pub b0: ComplexMatrix,
    pub b1: ComplexMatrix,
}

impl ChshObservables {
    /// `A0 (x) (B0 + B1) + A1 (x) (B0 - B1)`.
    pub fn bell_operator(&self) -> ComplexMatrix {
        linalg::kron(&self.a0, &(&self.b0 + &self.b1)) + linalg::kron(&self.a1, &(&self.b0 - &self.b1))
    }

    pub fn expectation(&self, rho: &DensityMatrix) -> f64 {
        linalg::trace(&(rho.matrix() * self.bell_operator())).re
    }
}

fn trace_norm3(m: &Matrix3<Complex64>) -> f64 {
    m.symmetric_eigenvalues().iter().map(|x| x.abs()).sum()
}

fn rotated_beta(beta: &[Matrix3<Complex64>; 3], row: &[f64]) -> Matrix3<Complex64> {
    beta[0] * Complex64::new(row[0], 0.0)
        + beta[1] * Complex64::new(row[1], 0.0)
        + beta[2] * Complex64::new(row[2], 0.0)
}

/// `2 sqrt(||(R beta)_1||^2 + ||(R beta)_2||^2)` for a given rotation.
pub fn chsh_objective(beta: &[Matrix3<Complex64>; 3], r: &Matrix3<f64>) -> f64 {
    let n1 = trace_norm3(&rotated_beta(beta, &[r[(0, 0)], r[(0, 1)], r[(0, 2)]]));
    let n2 = trace_norm3(&rotated_beta(beta, &[r[(1, 0)], r[(1, 1)], r[(1, 2)]]));
    2.0 * (n1 * n1 + n2 * n2).sqrt()
}

pub fn chsh_starting_points() -> Vec<[f64; 3]> {
    use std::f64::consts::{PI, TAU};
    let mut starts = optimize::halton_euler_seeds(LOW_DISCREPANCY_RESTARTS);
    let mut rng = ChaCha8Rng::seed_from_u64(RESTART_SEED);
    starts.extend((0..RANDOM_RESTARTS).map(|_| {
        [rng.gen_range(0.0..TAU), rng.gen_range(0.0..PI), rng.gen_range(0.0..TAU)]
    }));
    starts
}

pub fn chsh_max(rho: &DensityMatrix) -> ChshResult {
    chsh_max_from_beta(&bloch_fano(rho).beta_fixed())
}

pub fn chsh_max_from_beta(beta: &[Matrix3<Complex64>; 3]) -> ChshResult {
    let scale: f64 = beta.iter().map(|b| b.norm()).sum();
    if scale == 0.0 {
        return ChshResult {
            value: 0.0,
            rotation: Matrix3::identity(),
            restarts_agreeing: LOW_DISCREPANCY_RESTARTS + RANDOM_RESTARTS,
        };
    }
    let opts = NelderMeadOptions::default();
    let objective = |angles: &[f64; 3]| -chsh_objective(beta, &optimize::euler_zyz(angles));
    let results: Vec<_> = chsh_starting_points()
        .into_iter()
        .map(|s| optimize::nelder_mead(objective, s, &opts))
        .collect();
    let best = results
        .iter()
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .expect("at least one restart");
    let value = -best.value;
    let restarts_agreeing = results
        .iter()
        .filter(|m| (-m.value - value).abs() <= AGREEMENT_TOL)
        .count();
    ChshResult {
        value,
        rotation: optimize::euler_zyz(&best.x),
        restarts_agreeing,
    }
}

/// `V sign(Lambda) V^dagger` with zero eigenvalues mapped to `+1`.
fn sign_aligned(m: &ComplexMatrix) -> ComplexMatrix {
    let eig = linalg::herm_eig(m).expect("rotated beta is Hermitian");
    eig.map_spectrum(|l| if l < 0.0 { -1.0 } else { 1.0 })
}

fn direction_observable(n: &Vector3<f64>) -> ComplexMatrix {
    let c = |v: f64| Complex64::new(v, 0.0);
    linalg::pauli(Axis::X) * c(n[0]) + linalg::pauli(Axis::Y) * c(n[1]) + linalg::pauli(Axis::Z) * c(n[2])
}

/// Builds the observables attaining the CHSH value for `rotation`.
///
/// Bob's settings are the sign-aligned involutions of `(R beta)_1` and
/// `(R beta)_2`. Alice's directions are `cos t e1 +- sin t e2` with `e1, e2`
/// the first two rows of `R` and `tan t = ||(R beta)_2||_1 / ||(R beta)_1||_1`.
pub fn extract_chsh_observables(rho: &DensityMatrix, rotation: &Matrix3<f64>) -> Result<ChshObservables> {
    let (defect, det) = optimize::rotation_defect(rotation);
    if defect > 1e-9 || (det - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidRotation { defect, det });
    }
    let bf = bloch_fano(rho);
    let row = |a: usize| Vector3::new(rotation[(a, 0)], rotation[(a, 1)], rotation[(a, 2)]);
    let rotated = |a: usize| {
        let r = row(a);
        let c = |v: f64| Complex64::new(v, 0.0);
        linalg::symmetrize(&(&bf.beta[1] * c(r[0]) + &bf.beta[2] * c(r[1]) + &bf.beta[3] * c(r[2])))
    };
    let (m1, m2) = (rotated(0), rotated(1));
    let n1 = linalg::trace_norm(&m1)?;
    let n2 = linalg::trace_norm(&m2)?;
    let norm = n1.hypot(n2);
    let (cos_t, sin_t) = if norm > 0.0 { (n1 / norm, n2 / norm) } else { (1.0, 0.0) };
    let (e1, e2) = (row(0), row(1));
    Ok(ChshObservables {
        a0: direction_observable(&(e1 * cos_t + e2 * sin_t)),
        a1: direction_observable(&(e1 * cos_t - e2 * sin_t)),
        b0: sign_aligned(&m1),
        b1: sign_aligned(&m2),
    })
}
