//! Thermal states `exp(-H/T) / Z` (units with `k_B = 1`).
//!
//! The analytic path evaluates the closed-form matrix elements block by
//! block. Both paths subtract the lowest eigenvalue before exponentiating, so
//! every Boltzmann factor lies in `(0, 1]` and `Z` is carried as `ln Z`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::model::{self, BlockQuantities, ModelParams};

/// Below this value of `R / 2T` the block factor switches to its Taylor
/// series.
pub const SERIES_THRESHOLD: f64 = 1e-6;

/// Eigenvalues within this distance of the minimum count as ground states.
pub const GROUND_DEGENERACY_TOL: f64 = 1e-9;

/// A 6x6 density matrix in the fixed product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub const DIM: usize = 6;

    /// Validates trace, hermiticity and positivity.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if m.shape() != (Self::DIM, Self::DIM) {
            return Err(Error::Dimension {
                expected: "6x6".into(),
                got: format!("{}x{}", m.nrows(), m.ncols()),
            });
        }
        linalg::check_hermitian(&m, 1e-12)?;
        let tr = linalg::trace(&m);
        if (tr - Complex64::new(1.0, 0.0)).norm() > 1e-10 {
            return Err(Error::Config(format!("density matrix trace is {tr}, expected 1")));
        }
        let lowest = linalg::herm_eigenvalues(&m)?[0];
        if lowest < -1e-10 {
            return Err(Error::NotPsd {
                min_eigenvalue: lowest,
            });
        }
        Ok(Self(linalg::symmetrize(&m)))
    }

    /// Normalizes a Hermitian PSD operator to unit trace.
    pub fn from_unnormalized(m: ComplexMatrix) -> Result<Self> {
        let tr = linalg::trace(&m).re;
        Self::new(m / Complex64::new(tr, 0.0))
    }

    pub fn maximally_mixed() -> Self {
        Self(linalg::identity(Self::DIM) / Complex64::new(Self::DIM as f64, 0.0))
    }

    /// `|psi><psi|` for a normalized or unnormalized 6-vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let v = ComplexMatrix::from_column_slice(psi.len(), 1, psi);
        Self::from_unnormalized(&v * v.adjoint())
    }

    pub fn product(rho_a: &ComplexMatrix, rho_b: &ComplexMatrix) -> Result<Self> {
        Self::new(linalg::kron(rho_a, rho_b))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// `U rho U^dagger`.
    pub fn conjugate(&self, u: &ComplexMatrix) -> Result<Self> {
        Self::new(u * &self.0 * u.adjoint())
    }

    /// Trace distance `||a - b||_1 / 2`.
    pub fn trace_distance(&self, other: &Self) -> f64 {
        0.5 * linalg::trace_norm(&(&self.0 - &other.0)).expect("difference of Hermitian matrices")
    }
}

/// Nonzero entries of the thermal state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GibbsElements {
    pub p1: f64,
    pub p6: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub u: Complex64,
    pub v: Complex64,
    /// `ln Z`. `Z` itself overflows for low `T` and negative energies.
    pub ln_z: f64,
}

impl GibbsElements {
    pub fn partition_function(&self) -> f64 {
        self.ln_z.exp()
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let c = |x: f64| Complex64::new(x, 0.0);
        let mut m = linalg::zeros(6);
        m[(0, 0)] = c(self.p1);
        m[(1, 1)] = c(self.a);
        m[(2, 2)] = c(self.b);
        m[(3, 3)] = c(self.c);
        m[(4, 4)] = c(self.d);
        m[(5, 5)] = c(self.p6);
        m[(1, 3)] = self.u;
        m[(3, 1)] = self.u.conj();
        m[(2, 4)] = self.v;
        m[(4, 2)] = self.v.conj();
        m
    }
}

fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTemperature(t))
    }
}

/// `(1 - exp(-2x)) / (2x)`, i.e. `exp(-x) sinh(x) / x`, for `x >= 0`.
fn damped_sinhc(x: f64) -> f64 {
    if x < SERIES_THRESHOLD {
        1.0 - x + 2.0 * x * x / 3.0
    } else {
        -(-2.0 * x).exp_m1() / (2.0 * x)
    }
}

/// Diagonal pair and coherence of one 2x2 block `[[hp, g], [g*, hq]]`,
/// scaled by `exp(E_min / T)`.
struct BlockWeights {
    upper: f64,
    lower: f64,
    coherence: Complex64,
    total: f64,
}

fn block_weights(hp: f64, hq: f64, g: Complex64, r: f64, e_min: f64, t: f64) -> BlockWeights {
    let e_low = 0.5 * (hp + hq - r);
    let e_high = 0.5 * (hp + hq + r);
    let w_low = (-(e_low - e_min) / t).exp();
    let w_high = (-(e_high - e_min) / t).exp();
    // exp(-(mean - E_min)/T) * cosh(R/2T) and * sinh(R/2T)/R
    let cosh_part = 0.5 * (w_low + w_high);
    let sinh_over_r = w_low * damped_sinhc(r / (2.0 * t)) / (2.0 * t);
    BlockWeights {
        upper: cosh_part + (hq - hp) * sinh_over_r,
        lower: cosh_part + (hp - hq) * sinh_over_r,
        coherence: -2.0 * g * sinh_over_r,
        total: w_low + w_high,
    }
}

/// Closed-form thermal matrix elements.
pub fn gibbs_elements(p: &ModelParams, t: f64) -> Result<GibbsElements> {
    check_temperature(t)?;
    let q: BlockQuantities = model::block_quantities(p);
    let e_min = q.e.iter().copied().fold(f64::INFINITY, f64::min);
    for e in q.e {
        let x = (e - e_min) / t;
        if !x.is_finite() {
            return Err(Error::OverflowGuard(x));
        }
    }
    let w1 = (-(q.e[0] - e_min) / t).exp();
    let w6 = (-(q.e[5] - e_min) / t).exp();
    let blk1 = block_weights(q.h1, q.h3, q.g1, q.r1, e_min, t);
    let blk2 = block_weights(q.h2, q.h4, q.g2, q.r2, e_min, t);
    let z_scaled = w1 + w6 + blk1.total + blk2.total;
    if !(z_scaled.is_finite() && z_scaled > 0.0) {
        return Err(Error::OverflowGuard(z_scaled));
    }
    Ok(GibbsElements {
        p1: w1 / z_scaled,
        p6: w6 / z_scaled,
        a: blk1.upper / z_scaled,
        c: blk1.lower / z_scaled,
        u: blk1.coherence / z_scaled,
        b: blk2.upper / z_scaled,
        d: blk2.lower / z_scaled,
        v: blk2.coherence / z_scaled,
        ln_z: z_scaled.ln() - e_min / t,
    })
}

/// Thermal state from the closed-form element formulas.
pub fn gibbs_analytic(p: &ModelParams, t: f64) -> Result<DensityMatrix> {
    let el = gibbs_elements(p, t)?;
    Ok(DensityMatrix(el.to_matrix()))
}

/// The partition function written as a sum of three `cosh` terms, evaluated
/// without rescaling. Overflows for large `|E| / T`.
pub fn partition_function_cosh_form(p: &ModelParams, t: f64) -> Result<f64> {
    check_temperature(t)?;
    let q = model::block_quantities(p);
    let corner = ((p.b1 + 2.0 * p.b2 + p.k2) / (2.0 * t)).cosh()
        * (-(p.jz + 2.0 * p.k + 2.0 * p.k1) / (2.0 * t)).exp();
    let blk1 = (q.r1 / (2.0 * t)).cosh() * (-(q.h1 + q.h3) / (2.0 * t)).exp();
    let blk2 = (q.r2 / (2.0 * t)).cosh() * (-(q.h2 + q.h4) / (2.0 * t)).exp();
    Ok(2.0 * (corner + blk1 + blk2))
}

/// Oracle path: shifted matrix exponential of the operator-built Hamiltonian,
/// normalized by its trace.
pub fn gibbs_numeric(p: &ModelParams, t: f64) -> Result<DensityMatrix> {
    check_temperature(t)?;
    gibbs_of_hamiltonian(&model::hamiltonian_from_operators(p), t)
}

/// `exp(-H/T) / Tr exp(-H/T)` for an arbitrary Hermitian `H`.
pub fn gibbs_of_hamiltonian(h: &ComplexMatrix, t: f64) -> Result<DensityMatrix> {
    check_temperature(t)?;
    let eig = linalg::herm_eig(h)?;
    let e_min = eig.eigenvalues[0];
    let unnormalized = eig.map_spectrum(|e| (-(e - e_min) / t).exp());
    let z = linalg::trace(&unnormalized).re;
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::OverflowGuard(z));
    }
    Ok(DensityMatrix(linalg::symmetrize(&(unnormalized / Complex64::new(z, 0.0)))))
}

/// Equal-weight mixture of the ground-state eigenvectors; the `T -> 0+`
/// limit of the thermal state.
pub fn ground_state_limit(p: &ModelParams) -> DensityMatrix {
    let h = model::hamiltonian_from_operators(p);
    ground_state_of_hamiltonian(&h).expect("model Hamiltonian is Hermitian")
}

pub fn ground_state_of_hamiltonian(h: &ComplexMatrix) -> Result<DensityMatrix> {
    let eig = linalg::herm_eig(h)?;
    let e_min = eig.eigenvalues[0];
    let degeneracy = eig
        .eigenvalues
        .iter()
        .filter(|&&e| e - e_min <= GROUND_DEGENERACY_TOL)
        .count();
    let w = 1.0 / degeneracy as f64;
    Ok(DensityMatrix(linalg::symmetrize(&eig.map_spectrum(|e| {
        if e - e_min <= GROUND_DEGENERACY_TOL {
            w
        } else {
            0.0
        }
    }))))
}
