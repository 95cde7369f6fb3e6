use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use num_complex::Complex64;

use super::bloch::bloch_fano;
use super::min::DEGENERATE_MARGINAL;
use crate::error::Result;
use crate::gibbs::DensityMatrix;
use crate::linalg::{self, Axis, ComplexMatrix};

/// Wigner-Yanase skew information `-1/2 Tr([sqrt(rho), K]^2)`.
pub fn skew_information(rho: &DensityMatrix, k: &ComplexMatrix) -> Result<f64> {
    linalg::check_hermitian(k, linalg::HERMITIAN_TOL)?;
    let s = linalg::sqrt_psd(rho.matrix())?;
    Ok(skew_with_sqrt(&s, k))
}

fn skew_with_sqrt(sqrt_rho: &ComplexMatrix, k: &ComplexMatrix) -> f64 {
    let c = linalg::commutator(sqrt_rho, k);
    (-0.5 * linalg::trace(&(&c * &c)).re).max(0.0)
}

/// `W_ij = Tr[sqrt(rho) (sigma_i (x) I3) sqrt(rho) (sigma_j (x) I3)]`.
pub fn uin_w_matrix(rho: &DensityMatrix) -> Result<Matrix3<f64>> {
    let s = linalg::sqrt_psd(rho.matrix())?;
    let i3 = linalg::identity(3);
    let sandwiched = Axis::ALL.map(|a| &s * linalg::kron(&linalg::pauli(a), &i3));
    Ok(Matrix3::from_fn(|i, j| {
        let (p, q) = (&sandwiched[i], &sandwiched[j]);
        p.iter().zip(q.transpose().iter()).map(|(a, b)| a * b).sum::<Complex64>().re
    }))
}

/// Uncertainty-induced nonlocality, maximizing the skew information of
/// `n.sigma (x) I3` over directions compatible with the qubit marginal.
pub fn uin(rho: &DensityMatrix) -> f64 {
    let w = uin_w_matrix(rho).expect("density matrix is PSD");
    let x = bloch_fano(rho).x;
    uin_from_parts(&w, &x)
}

pub fn uin_from_parts(w: &Matrix3<f64>, x: &Vector3<f64>) -> f64 {
    let kept = if x.norm() > DEGENERATE_MARGINAL {
        let n = x.normalize();
        (n.transpose() * w * n)[(0, 0)]
    } else {
        SymmetricEigen::new(*w).eigenvalues.min()
    };
    let v = 1.0 - kept;
    if (-1e-12..0.0).contains(&v) {
        0.0
    } else {
        v
    }
}

/// `n.sigma (x) I3` as a 6x6 operator.
pub fn qubit_direction_observable(n: &Vector3<f64>) -> ComplexMatrix {
    let c = |v: f64| Complex64::new(v, 0.0);
    let k = linalg::pauli(Axis::X) * c(n[0]) + linalg::pauli(Axis::Y) * c(n[1]) + linalg::pauli(Axis::Z) * c(n[2]);
    linalg::kron(&k, &linalg::identity(3))
}
