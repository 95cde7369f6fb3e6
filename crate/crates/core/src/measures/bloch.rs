use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use crate::gibbs::DensityMatrix;
use crate::linalg::{self, Axis, ComplexMatrix};

/// Local Bloch vectors, correlation matrix and the qutrit-side operator
/// Schmidt components of a qubit-qutrit state.
#[derive(Debug, Clone)]
pub struct BlochFano {
    /// `x_i = Tr[rho (sigma_i (x) I3)]`.
    pub x: Vector3<f64>,
    /// `y_j = Tr[rho (I2 (x) S_j)]` with spin-1 `S_j`.
    pub y: Vector3<f64>,
    /// `t_ij = Tr[rho (sigma_i (x) S_j)]`.
    pub tcorr: Matrix3<f64>,
    /// `beta_i = Tr_A[rho (sigma_i (x) I3)]` with `sigma_0 = I2`; `beta[0]` is
    /// the qutrit marginal.
    pub beta: [ComplexMatrix; 4],
}

fn expectation(rho: &ComplexMatrix, op: &ComplexMatrix) -> f64 {
    // Tr(rho op) without forming the product
    rho.iter()
        .zip(op.transpose().iter())
        .map(|(a, b)| a * b)
        .sum::<Complex64>()
        .re
}

/// `Tr_A[rho (sigma (x) I3)]`, entry `(j, l) = sum_ab rho[(a,j),(b,l)] sigma[b,a]`.
fn qubit_weighted_trace(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(3, 3, |j, l| {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in 0..2 {
            for b in 0..2 {
                acc += rho[(3 * a + j, 3 * b + l)] * sigma[(b, a)];
            }
        }
        acc
    })
}

pub fn bloch_fano(rho: &DensityMatrix) -> BlochFano {
    let m = rho.matrix();
    let i2 = linalg::identity(2);
    let i3 = linalg::identity(3);
    let paulis = Axis::ALL.map(linalg::pauli);
    let spins = Axis::ALL.map(linalg::spin1);

    let x = Vector3::from_fn(|i, _| expectation(m, &linalg::kron(&paulis[i], &i3)));
    let y = Vector3::from_fn(|j, _| expectation(m, &linalg::kron(&i2, &spins[j])));
    let tcorr = Matrix3::from_fn(|i, j| expectation(m, &linalg::kron(&paulis[i], &spins[j])));
    let beta = [
        linalg::symmetrize(&qubit_weighted_trace(m, &i2)),
        linalg::symmetrize(&qubit_weighted_trace(m, &paulis[0])),
        linalg::symmetrize(&qubit_weighted_trace(m, &paulis[1])),
        linalg::symmetrize(&qubit_weighted_trace(m, &paulis[2])),
    ];
    BlochFano { x, y, tcorr, beta }
}

impl BlochFano {
    /// Gram matrix `G_kl = Tr(beta_k beta_l)`, k, l = 1..3.
    ///
    /// Equals `X X^t + T_full T_full^t` where `T_full` is the correlation
    /// matrix against a complete orthonormal traceless qutrit basis and `X`
    /// carries the identity component `x / sqrt(3)`.
    pub fn beta_gram(&self) -> Matrix3<f64> {
        Matrix3::from_fn(|k, l| {
            let (a, b) = (&self.beta[k + 1], &self.beta[l + 1]);
            a.iter().zip(b.transpose().iter()).map(|(p, q)| p * q).sum::<Complex64>().re
        })
    }

    /// `beta_i` as fixed-size matrices, i = 1..3.
    pub fn beta_fixed(&self) -> [Matrix3<Complex64>; 3] {
        [1, 2, 3].map(|i| Matrix3::from_fn(|r, c| self.beta[i][(r, c)]))
    }
}
