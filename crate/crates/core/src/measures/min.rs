//! Measurement-induced nonlocality in the Hilbert-Schmidt norm.
//!
//! For a projective qubit measurement along `n`, `rho - Pi(rho)` keeps only
//! the components of `beta` orthogonal to `n`, which gives
//! `||rho - Pi_n(rho)||^2 = (Tr G - n^t G n) / 2` with `G` the Gram matrix of
//! `beta_1..beta_3`. Marginal invariance pins `n` to `x/|x|` unless the qubit
//! marginal is maximally mixed, in which case the worst direction is the
//! smallest eigenvector of `G`.

use nalgebra::SymmetricEigen;

use super::bloch::{bloch_fano, BlochFano};
use crate::gibbs::DensityMatrix;

/// Below this norm the qubit Bloch vector is treated as zero.
pub const DEGENERATE_MARGINAL: f64 = 1e-9;

pub fn min_measure(rho: &DensityMatrix) -> f64 {
    min_from_bloch(&bloch_fano(rho))
}

pub fn min_from_bloch(bf: &BlochFano) -> f64 {
    let g = bf.beta_gram();
    let removed = if bf.x.norm() > DEGENERATE_MARGINAL {
        let n = bf.x.normalize();
        (n.transpose() * g * n)[(0, 0)]
    } else {
        SymmetricEigen::new(g).eigenvalues.min()
    };
    clamp(0.5 * (g.trace() - removed))
}

fn clamp(v: f64) -> f64 {
    if (-1e-12..0.0).contains(&v) {
        0.0
    } else {
        v
    }
}
