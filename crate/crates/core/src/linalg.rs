//! Dense complex kernels and the fixed spin operators.
//!
//! Everything here works on small (at most 6x6) matrices. Hermitian
//! eigendecompositions are delegated to `nalgebra::SymmetricEigen`
//! (Householder tridiagonalization followed by implicit QR), with the
//! eigenpairs re-sorted into ascending order.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexMatrix = DMatrix<Complex64>;

/// Symmetry tolerance applied by `herm_eig` and friends, relative to
/// `max(1, max|M|)`.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues down to this value are treated as roundoff and clamped to zero
/// by PSD operations.
pub const PSD_CLAMP: f64 = 1e-10;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn identity(n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n, n)
}

pub fn zeros(n: usize) -> ComplexMatrix {
    ComplexMatrix::zeros(n, n)
}

pub fn from_real_diagonal(diag: &[f64]) -> ComplexMatrix {
    let n = diag.len();
    ComplexMatrix::from_fn(n, n, |i, j| if i == j { real(diag[i]) } else { ZERO })
}

/// Pauli matrix for the given axis.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    match axis {
        Axis::X => ComplexMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
        Axis::Y => ComplexMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO]),
        Axis::Z => ComplexMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]),
    }
}

/// Spin-1 operator in the basis m = 1, 0, -1.
pub fn spin1(axis: Axis) -> ComplexMatrix {
    let s = real(std::f64::consts::FRAC_1_SQRT_2);
    let si = I * std::f64::consts::FRAC_1_SQRT_2;
    match axis {
        Axis::X => ComplexMatrix::from_row_slice(3, 3, &[ZERO, s, ZERO, s, ZERO, s, ZERO, s, ZERO]),
        Axis::Y => {
            ComplexMatrix::from_row_slice(3, 3, &[ZERO, -si, ZERO, si, ZERO, -si, ZERO, si, ZERO])
        }
        Axis::Z => from_real_diagonal(&[1.0, 0.0, -1.0]),
    }
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

pub fn dagger(m: &ComplexMatrix) -> ComplexMatrix {
    m.adjoint()
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a * b - b * a
}

pub fn max_abs(m: &ComplexMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

pub fn trace(m: &ComplexMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// Largest entry of `M - M^dagger`; zero for exactly Hermitian input.
pub fn hermiticity_defect(m: &ComplexMatrix) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub fn check_hermitian(m: &ComplexMatrix, tol: f64) -> Result<()> {
    let deviation = hermiticity_defect(m);
    if deviation <= tol * max_abs(m).max(1.0) {
        Ok(())
    } else {
        Err(Error::NotHermitian { deviation })
    }
}

/// Averages `M` with its adjoint. Used to strip roundoff asymmetry before
/// handing a matrix to the eigensolver.
pub fn symmetrize(m: &ComplexMatrix) -> ComplexMatrix {
    (m + m.adjoint()).scale(0.5)
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` pairs with `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// `V f(diag(lambda)) V^dagger`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.nrows();
        let mut scaled = v.clone();
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let w = f(lam);
            for r in 0..n {
                scaled[(r, k)] *= w;
            }
        }
        &scaled * v.adjoint()
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_spectrum(|x| x)
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
pub fn herm_eig(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    check_hermitian(m, HERMITIAN_TOL)?;
    let eig = SymmetricEigen::new(symmetrize(m));
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Ascending eigenvalues only.
pub fn herm_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    check_hermitian(m, HERMITIAN_TOL)?;
    let mut vals: Vec<f64> = symmetrize(m).symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Principal square root of a PSD matrix. Eigenvalues in `[-1e-10, 0)` are
/// clamped to zero; anything more negative is rejected.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = herm_eig(m)?;
    let scale = max_abs(m).max(1.0);
    if let Some(&lowest) = eig.eigenvalues.first() {
        if lowest < -PSD_CLAMP * scale {
            return Err(Error::NotPsd {
                min_eigenvalue: lowest,
            });
        }
    }
    // eigenvalues at the solver's roundoff level would otherwise turn into
    // O(sqrt(eps)) garbage
    let floor = 64.0 * f64::EPSILON * eig.eigenvalues.last().map_or(0.0, |x| x.abs());
    Ok(eig.map_spectrum(|x| if x <= floor { 0.0 } else { x.sqrt() }))
}

/// Sum of absolute eigenvalues.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(herm_eigenvalues(m)?.iter().map(|x| x.abs()).sum())
}

/// `exp(M)` for Hermitian `M` through its spectral decomposition.
pub fn expm_hermitian(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(herm_eig(m)?.map_spectrum(f64::exp))
}

/// Partial trace over the first factor of a `da * db` dimensional operator.
pub fn partial_trace_first(m: &ComplexMatrix, da: usize, db: usize) -> ComplexMatrix {
    assert_eq!(m.nrows(), da * db);
    ComplexMatrix::from_fn(db, db, |j, l| (0..da).map(|a| m[(a * db + j, a * db + l)]).sum())
}

/// Partial trace over the second factor of a `da * db` dimensional operator.
pub fn partial_trace_second(m: &ComplexMatrix, da: usize, db: usize) -> ComplexMatrix {
    assert_eq!(m.nrows(), da * db);
    ComplexMatrix::from_fn(da, da, |i, k| (0..db).map(|b| m[(i * db + b, k * db + b)]).sum())
}
