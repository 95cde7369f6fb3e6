use crate::gibbs::DensityMatrix;
use crate::linalg::{self, ComplexMatrix};

/// Partial transpose on the qubit: `<ij| rho^{T_a} |kl> = <kj| rho |il>`.
pub fn partial_transpose_qubit(rho: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(6, 6, |r, c| {
        let (i, j) = (r / 3, r % 3);
        let (k, l) = (c / 3, c % 3);
        rho[(3 * k + j, 3 * i + l)]
    })
}

/// Sum of the magnitudes of the negative eigenvalues of the partial
/// transpose. Exactly zero when no eigenvalue is below `-1e-12`.
pub fn negativity(rho: &DensityMatrix) -> f64 {
    let pt = partial_transpose_qubit(rho.matrix());
    let eig = linalg::herm_eigenvalues(&pt).expect("partial transpose of a Hermitian matrix");
    if eig[0] >= -1e-12 {
        return 0.0;
    }
    eig.iter().map(|l| 0.5 * (l.abs() - l)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn product_states_are_ppt() {
        let a = linalg::from_real_diagonal(&[0.7, 0.3]);
        let b = linalg::from_real_diagonal(&[0.5, 0.2, 0.3]);
        assert_eq!(negativity(&DensityMatrix::product(&a, &b).unwrap()), 0.0);
        assert_eq!(negativity(&DensityMatrix::maximally_mixed()), 0.0);
    }

    #[test]
    fn embedded_bell_state() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut psi = [Complex64::new(0.0, 0.0); 6];
        psi[0] = Complex64::new(h, 0.0);
        psi[4] = Complex64::new(h, 0.0);
        let n = negativity(&DensityMatrix::pure(&psi).unwrap());
        assert!((n - 0.5).abs() < 1e-10);
    }

    #[test]
    fn transpose_is_an_involution() {
        let m = ComplexMatrix::from_fn(6, 6, |r, c| Complex64::new(r as f64, c as f64));
        assert_eq!(partial_transpose_qubit(&partial_transpose_qubit(&m)), m);
        // qubit-diagonal blocks stay put
        let pt = partial_transpose_qubit(&m);
        assert_eq!(pt[(1, 2)], m[(1, 2)]);
        assert_eq!(pt[(0, 4)], m[(3, 1)]);
    }
}
