//! The axially symmetric qubit-qutrit Hamiltonian.
//!
//! Basis ordering is qubit-major with the qutrit projection descending:
//! `|up,1>, |up,0>, |up,-1>, |down,1>, |down,0>, |down,-1>`. In this basis
//! the total `S_z` is diagonal and `H` splits into two 1x1 corners and two
//! 2x2 blocks on index pairs (1,3) and (2,4).

use num_complex::Complex64;

use crate::linalg::{self, Axis, ComplexMatrix};

/// The ten real couplings of the model Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ModelParams {
    /// Longitudinal field on the qubit.
    pub b1: f64,
    /// Longitudinal field on the qutrit.
    pub b2: f64,
    /// Transverse XXZ exchange.
    pub j: f64,
    /// Longitudinal exchange.
    pub jz: f64,
    /// Uniaxial single-ion anisotropy.
    pub k: f64,
    /// Planar single-ion anisotropy.
    pub k1: f64,
    /// Biquadratic anisotropy.
    pub k2: f64,
    /// Dzyaloshinskii-Moriya coupling along z.
    pub dz: f64,
    /// Three-spin coupling (symmetric quadrupole form).
    pub gamma: f64,
    /// Three-spin coupling (antisymmetric quadrupole form).
    pub lambda: f64,
}

/// Names accepted by [`ModelParams::get`] and [`ModelParams::set`], in the
/// order used for CSV output.
pub const PARAM_NAMES: [&str; 10] = ["B1", "B2", "J", "Jz", "K", "K1", "K2", "Dz", "Gamma", "Lambda"];

impl ModelParams {
    pub fn to_array(&self) -> [f64; 10] {
        [
            self.b1, self.b2, self.j, self.jz, self.k, self.k1, self.k2, self.dz, self.gamma,
            self.lambda,
        ]
    }

    pub fn from_array(v: [f64; 10]) -> Self {
        let [b1, b2, j, jz, k, k1, k2, dz, gamma, lambda] = v;
        Self {
            b1,
            b2,
            j,
            jz,
            k,
            k1,
            k2,
            dz,
            gamma,
            lambda,
        }
    }

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "B1" => &mut self.b1,
            "B2" => &mut self.b2,
            "J" => &mut self.j,
            "Jz" => &mut self.jz,
            "K" => &mut self.k,
            "K1" => &mut self.k1,
            "K2" => &mut self.k2,
            "Dz" => &mut self.dz,
            "Gamma" => &mut self.gamma,
            "Lambda" => &mut self.lambda,
            _ => return None,
        })
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        let mut copy = *self;
        copy.slot(name).map(|v| *v)
    }

    /// Returns `false` if `name` is not a coupling.
    pub fn set(&mut self, name: &str, value: f64) -> bool {
        match self.slot(name) {
            Some(v) => {
                *v = value;
                true
            }
            None => false,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }
}

/// Closed-form block entries and spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockQuantities {
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    pub h4: f64,
    pub g1: Complex64,
    pub g2: Complex64,
    pub r1: f64,
    pub r2: f64,
    /// `E1..E6`; `e[1], e[2]` come from the (h1, h3) block with the `+R1`
    /// root first, `e[3], e[4]` likewise from (h2, h4).
    pub e: [f64; 6],
}

pub fn block_quantities(p: &ModelParams) -> BlockQuantities {
    let h1 = p.b1 / 2.0 + 2.0 * p.k1;
    let h4 = -p.b1 / 2.0 + 2.0 * p.k1;
    let common = -p.jz / 2.0 + p.k + p.k1;
    let h2 = p.b1 / 2.0 - p.b2 + common + p.k2 / 2.0;
    let h3 = -p.b1 / 2.0 + p.b2 + common - p.k2 / 2.0;
    let sqrt2 = std::f64::consts::SQRT_2;
    let g1 = Complex64::new(p.j + p.gamma, p.dz + p.lambda) / sqrt2;
    let g2 = Complex64::new(p.j - p.gamma, p.dz - p.lambda) / sqrt2;
    let r1 = ((h1 - h3).powi(2) + 4.0 * g1.norm_sqr()).sqrt();
    let r2 = ((h2 - h4).powi(2) + 4.0 * g2.norm_sqr()).sqrt();
    let corner = p.jz / 2.0 + p.k + p.k1;
    let split = p.b1 / 2.0 + p.b2 + p.k2 / 2.0;
    let e = [
        corner + split,
        0.5 * (h1 + h3 + r1),
        0.5 * (h1 + h3 - r1),
        0.5 * (h2 + h4 + r2),
        0.5 * (h2 + h4 - r2),
        corner - split,
    ];
    BlockQuantities {
        h1,
        h2,
        h3,
        h4,
        g1,
        g2,
        r1,
        r2,
        e,
    }
}

/// `H` assembled term by term from Kronecker products of spin operators.
pub fn hamiltonian_from_operators(p: &ModelParams) -> ComplexMatrix {
    let half = Complex64::new(0.5, 0.0);
    let [sx, sy, sz] = Axis::ALL.map(|a| linalg::pauli(a) * half);
    let [qx, qy, qz] = Axis::ALL.map(linalg::spin1);
    let i2 = linalg::identity(2);
    let i3 = linalg::identity(3);
    let k = linalg::kron;
    let c = |x: f64| Complex64::new(x, 0.0);

    let anti = |a: &ComplexMatrix, b: &ComplexMatrix| a * b + b * a;
    let xz = anti(&qx, &qz);
    let yz = anti(&qy, &qz);
    let qz2 = &qz * &qz;

    let mut h = k(&sz, &i3) * c(p.b1);
    h += k(&i2, &qz) * c(p.b2);
    h += (k(&sx, &qx) + k(&sy, &qy)) * c(p.j);
    h += k(&sz, &qz) * c(p.jz);
    h += k(&i2, &qz2) * c(p.k);
    h += k(&i2, &(&qx * &qx + &qy * &qy)) * c(p.k1);
    h += k(&sz, &qz2) * c(p.k2);
    h += (k(&sx, &qy) - k(&sy, &qx)) * c(p.dz);
    h += (k(&sx, &xz) + k(&sy, &yz)) * c(p.gamma);
    h += (k(&sx, &yz) - k(&sy, &xz)) * c(p.lambda);
    h
}

/// `H` assembled from the closed-form block entries.
pub fn hamiltonian_from_blocks(p: &ModelParams) -> ComplexMatrix {
    let q = block_quantities(p);
    let mut h = linalg::zeros(6);
    let c = |x: f64| Complex64::new(x, 0.0);
    h[(0, 0)] = c(q.e[0]);
    h[(5, 5)] = c(q.e[5]);
    h[(1, 1)] = c(q.h1);
    h[(2, 2)] = c(q.h2);
    h[(3, 3)] = c(q.h3);
    h[(4, 4)] = c(q.h4);
    h[(1, 3)] = q.g1;
    h[(3, 1)] = q.g1.conj();
    h[(2, 4)] = q.g2;
    h[(4, 2)] = q.g2.conj();
    h
}

/// Total z-projection `s_z (x) I3 + I2 (x) S_z`.
pub fn total_sz() -> ComplexMatrix {
    let half = Complex64::new(0.5, 0.0);
    linalg::kron(&(linalg::pauli(Axis::Z) * half), &linalg::identity(3))
        + linalg::kron(&linalg::identity(2), &linalg::spin1(Axis::Z))
}

/// Largest entry of `[H, S_z^total]`.
pub fn check_axial_symmetry(h: &ComplexMatrix) -> f64 {
    linalg::max_abs(&linalg::commutator(h, &total_sz()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{from_real_diagonal, max_abs_diff, pauli, trace};
    use crate::presets::FIG1_BASE;

    fn fig1_jz1() -> ModelParams {
        ModelParams { jz: 1.0, ..FIG1_BASE }
    }

    #[test]
    fn zero_params_give_zero_hamiltonian() {
        let p = ModelParams::default();
        assert_eq!(linalg::max_abs(&hamiltonian_from_operators(&p)), 0.0);
        assert_eq!(linalg::max_abs(&hamiltonian_from_blocks(&p)), 0.0);
        let q = block_quantities(&p);
        assert_eq!((q.h1, q.h2, q.h3, q.h4, q.r1, q.r2), (0.0, 0.0, 0.0, 0.0, 0.0, 0.0));
        assert_eq!(q.e, [0.0; 6]);
        assert_eq!(q.g1.norm() + q.g2.norm(), 0.0);
    }

    #[test]
    fn qubit_field_only() {
        let p = ModelParams { b1: 1.0, ..Default::default() };
        let expect = from_real_diagonal(&[0.5, 0.5, 0.5, -0.5, -0.5, -0.5]);
        assert!(max_abs_diff(&hamiltonian_from_operators(&p), &expect) < 1e-15);
    }

    #[test]
    fn transverse_exchange_only() {
        let p = ModelParams { j: 1.0, ..Default::default() };
        let q = block_quantities(&p);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((q.g1 - Complex64::new(r, 0.0)).norm() < 1e-15);
        assert!((q.g2 - Complex64::new(r, 0.0)).norm() < 1e-15);
        assert_eq!((q.h1, q.h2, q.h3, q.h4), (0.0, 0.0, 0.0, 0.0));
        assert_eq!((q.e[0], q.e[5]), (0.0, 0.0));
    }

    #[test]
    fn fig1_off_diagonal_couplings() {
        let q = block_quantities(&fig1_jz1());
        let s = std::f64::consts::SQRT_2;
        assert!((q.g1 - Complex64::new(-0.87, 0.63) / s).norm() < 1e-15);
        assert!((q.g2 - Complex64::new(0.87, 0.01) / s).norm() < 1e-15);
    }

    #[test]
    fn fig1_two_paths_agree() {
        let p = fig1_jz1();
        let a = hamiltonian_from_operators(&p);
        let b = hamiltonian_from_blocks(&p);
        assert!(max_abs_diff(&a, &b) < 1e-12);
        let spectrum = linalg::herm_eigenvalues(&a).unwrap();
        let mut closed = block_quantities(&p).e.to_vec();
        closed.sort_by(f64::total_cmp);
        for (x, y) in spectrum.iter().zip(&closed) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn block_sum_rules() {
        let q = block_quantities(&fig1_jz1());
        assert!((q.e[1] + q.e[2] - q.h1 - q.h3).abs() < 1e-12);
        assert!((q.e[3] + q.e[4] - q.h2 - q.h4).abs() < 1e-12);
        let p = fig1_jz1();
        let h = hamiltonian_from_operators(&p);
        assert!((trace(&h).re - 4.0 * (p.k + 2.0 * p.k1)).abs() < 1e-12);
    }

    #[test]
    fn symmetry_check() {
        let h = hamiltonian_from_operators(&fig1_jz1());
        assert!(check_axial_symmetry(&h) <= 1e-13);
        assert_eq!(check_axial_symmetry(&linalg::zeros(6)), 0.0);
        let broken = &h + linalg::kron(&pauli(Axis::X), &linalg::identity(3));
        assert!(check_axial_symmetry(&broken) > 0.1);
    }

    #[test]
    fn param_names_round_trip() {
        let mut p = ModelParams::default();
        for (i, name) in PARAM_NAMES.iter().enumerate() {
            assert!(p.set(name, i as f64 + 1.0));
        }
        assert_eq!(p.to_array(), [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0]);
        assert_eq!(p.get("Gamma"), Some(9.0));
        assert!(!p.set("T", 1.0));
        assert_eq!(p.get("bogus"), None);
    }
}
