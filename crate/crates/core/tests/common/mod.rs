#![allow(dead_code)]

use nalgebra::{DMatrix, Vector3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qqcorr::gibbs::{gibbs_numeric, DensityMatrix};
use qqcorr::linalg::{self, Axis, ComplexMatrix};
use qqcorr::model::ModelParams;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Box-Muller standard normal.
pub fn normal(r: &mut impl Rng) -> f64 {
    let u1: f64 = 1.0 - r.gen::<f64>();
    let u2: f64 = r.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn random_params(r: &mut impl Rng) -> ModelParams {
    ModelParams::from_array(std::array::from_fn(|_| r.gen_range(-3.0..=3.0)))
}

pub fn random_temperature(r: &mut impl Rng) -> f64 {
    r.gen_range(0.05..=20.0)
}

/// Log-uniform in `[0.05, 20]`, so that strongly correlated low-T states
/// are not swamped by nearly mixed ones.
pub fn random_temperature_log(r: &mut impl Rng) -> f64 {
    (r.gen_range(0.05f64.ln()..=20f64.ln())).exp()
}

pub fn ginibre(r: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    DMatrix::from_fn(rows, cols, |_, _| Complex64::new(normal(r), normal(r)))
}

pub fn random_unitary(r: &mut impl Rng, n: usize) -> ComplexMatrix {
    let qr = ginibre(r, n, n).qr();
    let (q, rr) = (qr.q(), qr.r());
    let phases = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            rr[(i, i)] / rr[(i, i)].norm()
        } else {
            c(0.0)
        }
    });
    q * phases
}

pub fn random_vector(r: &mut impl Rng, n: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n).map(|_| Complex64::new(normal(r), normal(r))).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_pure(r: &mut impl Rng) -> DensityMatrix {
    DensityMatrix::pure(&random_vector(r, 6)).unwrap()
}

/// `G G^dag / Tr` with `G` a 6 x rank Ginibre matrix.
pub fn random_mixed(r: &mut impl Rng, rank: usize) -> DensityMatrix {
    let g = ginibre(r, 6, rank);
    DensityMatrix::from_unnormalized(&g * g.adjoint()).unwrap()
}

/// Random state from the full-rank, low-rank and pure families.
pub fn random_state(r: &mut impl Rng) -> DensityMatrix {
    match r.gen_range(0..4) {
        0 => random_pure(r),
        1 => random_mixed(r, 2),
        2 => {
            let rank = r.gen_range(3..=6);
            random_mixed(r, rank)
        }
        _ => {
            let p: f64 = r.gen();
            let pure = random_pure(r).into_matrix();
            DensityMatrix::from_unnormalized(pure * c(p) + random_mixed(r, 6).into_matrix() * c(1.0 - p))
                .unwrap()
        }
    }
}

/// `(|0>|a> + |1>|b>)/sqrt2`, with `a`, `b` a random orthonormal pair, mixed
/// with `I/2 (x) sigma`. The qubit marginal is exactly `I/2`.
pub fn unbiased_qubit_state(r: &mut impl Rng) -> DensityMatrix {
    let u = random_unitary(r, 3);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = vec![c(0.0); 6];
    for m in 0..3 {
        psi[m] = u[(m, 0)] * h;
        psi[3 + m] = u[(m, 1)] * h;
    }
    let pure = DensityMatrix::pure(&psi).unwrap().into_matrix();
    let g = ginibre(r, 3, 3);
    let sigma = &g * g.adjoint();
    let sigma = &sigma / linalg::trace(&sigma);
    let noise = linalg::kron(&(linalg::identity(2) * c(0.5)), &sigma);
    let p: f64 = r.gen_range(0.2..1.0);
    DensityMatrix::from_unnormalized(pure * c(p) + noise * c(1.0 - p)).unwrap()
}

pub fn embedded_bell() -> DensityMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = [c(0.0); 6];
    psi[0] = c(h);
    psi[4] = c(h);
    DensityMatrix::pure(&psi).unwrap()
}

pub fn local_unitary(r: &mut impl Rng) -> ComplexMatrix {
    linalg::kron(&random_unitary(r, 2), &random_unitary(r, 3))
}

/// Negativity of a pure state from its Schmidt coefficients: `s1 s2`.
pub fn schmidt_negativity(psi: &[Complex64]) -> f64 {
    let m = DMatrix::from_fn(2, 3, |i, j| psi[3 * i + j]);
    let s = m.svd(false, false).singular_values;
    s[0] * s[1]
}

/// `sqrt(rho(T))` from the Gibbs state at `2T`: `exp(-H/2T)` renormalized so
/// that its square has unit trace.
pub fn thermal_sqrt(p: &ModelParams, t: f64) -> ComplexMatrix {
    let m = gibbs_numeric(p, 2.0 * t).unwrap().into_matrix();
    let norm = linalg::trace(&(&m * &m)).re.sqrt();
    m / c(norm)
}

/// Square root through a direct eigendecomposition, for non-thermal states.
pub fn eig_sqrt(rho: &DensityMatrix) -> ComplexMatrix {
    let e = rho.matrix().clone().symmetric_eigen();
    let d = DMatrix::from_diagonal(&e.eigenvalues.map(|l| c(l.max(0.0).sqrt())));
    &e.eigenvectors * d * e.eigenvectors.adjoint()
}

fn direction(theta: f64, phi: f64) -> Vector3<f64> {
    Vector3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos())
}

fn qubit_observable(n: &Vector3<f64>) -> ComplexMatrix {
    let k = linalg::pauli(Axis::X) * c(n[0]) + linalg::pauli(Axis::Y) * c(n[1]) + linalg::pauli(Axis::Z) * c(n[2]);
    linalg::kron(&k, &linalg::identity(3))
}

/// Maximizes `f` over the unit sphere: coarse grid, then pattern search.
pub fn sphere_max(f: impl Fn(&Vector3<f64>) -> f64) -> f64 {
    let g = |th: f64, ph: f64| f(&direction(th, ph));
    let (nt, np) = (40, 80);
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for i in 0..=nt {
        for j in 0..np {
            let th = std::f64::consts::PI * i as f64 / nt as f64;
            let ph = std::f64::consts::TAU * j as f64 / np as f64;
            let v = g(th, ph);
            if v > best.0 {
                best = (v, th, ph);
            }
        }
    }
    let (mut v, mut th, mut ph) = best;
    let mut step = 0.1;
    while step > 1e-10 {
        let mut moved = false;
        for (dt, dp) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
            let w = g(th + dt, ph + dp);
            if w > v {
                (v, th, ph) = (w, th + dt, ph + dp);
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    v
}

fn qubit_bloch(rho: &ComplexMatrix) -> Vector3<f64> {
    Vector3::from_fn(|i, _| linalg::trace(&(rho * qubit_observable(&Vector3::ith(i, 1.0)))).re)
}

/// `||rho - sum_k (P_k (x) I) rho (P_k (x) I)||_HS^2` maximized over the
/// qubit von Neumann measurements that leave the qubit marginal unchanged.
pub fn min_oracle(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let disturbance = |n: &Vector3<f64>| {
        let k = qubit_observable(n);
        let id = linalg::identity(6);
        let plus = (&id + &k) * c(0.5);
        let minus = (&id - &k) * c(0.5);
        let measured = &plus * m * &plus + &minus * m * &minus;
        (m - measured).iter().map(|z| z.norm_sqr()).sum::<f64>()
    };
    let x = qubit_bloch(m);
    if x.norm() > 1e-9 {
        disturbance(&x.normalize())
    } else {
        sphere_max(disturbance)
    }
}

/// Skew information `1 - Tr(S K S K)` of `K = n.sigma (x) I` maximized over
/// marginal-preserving directions, with `S = sqrt(rho)` supplied.
pub fn uin_oracle(rho: &DensityMatrix, sqrt_rho: &ComplexMatrix) -> f64 {
    let skew = |n: &Vector3<f64>| {
        let k = qubit_observable(n);
        let sk = sqrt_rho * &k;
        1.0 - linalg::trace(&(&sk * &sk)).re
    };
    let x = qubit_bloch(rho.matrix());
    if x.norm() > 1e-9 {
        skew(&x.normalize())
    } else {
        sphere_max(skew)
    }
}

/// Uniform random rotation from a random unit quaternion.
pub fn random_rotation(r: &mut impl Rng) -> nalgebra::Matrix3<f64> {
    let q = nalgebra::UnitQuaternion::from_quaternion(nalgebra::Quaternion::new(
        normal(r),
        normal(r),
        normal(r),
        normal(r),
    ));
    q.to_rotation_matrix().into_inner()
}
