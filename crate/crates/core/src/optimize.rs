//! Derivative-free minimization and SO(3) parametrization.

use nalgebra::{Matrix3, Rotation3, Vector3};

#[derive(Debug, Clone, Copy)]
pub struct NelderMeadOptions {
    pub initial_step: f64,
    pub max_evaluations: usize,
    /// Stop when the simplex function values span less than this.
    pub f_tol: f64,
    /// ... and every vertex is within this distance of the best one.
    pub x_tol: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.4,
            max_evaluations: 4000,
            f_tol: 1e-15,
            x_tol: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Minimum<const N: usize> {
    pub x: [f64; N],
    pub value: f64,
    pub evaluations: usize,
}

/// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) on an axis-aligned initial simplex.
pub fn nelder_mead<const N: usize>(
    f: impl Fn(&[f64; N]) -> f64,
    start: [f64; N],
    opts: &NelderMeadOptions,
) -> Minimum<N> {
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((start, f(&start)));
    for i in 0..N {
        let mut p = start;
        p[i] += opts.initial_step;
        simplex.push((p, f(&p)));
    }
    let mut evaluations = N + 1;

    let combine = |a: &[f64; N], b: &[f64; N], t: f64| -> [f64; N] {
        // a + t (b - a)
        std::array::from_fn(|k| a[k] + t * (b[k] - a[k]))
    };

    while evaluations < opts.max_evaluations {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0];
        let worst = simplex[N];
        let spread = worst.1 - best.1;
        let size = simplex[1..]
            .iter()
            .map(|(p, _)| p.iter().zip(&best.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if spread <= opts.f_tol && size <= opts.x_tol {
            break;
        }

        let centroid: [f64; N] =
            std::array::from_fn(|k| simplex[..N].iter().map(|(p, _)| p[k]).sum::<f64>() / N as f64);

        let reflected = combine(&centroid, &worst.0, -1.0);
        let fr = f(&reflected);
        evaluations += 1;

        if fr < best.1 {
            let expanded = combine(&centroid, &worst.0, -2.0);
            let fe = f(&expanded);
            evaluations += 1;
            simplex[N] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
            continue;
        }
        if fr < simplex[N - 1].1 {
            simplex[N] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr < worst.1 {
            let p = combine(&centroid, &reflected, 0.5);
            (p, f(&p))
        } else {
            let p = combine(&centroid, &worst.0, 0.5);
            (p, f(&p))
        };
        evaluations += 1;
        if fc < worst.1.min(fr) {
            simplex[N] = (contracted, fc);
            continue;
        }
        for vertex in simplex.iter_mut().skip(1) {
            let p = combine(&best.0, &vertex.0, 0.5);
            *vertex = (p, f(&p));
        }
        evaluations += N;
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    Minimum {
        x: simplex[0].0,
        value: simplex[0].1,
        evaluations,
    }
}

/// `R = Rz(alpha) Ry(beta) Rz(gamma)`.
pub fn euler_zyz(angles: &[f64; 3]) -> Matrix3<f64> {
    let z = Vector3::z_axis();
    let y = Vector3::y_axis();
    (Rotation3::from_axis_angle(&z, angles[0])
        * Rotation3::from_axis_angle(&y, angles[1])
        * Rotation3::from_axis_angle(&z, angles[2]))
    .into_inner()
}

/// Radical inverse of `index` in the given prime base.
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut scale = inv;
    let mut out = 0.0;
    while index > 0 {
        out += (index % base) as f64 * scale;
        index /= base;
        scale *= inv;
    }
    out
}

/// Halton points in bases 2, 3, 5 mapped onto the Euler-angle box
/// `[0, 2pi) x [0, pi] x [0, 2pi)`. Index 0 is skipped.
pub fn halton_euler_seeds(count: usize) -> Vec<[f64; 3]> {
    use std::f64::consts::{PI, TAU};
    (1..=count as u64)
        .map(|i| {
            [
                TAU * radical_inverse(i, 2),
                PI * radical_inverse(i, 3),
                TAU * radical_inverse(i, 5),
            ]
        })
        .collect()
}

/// Orthogonality defect `max|R^t R - I|` and determinant.
pub fn rotation_defect(r: &Matrix3<f64>) -> (f64, f64) {
    let defect = (r.transpose() * r - Matrix3::identity()).abs().max();
    (defect, r.determinant())
}
