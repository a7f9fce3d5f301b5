//! Reproducible random instances.
//!
//! Every trial draws from its own ChaCha8 stream, keyed by the run seed and
//! the trial index, so results do not depend on scheduling.

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::funcalc::{TrigPoly1, TrigPoly2};
use crate::linalg::hermitian_eigen;
use crate::matcore::op_norm;
use crate::{c, DenseMatrix, C64};

/// Seed used when none is configured.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Stream for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn gaussian_complex(rng: &mut impl Rng) -> C64 {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn gaussian_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| gaussian_complex(rng))
}

/// Random self-adjoint matrix with operator norm `π`.
pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> DenseMatrix {
    let x = gaussian_matrix(rng, n, n);
    let h = &x + x.adjoint();
    let s = op_norm(&h);
    if s == 0.0 {
        h
    } else {
        h * C64::new(PI / s, 0.0)
    }
}

/// Random self-adjoint matrix with operator norm `size`.
pub fn random_hermitian_direction(rng: &mut impl Rng, n: usize, size: f64) -> DenseMatrix {
    random_hermitian(rng, n) * C64::new(size / PI, 0.0)
}

/// Haar-distributed unitary matrix: QR of a Ginibre matrix with the phases
/// of `R`'s diagonal moved into `Q`.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> DenseMatrix {
    let qr = gaussian_matrix(rng, n, n).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() == 0.0 { C64::new(1.0, 0.0) } else { d / d.norm() };
        let mut col = q.column_mut(j);
        col *= phase;
    }
    q
}

/// Unitary close to `u`: `u · exp(i·size·H)` with `‖H‖ = 1`.
pub fn perturb_unitary(rng: &mut impl Rng, u: &DenseMatrix, size: f64) -> DenseMatrix {
    let n = u.nrows();
    let h = random_hermitian_direction(rng, n, size);
    let (angles, v) = hermitian_eigen(&h).expect("eigensolver converges on a random Hermitian matrix");
    let d = DenseMatrix::from_diagonal(&nalgebra::DVector::from_iterator(n, angles.iter().map(|&t| c(t.cos(), t.sin()))));
    u * (&v * d * v.adjoint())
}

/// Torus polynomial with Gaussian coefficients on `|j|, |k| ≤ degree`,
/// scaled by `1/(1 + |j| + |k|)`.
pub fn random_trigpoly2(rng: &mut impl Rng, degree: usize) -> TrigPoly2 {
    let d = degree as i32;
    let mut terms = Vec::new();
    for j in -d..=d {
        for k in -d..=d {
            let w = 1.0 / (1 + j.abs() + k.abs()) as f64;
            terms.push(((j, k), gaussian_complex(rng) * w));
        }
    }
    TrigPoly2::torus(terms)
}

pub fn random_trigpoly1(rng: &mut impl Rng, degree: usize) -> TrigPoly1 {
    let d = degree as i32;
    TrigPoly1::torus((-d..=d).map(|j| (j, gaussian_complex(rng) / (1 + j.abs()) as f64)).collect::<Vec<_>>())
}
