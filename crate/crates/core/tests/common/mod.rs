#![allow(dead_code)]

pub mod toi_fixtures;

use std::f64::consts::TAU;

use opcalc::experiments::random::gaussian_matrix;
use opcalc::experiments::{random_hermitian, random_unitary};
use opcalc::funcalc::{Atom, AtomSum2, Function2D};
use opcalc::matcore::{spectral_decompose, SpectralMeasure, SpectrumKind};
use opcalc::{DenseMatrix, C64};
use rand::Rng;

pub const INF: f64 = f64::INFINITY;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `‖a − b‖_F / (1 + ‖b‖_F)`.
pub fn rel_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

pub fn hermitian_measure(rng: &mut impl Rng, n: usize) -> SpectralMeasure {
    spectral_decompose(&random_hermitian(rng, n), SpectrumKind::Hermitian).unwrap()
}

pub fn unitary_measure(rng: &mut impl Rng, n: usize) -> SpectralMeasure {
    spectral_decompose(&random_unitary(rng, n), SpectrumKind::Unitary).unwrap()
}

/// Hermitian matrix with eigenvalues drawn from a few integers, so that
/// spectral points carry multiplicity.
pub fn degenerate_hermitian(rng: &mut impl Rng, n: usize) -> DenseMatrix {
    let u = random_unitary(rng, n);
    let d = DenseMatrix::from_fn(n, n, |i, j| if i == j { c(rng.gen_range(-2..=2) as f64, 0.0) } else { c(0.0, 0.0) });
    &u * d * u.adjoint()
}

pub fn square(rng: &mut impl Rng, n: usize) -> DenseMatrix {
    gaussian_matrix(rng, n, n)
}

pub fn atoms(x: Vec<Atom>, y: Vec<Atom>, coeffs: &[f64]) -> Function2D {
    let m = DenseMatrix::from_fn(x.len(), y.len(), |i, j| c(coeffs[i * y.len() + j], 0.0));
    Function2D::BandLimited(AtomSum2::new(x, y, m).unwrap())
}

/// Functions band-limited to `[−1, 1]` in the first variable, with their
/// exact sup norms.
pub fn band_limited() -> Vec<(&'static str, Function2D, f64)> {
    let fejer = Atom::Fejer { center: 0.0, width: TAU };
    vec![
        ("exp", atoms(vec![Atom::Exp { freq: 1.0 }], vec![Atom::Exp { freq: 1.0 }], &[1.0]), 1.0),
        ("exp-0.7", atoms(vec![Atom::Exp { freq: 0.7 }], vec![fejer], &[1.0]), 1.0),
        ("fejer", atoms(vec![fejer], vec![Atom::Exp { freq: -2.0 }], &[1.0]), 1.0),
        (
            "sinc",
            atoms(vec![Atom::Sinc { center: 0.3, sigma: 1.0 }], vec![Atom::Sinc { center: 0.0, sigma: 2.0 }], &[1.0]),
            1.0,
        ),
        ("mixed", atoms(vec![Atom::Exp { freq: 1.0 }, fejer], vec![Atom::Exp { freq: 0.5 }], &[0.5, 0.5]), 1.0),
    ]
}
