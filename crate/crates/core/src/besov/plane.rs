//! Dyadic pieces of band-limited functions on the plane.
//!
//! For `f` built from integrable atoms the transform `f̂` is known in
//! closed form, and `f_n = f ∗ W_n` has transform `f̂(ξ) w(‖ξ‖/2ⁿ)`. The
//! pieces are evaluated by FFT quadrature of the inverse transform over
//! the square containing the Fourier support. Levels below the window are
//! merged into one ball piece `f̂ · Σ_{k≤n_min} w(‖ξ‖/2^k)` carried at
//! level `n_min`.
//!
//! All grid quantities scale by powers of two under `f ↦ εf(·/ε)` with
//! `ε = 2^{−m}`, so the piece list of the dilate is the piece list of `f`
//! shifted by `m` levels with sups scaled by `ε`, bit for bit.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::funcalc::{Atom, AtomSum2, Function2D};
use crate::linalg::inverse_fft_2d;
use crate::{DenseMatrix, Error, Result, C64};

use super::filter::LpFilterBank;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneDyadicConfig {
    /// Quadrature points per axis across `[−B, B)`.
    pub samples: usize,
    /// Zero-padding factor for the spatial grid.
    pub pad: usize,
    /// Number of levels resolved below the top one.
    pub levels: u32,
}

impl Default for PlaneDyadicConfig {
    fn default() -> Self {
        PlaneDyadicConfig { samples: 128, pad: 4, levels: 8 }
    }
}

/// Finite list of dyadic levels and piece sup norms.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PlaneDyadicFamily {
    pub pieces: BTreeMap<i32, f64>,
}

/// `Σ 2ⁿ ‖f_n‖_∞` for the dilate `2^{−m} f(2^m ·)`, whose piece at level
/// `n + m` has sup `2^{−m}‖f_n‖_∞`.
pub fn besov_norm_plane_dyadic(family: &PlaneDyadicFamily, m: i32) -> f64 {
    let eps = 2f64.powi(-m);
    family.pieces.iter().map(|(&n, &s)| 2f64.powi(n + m) * (eps * s)).sum()
}

/// Smallest `k` with `t < 2^k`, computed by exact power-of-two
/// comparisons.
fn dyadic_ceiling(t: f64) -> i32 {
    let mut k = 0i32;
    while 2f64.powi(k) <= t {
        k += 1;
    }
    while 2f64.powi(k - 1) > t {
        k -= 1;
    }
    k
}

fn transform_table(atoms: &[Atom], xi: &[f64]) -> Result<DenseMatrix> {
    let mut m = DenseMatrix::zeros(xi.len(), atoms.len());
    for (b, atom) in atoms.iter().enumerate() {
        for (a, &t) in xi.iter().enumerate() {
            m[(a, b)] = atom
                .fourier(t)
                .ok_or(Error::UnsupportedRepresentation("atom without an integrable Fourier transform"))?;
        }
    }
    Ok(m)
}

fn atom_pieces(f: &AtomSum2, bank: &LpFilterBank, cfg: &PlaneDyadicConfig) -> Result<PlaneDyadicFamily> {
    let bx = f.x_atoms.iter().map(Atom::bandlimit).fold(0.0, f64::max);
    let by = f.y_atoms.iter().map(Atom::bandlimit).fold(0.0, f64::max);
    let b = bx.max(by);
    if b == 0.0 || f.coeffs.iter().all(|z| *z == C64::new(0.0, 0.0)) {
        return Ok(PlaneDyadicFamily::default());
    }
    let p = cfg.samples;
    let q = p * cfg.pad;
    let h = 2.0 * b / p as f64;
    let xi: Vec<f64> = (0..p).map(|a| -b + a as f64 * h).collect();
    let fx = transform_table(&f.x_atoms, &xi)?;
    let fy = transform_table(&f.y_atoms, &xi)?;
    let fhat = fx * &f.coeffs * fy.transpose();

    let n_max = dyadic_ceiling(b * 2f64.sqrt());
    let n_min = n_max - cfg.levels as i32;
    let radius = DenseMatrix::from_fn(p, p, |a, c| C64::new((xi[a] * xi[a] + xi[c] * xi[c]).sqrt(), 0.0));
    let quad = (h * h) / (4.0 * PI * PI);

    let mut pieces = BTreeMap::new();
    for n in n_min..=n_max {
        let scale = 2f64.powi(n);
        let mask = |r: f64| {
            if n > n_min {
                bank.w(r / scale)
            } else {
                1.0 - (n_min + 1..=n_max).map(|k| bank.w(r / 2f64.powi(k))).sum::<f64>()
            }
        };
        let mut data = vec![C64::new(0.0, 0.0); q * q];
        let mut any = false;
        for a in 0..p {
            for c in 0..p {
                let m = mask(radius[(a, c)].re);
                if m != 0.0 {
                    data[a * q + c] = fhat[(a, c)] * m;
                    any = true;
                }
            }
        }
        if !any {
            continue;
        }
        inverse_fft_2d(&mut data, q, q);
        let sup = data.iter().map(|z| z.norm()).fold(0.0, f64::max) * quad;
        pieces.insert(n, sup);
    }
    Ok(PlaneDyadicFamily { pieces })
}

/// Piece list of a closed-form band-limited function. Callables, torus
/// polynomials and non-integrable atoms are refused.
pub fn plane_pieces(f: &Function2D, bank: &LpFilterBank, cfg: &PlaneDyadicConfig) -> Result<PlaneDyadicFamily> {
    match f {
        Function2D::BandLimited(s) => atom_pieces(s, bank, cfg),
        Function2D::Callable(_) => Err(Error::UnsupportedRepresentation("black-box callable")),
        Function2D::TrigPoly(_) => Err(Error::UnsupportedRepresentation("periodic function on the plane")),
        Function2D::Separable(_) => Err(Error::UnsupportedRepresentation("separable sum without closed-form transform")),
    }
}
