//! Sinc expansion of divided differences of functions band-limited to
//! `[−1, 1]` in the first variable.
//!
//! `D₁f(x₁,x₂,y) = Σ_{j,k} sinc(x₁ − jπ) sinc(x₂ − kπ) M_{jk}(y)` with
//! `M_{jk} = (f(jπ,y) − f(kπ,y))/(jπ − kπ)` and `M_{jj} = ∂f/∂x(jπ,y)`.
//! Splitting `M = C + D` into off-diagonal and diagonal parts,
//! `πC = M_f H − H M_f` for the discrete Hilbert matrix `H`, and
//! `‖M‖ ≤ 2‖f‖_∞ + ‖f‖_∞`.

use std::f64::consts::PI;

use crate::funcalc::atoms::sinc_pi;
use crate::funcalc::Function2D;
use crate::linalg::largest_singular_value;
use crate::matcore::op_norm;
use crate::{DenseMatrix, Error, Result, C64};

use super::hilbert::hilbert_matrix;

/// Dense matrices larger than this use the Lanczos norm estimate.
const DENSE_NORM_LIMIT: usize = 400;

/// `sin t / t`.
pub fn sinc(t: f64) -> f64 {
    sinc_pi(t / PI)
}

/// `sinc(x − jπ)` for `j = −J..=J`, stored at index `j + J`.
pub fn sinc_weights(x: f64, radius: usize) -> Vec<f64> {
    let r = radius as i64;
    let u = x / PI;
    (-r..=r).map(|j| sinc_pi(u - j as f64)).collect()
}

/// `Σ_{|j| ≤ J} sinc²(x − jπ)`, which tends to 1.
pub fn sinc_partition_sum(x: f64, radius: usize) -> f64 {
    sinc_weights(x, radius).iter().map(|w| w * w).sum()
}

/// Upper bound `2 / (π² (J − |x|/π))` for `1 − Σ_{|j|≤J} sinc²(x − jπ)`,
/// valid when `|x| < Jπ`.
pub fn partition_deficit_bound(x: f64, radius: usize) -> f64 {
    2.0 / (PI * PI * (radius as f64 - x.abs() / PI))
}

fn check_bandlimit(f: &Function2D) -> Result<()> {
    if let Some(s) = f.x_bandlimit() {
        if s > 1.0 + 1e-12 {
            return Err(Error::InvalidInput(format!(
                "first-variable band limit {s} exceeds 1; rescale the function first"
            )));
        }
    }
    Ok(())
}

/// Samples `f(jπ, y)` and `∂f/∂x(jπ, y)` for `j = −J..=J`.
fn node_samples(f: &Function2D, y: f64, radius: usize) -> Result<(Vec<C64>, Vec<C64>)> {
    let r = radius as i64;
    let nodes: Vec<f64> = (-r..=r).map(|j| j as f64 * PI).collect();
    let vals = f.grid(&nodes, &[y]).column(0).iter().copied().collect();
    let ders = f.grid_dx(&nodes, &[y])?.column(0).iter().copied().collect();
    Ok((vals, ders))
}

/// Entry `(j, k)` of the divided-difference matrix from node samples.
fn entry(vals: &[C64], ders: &[C64], j: usize, k: usize) -> C64 {
    if j == k {
        ders[j]
    } else {
        (vals[j] - vals[k]) / ((j as f64 - k as f64) * PI)
    }
}

/// Truncated divided-difference matrix `M_{jk}(y)`, `|j|, |k| ≤ J`.
#[derive(Debug, Clone)]
pub struct DividedDiffMatrix {
    pub y: f64,
    pub radius: usize,
    pub entries: DenseMatrix,
}

impl DividedDiffMatrix {
    /// Operator norm; exact SVD for moderate sizes, Lanczos beyond.
    pub fn norm(&self) -> f64 {
        let n = self.entries.nrows();
        if n <= DENSE_NORM_LIMIT {
            op_norm(&self.entries)
        } else {
            let adj = self.entries.adjoint();
            largest_singular_value(|x| &self.entries * x, |x| &adj * x, n, 120)
        }
    }
}

/// Builds `M_{jk}(y)` for a function band-limited to `[−1, 1]` in `x`.
pub fn divdiff_matrix(f: &Function2D, y: f64, radius: usize) -> Result<DividedDiffMatrix> {
    check_bandlimit(f)?;
    let (vals, ders) = node_samples(f, y, radius)?;
    let n = vals.len();
    let entries = DenseMatrix::from_fn(n, n, |j, k| entry(&vals, &ders, j, k));
    Ok(DividedDiffMatrix { y, radius, entries })
}

/// Truncated sinc expansion of `D₁f(x₁, x₂, y)`. Memory is linear in `J`.
pub fn sinc_expand_d1(f: &Function2D, x1: f64, x2: f64, y: f64, radius: usize) -> Result<C64> {
    check_bandlimit(f)?;
    let (vals, ders) = node_samples(f, y, radius)?;
    let w1 = sinc_weights(x1, radius);
    let w2 = sinc_weights(x2, radius);
    let n = vals.len();
    let mut total = C64::new(0.0, 0.0);
    for j in 0..n {
        if w1[j] == 0.0 {
            continue;
        }
        let mut row = C64::new(0.0, 0.0);
        for k in 0..n {
            row += entry(&vals, &ders, j, k) * w2[k];
        }
        total += row * w1[j];
    }
    Ok(total)
}

/// Splits `M = C + D` and returns `(C, D, πC − (M_f H − H M_f))`, the last
/// being the residual of the commutator identity.
pub fn hilbert_commutator_split(m: &DividedDiffMatrix, f: &Function2D) -> (DenseMatrix, DenseMatrix, DenseMatrix) {
    let n = m.entries.nrows();
    let r = m.radius as i64;
    let nodes: Vec<f64> = (-r..=r).map(|j| j as f64 * PI).collect();
    let vals: Vec<C64> = f.grid(&nodes, &[m.y]).column(0).iter().copied().collect();
    let mut c = m.entries.clone();
    let mut d = DenseMatrix::zeros(n, n);
    for j in 0..n {
        d[(j, j)] = m.entries[(j, j)];
        c[(j, j)] = C64::new(0.0, 0.0);
    }
    let h = hilbert_matrix(n);
    let mf = DenseMatrix::from_diagonal(&nalgebra::DVector::from_vec(vals));
    let comm = &mf * &h - &h * &mf;
    let residual = &c * C64::new(PI, 0.0) - comm;
    (c, d, residual)
}
