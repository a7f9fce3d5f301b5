//! Roots-of-unity expansion of divided differences on the torus.
//!
//! With `Ξ_n(z) = (2n+1)⁻¹ Σ_{|k|≤n} z^k` and `Π` the `(2n+1)`-th roots of
//! unity, every Laurent polynomial `g` with degrees in `[−n, n]` satisfies
//! `g(ζ) = Σ_{κ∈Π} g(κ) Ξ_n(ζ κ̄)`. Divided differences of a polynomial of
//! degree at most `n` in `ζ` have this form in each variable.

use std::f64::consts::TAU;

use crate::funcalc::TrigPoly2;
use crate::{c, DenseMatrix, Error, Result, C64};

use super::torus_divided_diff_1;

/// `Ξ_n(z) = (2n+1)⁻¹ Σ_{k=−n}^{n} z^k`.
pub fn xi_kernel(n: usize, z: C64) -> C64 {
    let mut acc = C64::new(1.0, 0.0);
    let zi = z.inv();
    let (mut up, mut down) = (C64::new(1.0, 0.0), C64::new(1.0, 0.0));
    for _ in 0..n {
        up *= z;
        down *= zi;
        acc += up + down;
    }
    acc / (2 * n + 1) as f64
}

/// The `2n+1` roots of unity, in increasing argument.
pub fn roots_of_unity(n: usize) -> Vec<C64> {
    let m = 2 * n + 1;
    (0..m)
        .map(|k| {
            let (s, co) = (TAU * k as f64 / m as f64).sin_cos();
            c(co, s)
        })
        .collect()
}

/// `Σ_{κ∈Π} |Ξ_n(ζ κ̄)|²`, which equals 1 for every unit `ζ`.
pub fn xi_normalization(n: usize, zeta: C64) -> f64 {
    roots_of_unity(n).iter().map(|k| xi_kernel(n, zeta * k.conj()).norm_sqr()).sum()
}

fn check_degree(p: &TrigPoly2, n: usize) -> Result<()> {
    if !p.is_torus() {
        return Err(Error::NotTorusFunction);
    }
    let (dx, _) = p.degrees();
    if dx > n {
        return Err(Error::DegreeTooHigh { degree: dx, n });
    }
    Ok(())
}

/// Matrix `(f(κ,τ) − f(ξ,τ))/(κ − ξ)` over `Π × Π`, with `∂f/∂ζ(κ,τ)` on
/// the diagonal.
pub fn torus_divdiff_matrix(p: &TrigPoly2, tau: C64, n: usize) -> Result<DenseMatrix> {
    check_degree(p, n)?;
    let roots = roots_of_unity(n);
    let m = roots.len();
    Ok(DenseMatrix::from_fn(m, m, |a, b| torus_divided_diff_1(p, roots[a], roots[b], tau)))
}

/// `Σ_{κ,ξ∈Π} Ξ_n(ζ₁κ̄) Ξ_n(ζ₂ξ̄) M_{κξ}(τ)`.
pub fn torus_expand_d1(p: &TrigPoly2, z1: C64, z2: C64, tau: C64, n: usize) -> Result<C64> {
    let m = torus_divdiff_matrix(p, tau, n)?;
    let roots = roots_of_unity(n);
    let a: Vec<C64> = roots.iter().map(|k| xi_kernel(n, z1 * k.conj())).collect();
    let b: Vec<C64> = roots.iter().map(|k| xi_kernel(n, z2 * k.conj())).collect();
    let mut total = C64::new(0.0, 0.0);
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            total += ai * bj * m[(i, j)];
        }
    }
    Ok(total)
}
