//! Factorised representations of divided differences on spectral supports.
//!
//! The sinc representation of `D₁f` for `f` band-limited to `[−σ, σ]` in
//! `x` uses `α_j(x₁) = sinc(σx₁ − jπ)`, `β_k(x₂) = sinc(σx₂ − kπ)` and
//! `γ_{jk}(y) = (f(jπ/σ,y) − f(kπ/σ,y))/((j−k)π/σ)`. The window is cut at
//! `|j| ≤ J`; the truncation remainder on the finite support is appended as
//! an exact block, so the representation reproduces `D₁f` there and its
//! norm exceeds `3σ‖f‖_∞` by at most the remainder's norm.

use std::f64::consts::PI;

use crate::besov::{lp_decompose_torus, sup_norm_torus, LpFilterBank};
use crate::funcalc::{Function2D, TrigPoly2};
use crate::matcore::{op_norm, SpectralMeasure, SpectrumKind};
use crate::toi::{HaagerupLikeRep1, HaagerupLikeRep2};
use crate::{DenseMatrix, Error, Result, C64};

use super::sinc::sinc_weights;
use super::torus::{roots_of_unity, torus_divdiff_matrix, xi_kernel};
use super::divided_diff_1;

/// Extra sinc nodes kept beyond the spectral support on each side.
pub const NODE_MARGIN: usize = 10;

#[derive(Debug, Clone, Copy)]
pub struct SincRepOptions {
    /// Band limit in the differenced variable; taken from the function
    /// when absent.
    pub sigma: Option<f64>,
    /// Upper bound for `‖f‖_∞`.
    pub f_sup: f64,
    /// Window radius `J`; the smallest admissible one when absent.
    pub radius: Option<usize>,
}

/// First-kind representation of `D₁f` with its declared norm bound
/// `3σ‖f‖_∞ + correction`.
#[derive(Debug, Clone)]
pub struct SincRep1 {
    pub rep: HaagerupLikeRep1,
    pub sigma: f64,
    pub radius: usize,
    pub declared_bound: f64,
}

/// Second-kind representation of `D₂f` with its declared norm bound.
#[derive(Debug, Clone)]
pub struct SincRep2 {
    pub rep: HaagerupLikeRep2,
    pub sigma: f64,
    pub radius: usize,
    pub declared_bound: f64,
}

fn require_hermitian(ms: &[&SpectralMeasure]) -> Result<()> {
    for m in ms {
        if m.kind() != SpectrumKind::Hermitian {
            return Err(Error::InvalidInput("sinc representations need self-adjoint spectral measures".into()));
        }
    }
    Ok(())
}

/// Smallest window radius whose nodes `jπ` cover `σ·support` with
/// [`NODE_MARGIN`] spare nodes on each side.
pub fn required_radius(sigma: f64, points: &[f64]) -> usize {
    let reach = points.iter().map(|x| (sigma * x).abs()).fold(0.0, f64::max);
    (reach / PI).ceil() as usize + NODE_MARGIN
}

/// Sinc representation of `D₁f` on the supports of `e1 × e2 × e3`.
pub fn build_haagerup_like_rep_d1(
    f: &Function2D,
    opts: SincRepOptions,
    e1: &SpectralMeasure,
    e2: &SpectralMeasure,
    e3: &SpectralMeasure,
) -> Result<SincRep1> {
    require_hermitian(&[e1, e2, e3])?;
    let sigma = match opts.sigma.or_else(|| f.x_bandlimit()) {
        Some(s) if s > 0.0 => s,
        Some(_) => 1.0,
        None => return Err(Error::UnsupportedRepresentation("band limit unknown")),
    };
    let x1 = e1.real_values();
    let x2 = e2.real_values();
    let ys = e3.real_values();
    let all: Vec<f64> = x1.iter().chain(&x2).copied().collect();
    let needed = required_radius(sigma, &all);
    let radius = opts.radius.unwrap_or(needed);
    if radius < needed {
        return Err(Error::TruncationInsufficient { needed, given: radius });
    }

    let width = 2 * radius + 1;
    let weights = |xs: &[f64]| {
        let mut m = DenseMatrix::zeros(xs.len(), width);
        for (i, &x) in xs.iter().enumerate() {
            for (j, w) in sinc_weights(sigma * x, radius).into_iter().enumerate() {
                m[(i, j)] = C64::new(w, 0.0);
            }
        }
        m
    };
    let alpha = weights(&x1);
    let beta = weights(&x2);

    let r = radius as i64;
    let nodes: Vec<f64> = (-r..=r).map(|j| j as f64 * PI / sigma).collect();
    let vals = f.grid(&nodes, &ys);
    let ders = f.grid_dx(&nodes, &ys)?;
    let gamma: Vec<DenseMatrix> = (0..ys.len())
        .map(|c| {
            DenseMatrix::from_fn(width, width, |j, k| {
                if j == k {
                    ders[(j, c)]
                } else {
                    (vals[(j, c)] - vals[(k, c)]) / ((j as f64 - k as f64) * PI / sigma)
                }
            })
        })
        .collect();

    let supports = [e1.values().to_vec(), e2.values().to_vec(), e3.values().to_vec()];
    let truncated = HaagerupLikeRep1::new(supports.clone(), alpha, beta, gamma)?;

    let mut remainders = Vec::with_capacity(ys.len());
    for (c, &y) in ys.iter().enumerate() {
        let mut rem = DenseMatrix::zeros(x1.len(), x2.len());
        for (a, &xa) in x1.iter().enumerate() {
            for (b, &xb) in x2.iter().enumerate() {
                rem[(a, b)] = divided_diff_1(f, xa, xb, y)? - truncated.eval(a, b, c);
            }
        }
        remainders.push(rem);
    }
    let correction_norm = remainders.iter().map(op_norm).fold(0.0, f64::max);
    let correction = HaagerupLikeRep1::new(
        supports,
        DenseMatrix::identity(x1.len(), x1.len()),
        DenseMatrix::identity(x2.len(), x2.len()),
        remainders,
    )?;
    let mut rep = truncated.direct_sum(&correction)?;
    rep.correction_norm = correction_norm;
    Ok(SincRep1 { rep, sigma, radius, declared_bound: 3.0 * sigma * opts.f_sup + correction_norm })
}

/// Second-kind representation of `D₂f` on `e1 × e2 × e3`, obtained from
/// the first-kind representation of `D₁g`, `g(y, x) = f(x, y)`.
pub fn build_haagerup_like_rep_d2(
    f: &Function2D,
    opts: SincRepOptions,
    e1: &SpectralMeasure,
    e2: &SpectralMeasure,
    e3: &SpectralMeasure,
) -> Result<SincRep2> {
    let g = f.flip();
    let s1 = build_haagerup_like_rep_d1(&g, opts, e2, e3, e1)?;
    let r1 = s1.rep;
    let rep = HaagerupLikeRep2 {
        supports: [r1.supports[2].clone(), r1.supports[0].clone(), r1.supports[1].clone()],
        alpha: r1.gamma,
        beta: r1.alpha,
        gamma: r1.beta,
        correction_norm: r1.correction_norm,
    };
    Ok(SincRep2 { rep, sigma: s1.sigma, radius: s1.radius, declared_bound: s1.declared_bound })
}

/// First-kind representation of `D₁f` assembled from the Littlewood–Paley
/// pieces `f_n` of a torus polynomial, piece `n` using band limit
/// `2^{n+1}`. The declared bound is `Σ 3·2^{n+1}‖f_n‖_∞` plus the
/// truncation corrections.
pub fn build_besov_summed_rep_d1(
    p: &TrigPoly2,
    bank: &LpFilterBank,
    e1: &SpectralMeasure,
    e2: &SpectralMeasure,
    e3: &SpectralMeasure,
) -> Result<SincRep1> {
    let dec = lp_decompose_torus(p, bank);
    let mut acc: Option<SincRep1> = None;
    for (&n, piece) in &dec.pieces {
        let sigma = 2f64.powi(n as i32 + 1);
        let f_sup = sup_norm_torus(piece).upper;
        let f = Function2D::TrigPoly(piece.clone());
        let opts = SincRepOptions { sigma: Some(sigma), f_sup, radius: None };
        let part = build_haagerup_like_rep_d1(&f, opts, e1, e2, e3)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => {
                let mut rep = prev.rep.direct_sum(&part.rep)?;
                rep.correction_norm = prev.rep.correction_norm + part.rep.correction_norm;
                SincRep1 {
                    rep,
                    sigma: prev.sigma.max(part.sigma),
                    radius: prev.radius.max(part.radius),
                    declared_bound: prev.declared_bound + part.declared_bound,
                }
            }
        });
    }
    acc.ok_or_else(|| Error::InvalidInput("polynomial has no terms".into()))
}

fn require_unitary(ms: &[&SpectralMeasure]) -> Result<()> {
    for m in ms {
        if m.kind() != SpectrumKind::Unitary {
            return Err(Error::InvalidInput("torus representations need unitary spectral measures".into()));
        }
    }
    Ok(())
}

/// Exact first-kind representation of the torus divided difference in
/// `ζ`: `α_κ(ζ₁) = Ξ_n(ζ₁κ̄)`, `β_ξ(ζ₂) = Ξ_n(ζ₂ξ̄)` and `γ(τ)` the
/// divided-difference matrix over the roots of unity.
pub fn build_torus_rep_d1(
    p: &TrigPoly2,
    e1: &SpectralMeasure,
    e2: &SpectralMeasure,
    e3: &SpectralMeasure,
) -> Result<HaagerupLikeRep1> {
    require_unitary(&[e1, e2, e3])?;
    let n = p.degrees().0.max(1);
    let roots = roots_of_unity(n);
    let kernel = |sm: &SpectralMeasure| {
        DenseMatrix::from_fn(sm.len(), roots.len(), |i, k| xi_kernel(n, sm.values()[i] * roots[k].conj()))
    };
    let gamma = e3.values().iter().map(|&t| torus_divdiff_matrix(p, t, n)).collect::<Result<Vec<_>>>()?;
    HaagerupLikeRep1::new(
        [e1.values().to_vec(), e2.values().to_vec(), e3.values().to_vec()],
        kernel(e1),
        kernel(e2),
        gamma,
    )
}

/// Exact second-kind representation of the torus divided difference in
/// `τ`, through the flip `g(τ, ζ) = f(ζ, τ)`.
pub fn build_torus_rep_d2(
    p: &TrigPoly2,
    e1: &SpectralMeasure,
    e2: &SpectralMeasure,
    e3: &SpectralMeasure,
) -> Result<HaagerupLikeRep2> {
    let r1 = build_torus_rep_d1(&p.flip(), e2, e3, e1)?;
    Ok(HaagerupLikeRep2 {
        supports: [r1.supports[2].clone(), r1.supports[0].clone(), r1.supports[1].clone()],
        alpha: r1.gamma,
        beta: r1.alpha,
        gamma: r1.beta,
        correction_norm: 0.0,
    })
}
