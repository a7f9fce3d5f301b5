//! Perturbation identities for functions of noncommuting pairs.
//!
//! For self-adjoint pairs,
//! `f(A₁,B₁) − f(A₂,B₂) = ∭ D₁f dE_{A₁} (A₁−A₂) dE_{A₂} dE_{B₁}
//!                      + ∭ D₂f dE_{A₂} dE_{B₁} (B₁−B₂) dE_{B₂}`,
//! each term being one of the single-sided differences
//! `f(A₁,B₁) − f(A₂,B₁)` and `f(A₂,B₁) − f(A₂,B₂)`. The unitary version
//! uses torus divided differences. With `A₂ = αI` the first term collapses
//! to `f(A,B) − f(αI,B) = (A − αI) g(A,B)`, `g(x,y) = D₁f(α,x,y)`.

use serde::Serialize;

use crate::divdiff::{
    build_haagerup_like_rep_d1, build_haagerup_like_rep_d2, build_torus_rep_d1, build_torus_rep_d2, divided_diff_1,
    divided_diff_2, torus_divided_diff_1, torus_divided_diff_2, SincRepOptions,
};
use crate::funcalc::{apply_f_ab, apply_f_uv, double_spectral_sum, torus_poly, Function2D, TrigPoly2};
use crate::matcore::{schatten_norm, spectral_decompose, SpectralMeasure, SpectrumKind};
use crate::toi::{toi_direct_table, toi_haagerup_like_1, toi_haagerup_like_2, Table3};
use crate::{DenseMatrix, Result, C64};

/// `‖L − R‖_F / (1 + ‖L‖_F)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub residual: f64,
    pub lhs_norm: f64,
}

impl Residual {
    pub fn of(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Residual {
        let lhs_norm = lhs.norm();
        Residual { residual: (lhs - rhs).norm() / (1.0 + lhs_norm), lhs_norm }
    }
}

/// Residuals of the full identity and of its two single-sided halves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerturbationReport {
    pub full: Residual,
    pub first_variable: Residual,
    pub second_variable: Residual,
}

impl PerturbationReport {
    pub fn max_residual(&self) -> f64 {
        self.full.residual.max(self.first_variable.residual).max(self.second_variable.residual)
    }

    pub fn within(&self, tol: f64) -> bool {
        self.max_residual() <= tol
    }
}

fn decompose4(ms: [&DenseMatrix; 4], kind: SpectrumKind) -> Result<[SpectralMeasure; 4]> {
    Ok([
        spectral_decompose(ms[0], kind)?,
        spectral_decompose(ms[1], kind)?,
        spectral_decompose(ms[2], kind)?,
        spectral_decompose(ms[3], kind)?,
    ])
}

fn identity(n: usize) -> DenseMatrix {
    DenseMatrix::identity(n, n)
}

fn report(
    f_a1b1: DenseMatrix,
    f_a2b1: DenseMatrix,
    f_a2b2: DenseMatrix,
    first: DenseMatrix,
    second: DenseMatrix,
) -> PerturbationReport {
    PerturbationReport {
        full: Residual::of(&(&f_a1b1 - &f_a2b2), &(&first + &second)),
        first_variable: Residual::of(&(&f_a1b1 - &f_a2b1), &first),
        second_variable: Residual::of(&(&f_a2b1 - &f_a2b2), &second),
    }
}

/// Checks the self-adjoint perturbation identity with the reference
/// triple-integral evaluator.
pub fn verify_identity_71(
    f: &Function2D,
    a1: &DenseMatrix,
    a2: &DenseMatrix,
    b1: &DenseMatrix,
    b2: &DenseMatrix,
) -> Result<PerturbationReport> {
    let [ea1, ea2, eb1, eb2] = decompose4([a1, a2, b1, b2], SpectrumKind::Hermitian)?;
    let n = a1.nrows();
    let (x1, x2, y1, y2) = (ea1.real_values(), ea2.real_values(), eb1.real_values(), eb2.real_values());
    let d1 = Table3::try_from_fn([x1.len(), x2.len(), y1.len()], |i, j, k| divided_diff_1(f, x1[i], x2[j], y1[k]))?;
    let d2 = Table3::try_from_fn([x2.len(), y1.len(), y2.len()], |i, j, k| divided_diff_2(f, x2[i], y1[j], y2[k]))?;
    let first = toi_direct_table(&d1, &ea1, &(a1 - a2), &ea2, &identity(n), &eb1)?;
    let second = toi_direct_table(&d2, &ea2, &identity(n), &eb1, &(b1 - b2), &eb2)?;
    Ok(report(apply_f_ab(f, &ea1, &eb1)?, apply_f_ab(f, &ea2, &eb1)?, apply_f_ab(f, &ea2, &eb2)?, first, second))
}

/// The self-adjoint identity with both integrals evaluated from sinc
/// representations of the divided differences by the first- and
/// second-kind evaluators.
pub fn verify_identity_71_via_reps(
    f: &Function2D,
    f_sup: f64,
    a1: &DenseMatrix,
    a2: &DenseMatrix,
    b1: &DenseMatrix,
    b2: &DenseMatrix,
) -> Result<PerturbationReport> {
    let [ea1, ea2, eb1, eb2] = decompose4([a1, a2, b1, b2], SpectrumKind::Hermitian)?;
    let n = a1.nrows();
    let opts = SincRepOptions { sigma: None, f_sup, radius: None };
    let r1 = build_haagerup_like_rep_d1(f, opts, &ea1, &ea2, &eb1)?;
    let r2 = build_haagerup_like_rep_d2(f, opts, &ea2, &eb1, &eb2)?;
    let first = toi_haagerup_like_1(&r1.rep, &ea1, &(a1 - a2), &ea2, &identity(n), &eb1)?;
    let second = toi_haagerup_like_2(&r2.rep, &ea2, &identity(n), &eb1, &(b1 - b2), &eb2)?;
    Ok(report(apply_f_ab(f, &ea1, &eb1)?, apply_f_ab(f, &ea2, &eb1)?, apply_f_ab(f, &ea2, &eb2)?, first, second))
}

/// Checks the unitary perturbation identity with the reference evaluator.
pub fn verify_identity_121(
    f: &Function2D,
    u1: &DenseMatrix,
    u2: &DenseMatrix,
    v1: &DenseMatrix,
    v2: &DenseMatrix,
) -> Result<PerturbationReport> {
    let p = torus_poly(f)?;
    let [eu1, eu2, ev1, ev2] = decompose4([u1, u2, v1, v2], SpectrumKind::Unitary)?;
    let n = u1.nrows();
    let (z1, z2, t1, t2) = (eu1.values(), eu2.values(), ev1.values(), ev2.values());
    let d1 = Table3::from_fn([z1.len(), z2.len(), t1.len()], |i, j, k| torus_divided_diff_1(p, z1[i], z2[j], t1[k]));
    let d2 = Table3::from_fn([z2.len(), t1.len(), t2.len()], |i, j, k| torus_divided_diff_2(p, z2[i], t1[j], t2[k]));
    let first = toi_direct_table(&d1, &eu1, &(u1 - u2), &eu2, &identity(n), &ev1)?;
    let second = toi_direct_table(&d2, &eu2, &identity(n), &ev1, &(v1 - v2), &ev2)?;
    Ok(report(apply_f_uv(f, &eu1, &ev1)?, apply_f_uv(f, &eu2, &ev1)?, apply_f_uv(f, &eu2, &ev2)?, first, second))
}

/// The unitary identity with both integrals evaluated from the exact
/// roots-of-unity representations.
pub fn verify_identity_121_via_reps(
    p: &TrigPoly2,
    u1: &DenseMatrix,
    u2: &DenseMatrix,
    v1: &DenseMatrix,
    v2: &DenseMatrix,
) -> Result<PerturbationReport> {
    let f = Function2D::TrigPoly(p.clone());
    let [eu1, eu2, ev1, ev2] = decompose4([u1, u2, v1, v2], SpectrumKind::Unitary)?;
    let n = u1.nrows();
    let r1 = build_torus_rep_d1(p, &eu1, &eu2, &ev1)?;
    let r2 = build_torus_rep_d2(p, &eu2, &ev1, &ev2)?;
    let first = toi_haagerup_like_1(&r1, &eu1, &(u1 - u2), &eu2, &identity(n), &ev1)?;
    let second = toi_haagerup_like_2(&r2, &eu2, &identity(n), &ev1, &(v1 - v2), &ev2)?;
    Ok(report(apply_f_uv(&f, &eu1, &ev1)?, apply_f_uv(&f, &eu2, &ev1)?, apply_f_uv(&f, &eu2, &ev2)?, first, second))
}

/// Lipschitz ratio `‖f(A,B) − f(α,β) I‖_p / max(‖A − αI‖_p, ‖B − βI‖_p)`;
/// `None` when both perturbations vanish.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LipschitzRatio {
    pub p: f64,
    pub difference: f64,
    pub perturbation: f64,
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalarPerturbationReport {
    pub residual: Residual,
    pub ratios: Vec<LipschitzRatio>,
}

fn scalar_measure(alpha: f64, n: usize) -> Result<SpectralMeasure> {
    SpectralMeasure::from_frame(SpectrumKind::Hermitian, &vec![C64::new(alpha, 0.0); n], identity(n))
}

/// Checks `f(A,B) − f(αI,B) = (A − αI) g(A,B)` and reports Lipschitz
/// ratios against `f(αI, βI)` for each `p` in `ps`.
pub fn verify_identity_102(
    f: &Function2D,
    a: &DenseMatrix,
    b: &DenseMatrix,
    alpha: f64,
    beta: f64,
    ps: &[f64],
) -> Result<ScalarPerturbationReport> {
    let n = a.nrows();
    let ea = spectral_decompose(a, SpectrumKind::Hermitian)?;
    let eb = spectral_decompose(b, SpectrumKind::Hermitian)?;
    let f_ab = apply_f_ab(f, &ea, &eb)?;
    let f_alpha_b = apply_f_ab(f, &scalar_measure(alpha, n)?, &eb)?;
    let (xs, ys) = (ea.real_values(), eb.real_values());
    let mut g = DenseMatrix::zeros(xs.len(), ys.len());
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            g[(i, j)] = divided_diff_1(f, alpha, x, y)?;
        }
    }
    let shifted = a - identity(n) * C64::new(alpha, 0.0);
    let rhs = &shifted * double_spectral_sum(&g, &ea, &eb)?;
    let residual = Residual::of(&(&f_ab - &f_alpha_b), &rhs);

    let diff = &f_ab - identity(n) * f.eval(alpha, beta);
    let b_shift = b - identity(n) * C64::new(beta, 0.0);
    let mut ratios = Vec::with_capacity(ps.len());
    for &p in ps {
        let difference = schatten_norm(&diff, p)?;
        let perturbation = schatten_norm(&shifted, p)?.max(schatten_norm(&b_shift, p)?);
        let ratio = if perturbation > 0.0 { Some(difference / perturbation) } else { None };
        ratios.push(LipschitzRatio { p, difference, perturbation, ratio });
    }
    Ok(ScalarPerturbationReport { residual, ratios })
}
