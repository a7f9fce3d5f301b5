//! The DFT counterexample family.
//!
//! `A₁ = Σ 2j P_j`, `A₂ = Σ (2j+1) P_j`, `B = Σ k Q_k` for `j, k = 1..N`,
//! with `P_j` projecting onto the standard basis vector `g_j` and `Q_k`
//! onto the DFT column `h_k`, `(h_k)_j = u_{jk} = N^{−1/2} e^{2πijk/N}`.
//! The function `f(x,y) = Σ τ_{jk} φ(x − 2j) φ(y − k)`, `τ = √N ū` and
//! `φ(x) = (1 − cos 2πx)/(2π²x²)`, takes the value `τ_{jk}` at `(2j, k)`
//! and vanishes at `(2j+1, k)`, since `φ` is 1 at 0 and 0 at the other
//! integers. Hence `f(A₂,B) = 0` and `f(A₁,B) = N^{−1/2}(Σg_j)(Σh_k)*`,
//! a rank-one matrix of every Schatten norm `√N`, while `A₁ − A₂ = −I`.

use serde::Serialize;

use crate::besov::{besov_norm_plane_dyadic, plane_pieces, LpFilterBank, PlaneDyadicConfig};
use crate::funcalc::atoms::{cos_pi, sin_pi};
use crate::funcalc::{apply_f_ab, Atom, AtomSum2, Function2D};
use crate::matcore::{schatten_from_singular, singular_values, SpectralMeasure, SpectrumKind};
use crate::toi::Verdict;
use crate::{c, re, DenseMatrix, Error, Result};

use super::records::{relative_verdict, ScanRecord};

/// Relative tolerance for the closed-form laws.
pub const LAW_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CounterexampleInstance {
    pub n: usize,
    /// Spectral scale `ε`; 1 for the unscaled family.
    pub epsilon: f64,
    pub u: DenseMatrix,
    pub tau: DenseMatrix,
    pub a1: DenseMatrix,
    pub a2: DenseMatrix,
    pub b: DenseMatrix,
    pub f: AtomSum2,
    pub e_a1: SpectralMeasure,
    pub e_a2: SpectralMeasure,
    pub e_b: SpectralMeasure,
}

/// `u_{jk} = N^{−1/2} e^{2πijk/N}`, `j, k = 1..N`, with the phase reduced
/// modulo `N` before evaluation.
pub fn dft_frame(n: usize) -> DenseMatrix {
    let s = 1.0 / (n as f64).sqrt();
    DenseMatrix::from_fn(n, n, |a, b| {
        let r = ((a + 1) * (b + 1)) % n;
        let t = 2.0 * r as f64 / n as f64;
        c(cos_pi(t), sin_pi(t)) * s
    })
}

fn diagonal(values: &[f64]) -> DenseMatrix {
    DenseMatrix::from_diagonal(&nalgebra::DVector::from_iterator(values.len(), values.iter().map(|&v| re(v))))
}

impl CounterexampleInstance {
    /// `f(A₁,B) − f(A₂,B)`.
    pub fn difference(&self) -> Result<DenseMatrix> {
        let f = Function2D::BandLimited(self.f.clone());
        Ok(apply_f_ab(&f, &self.e_a1, &self.e_b)? - apply_f_ab(&f, &self.e_a2, &self.e_b)?)
    }

    pub fn f_a1(&self) -> Result<DenseMatrix> {
        apply_f_ab(&Function2D::BandLimited(self.f.clone()), &self.e_a1, &self.e_b)
    }

    pub fn f_a2(&self) -> Result<DenseMatrix> {
        apply_f_ab(&Function2D::BandLimited(self.f.clone()), &self.e_a2, &self.e_b)
    }
}

/// Instance scaled by `ε`: spectra multiplied by `ε` and
/// `f_ε(x,y) = ε f(x/ε, y/ε)`.
pub fn build_scaled_counterexample(n: usize, epsilon: f64) -> Result<CounterexampleInstance> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("counterexample needs N >= 2, got {n}")));
    }
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::InvalidInput(format!("scale must be positive, got {epsilon}")));
    }
    let u = dft_frame(n);
    let tau = u.map(|z| z.conj() * (n as f64).sqrt());
    let x1: Vec<f64> = (1..=n).map(|j| epsilon * (2 * j) as f64).collect();
    let x2: Vec<f64> = (1..=n).map(|j| epsilon * (2 * j + 1) as f64).collect();
    let y: Vec<f64> = (1..=n).map(|k| epsilon * k as f64).collect();
    let id = DenseMatrix::identity(n, n);
    let e_a1 = SpectralMeasure::from_frame(SpectrumKind::Hermitian, &x1.iter().map(|&v| re(v)).collect::<Vec<_>>(), id.clone())?;
    let e_a2 = SpectralMeasure::from_frame(SpectrumKind::Hermitian, &x2.iter().map(|&v| re(v)).collect::<Vec<_>>(), id)?;
    let e_b = SpectralMeasure::from_frame(SpectrumKind::Hermitian, &y.iter().map(|&v| re(v)).collect::<Vec<_>>(), u.clone())?;
    let b = &u * diagonal(&y) * u.adjoint();
    let base = AtomSum2::new(
        (1..=n).map(|j| Atom::Fejer { center: (2 * j) as f64, width: 1.0 }).collect(),
        (1..=n).map(|k| Atom::Fejer { center: k as f64, width: 1.0 }).collect(),
        tau.clone(),
    )?;
    let f = if epsilon == 1.0 { base } else { base.dilate(epsilon, epsilon) };
    Ok(CounterexampleInstance { n, epsilon, u, tau, a1: diagonal(&x1), a2: diagonal(&x2), b, f, e_a1, e_a2, e_b })
}

pub fn build_counterexample(n: usize) -> Result<CounterexampleInstance> {
    build_scaled_counterexample(n, 1.0)
}

/// `N^{1/2 − 1/p}`.
pub fn growth_law(n: usize, p: f64) -> f64 {
    (n as f64).powf(0.5 - 1.0 / p)
}

/// Ratio `‖f(A₁,B) − f(A₂,B)‖_p / ‖A₁ − A₂‖_p` for every `(N, p)`, checked
/// against `N^{1/2−1/p}`.
pub fn measure_growth(ns: &[usize], ps: &[f64]) -> Result<Vec<ScanRecord>> {
    let mut out = Vec::with_capacity(ns.len() * ps.len());
    for &n in ns {
        let inst = build_counterexample(n)?;
        let sd = singular_values(&inst.difference()?);
        let sp = singular_values(&(&inst.a1 - &inst.a2));
        for &p in ps {
            let measured = schatten_from_singular(&sd, p)? / schatten_from_singular(&sp, p)?;
            let predicted = growth_law(n, p);
            out.push(ScanRecord {
                family: "counterexample".into(),
                n,
                p,
                epsilon: 1.0,
                measured,
                predicted: Some(predicted),
                bound: None,
                verdict: Some(relative_verdict(measured, predicted, LAW_TOL)),
            });
        }
    }
    Ok(out)
}

/// `B¹_{∞,1}` norms of `f` and of `f_ε` from their dyadic piece lists.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesovInvariance {
    pub level_shift: i32,
    pub original: f64,
    pub scaled: f64,
    /// The original piece list rescaled by the level shift.
    pub predicted: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScaledReport {
    pub n: usize,
    pub epsilon: f64,
    /// `(p, ‖f_ε(εA₁,εB) − f_ε(εA₂,εB)‖_p, ‖εA₁ − εA₂‖_p)`.
    pub norms: Vec<(f64, f64, f64)>,
    pub besov: Option<BesovInvariance>,
}

/// `m` with `ε = 2^{−m}`, when `ε` is a power of two.
pub fn dyadic_level(epsilon: f64) -> Option<i32> {
    let m = -epsilon.log2().round();
    if m.abs() < 1000.0 && 2f64.powi(-(m as i32)) == epsilon {
        Some(m as i32)
    } else {
        None
    }
}

/// Scaled family measurements, with the Besov-norm invariance check for
/// dyadic `ε`.
pub fn scaled_counterexample(
    n: usize,
    epsilon: f64,
    ps: &[f64],
    plane: Option<&PlaneDyadicConfig>,
) -> Result<ScaledReport> {
    let inst = build_scaled_counterexample(n, epsilon)?;
    let sd = singular_values(&inst.difference()?);
    let sp = singular_values(&(&inst.a1 - &inst.a2));
    let mut norms = Vec::with_capacity(ps.len());
    for &p in ps {
        norms.push((p, schatten_from_singular(&sd, p)?, schatten_from_singular(&sp, p)?));
    }
    let besov = match (plane, dyadic_level(epsilon)) {
        (Some(cfg), Some(m)) => {
            let bank = LpFilterBank::default();
            let base = build_counterexample(n)?;
            let fam = plane_pieces(&Function2D::BandLimited(base.f), &bank, cfg)?;
            let fam_eps = plane_pieces(&Function2D::BandLimited(inst.f.clone()), &bank, cfg)?;
            Some(BesovInvariance {
                level_shift: m,
                original: besov_norm_plane_dyadic(&fam, 0),
                scaled: besov_norm_plane_dyadic(&fam_eps, 0),
                predicted: besov_norm_plane_dyadic(&fam, m),
            })
        }
        _ => None,
    };
    Ok(ScaledReport { n, epsilon, norms, besov })
}

impl ScaledReport {
    /// Difference norms against `ε√N`, perturbation norms against
    /// `εN^{1/p}`, and the Besov norm of `f_ε` against that of `f`.
    pub fn records(&self) -> Vec<ScanRecord> {
        let root_n = (self.n as f64).sqrt();
        let mut out = Vec::new();
        for &(p, diff, pert) in &self.norms {
            let pd = self.epsilon * root_n;
            let pp = self.epsilon * (self.n as f64).powf(1.0 / p);
            for (family, measured, predicted) in [("scaled-difference", diff, pd), ("scaled-perturbation", pert, pp)] {
                out.push(ScanRecord {
                    family: family.into(),
                    n: self.n,
                    p,
                    epsilon: self.epsilon,
                    measured,
                    predicted: Some(predicted),
                    bound: None,
                    verdict: Some(relative_verdict(measured, predicted, LAW_TOL)),
                });
            }
        }
        if let Some(b) = &self.besov {
            out.push(ScanRecord {
                family: "scaled-besov".into(),
                n: self.n,
                p: f64::INFINITY,
                epsilon: self.epsilon,
                measured: b.scaled,
                predicted: Some(b.original),
                bound: None,
                verdict: Some(relative_verdict(b.scaled, b.original, LAW_TOL)),
            });
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.records().iter().all(|r| r.verdict == Some(Verdict::Pass))
    }
}

/// Smallest `N` in `ns` (with `ε = N^{−1/2}`) at which the scaled family
/// violates `‖f_ε(εA₁,εB) − f_ε(εA₂,εB)‖ ≤ C ‖εA₁ − εA₂‖^α`, together with
/// the two sides of the violated inequality.
pub fn holder_witness(c_const: f64, alpha: f64, ns: &[usize]) -> Result<Option<(usize, f64, f64)>> {
    for &n in ns {
        let eps = 1.0 / (n as f64).sqrt();
        let inst = build_scaled_counterexample(n, eps)?;
        let diff = singular_values(&inst.difference()?)[0];
        let pert = singular_values(&(&inst.a1 - &inst.a2))[0];
        let rhs = c_const * pert.powf(alpha);
        if diff > rhs {
            return Ok(Some((n, diff, rhs)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::op_norm;
    use crate::C64;

    #[test]
    fn frame_pairing_is_the_dft() {
        let inst = build_counterexample(5).unwrap();
        let g = DenseMatrix::identity(5, 5);
        for j in 0..5 {
            for k in 0..5 {
                let h_k = inst.e_b.frame().column(k);
                let pairing: C64 = h_k.iter().zip(g.column(j).iter()).map(|(a, b)| a * b.conj()).sum();
                assert!((pairing - inst.u[(j, k)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn second_operator_value_vanishes_exactly() {
        let inst = build_counterexample(8).unwrap();
        assert_eq!(inst.f_a2().unwrap().norm(), 0.0);
    }

    #[test]
    fn n2_difference_norm() {
        let inst = build_counterexample(2).unwrap();
        assert!((op_norm(&inst.difference().unwrap()) - 2f64.sqrt()).abs() < 1e-12);
        assert!((op_norm(&(&inst.a1 - &inst.a2)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn dyadic_levels() {
        assert_eq!(dyadic_level(0.25), Some(2));
        assert_eq!(dyadic_level(1.0), Some(0));
        assert_eq!(dyadic_level(0.3), None);
    }
}
