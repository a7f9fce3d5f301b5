//! Evaluation of `W = ∭ Ψ(x₁,x₂,x₃) dE₁(x₁) T dE₂(x₂) R dE₃(x₃)`.
//!
//! All evaluators work in the eigenframes `V₁, V₂, V₃` of the three
//! measures, where `∫ g dE_s` is diagonal. [`toi_direct`] sums the
//! integrand over spectral triples and is the reference; the others follow
//! the structure of a representation.

use rayon::prelude::*;

use super::reps::{locate, HaagerupLikeRep1, HaagerupLikeRep2, HaagerupRep, ProjectiveRep, Table3};
use crate::linalg::trace_of_product;
use crate::matcore::SpectralMeasure;
use crate::{DenseMatrix, Error, Result, C64};

struct Frames<'a> {
    e: [&'a SpectralMeasure; 3],
    t: DenseMatrix,
    r: DenseMatrix,
}

impl<'a> Frames<'a> {
    fn new(
        e1: &'a SpectralMeasure,
        t: &DenseMatrix,
        e2: &'a SpectralMeasure,
        r: &DenseMatrix,
        e3: &'a SpectralMeasure,
    ) -> Result<Self> {
        let n = e1.dim();
        for (name, m) in [("T", t), ("R", r)] {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch(format!("{name} is {}x{}, expected {n}x{n}", m.nrows(), m.ncols())));
            }
        }
        if e2.dim() != n || e3.dim() != n {
            return Err(Error::DimensionMismatch("spectral measures of different dimensions".into()));
        }
        let t = e1.frame().adjoint() * t * e2.frame();
        let r = e2.frame().adjoint() * r * e3.frame();
        Ok(Frames { e: [e1, e2, e3], t, r })
    }

    fn finish(&self, w: DenseMatrix) -> DenseMatrix {
        self.e[0].frame() * w * self.e[2].frame().adjoint()
    }
}

/// Reference evaluator `Σ_{i,j,k} Ψ(λ_i, μ_j, ν_k) P_i T Q_j R S_k`.
pub fn toi_direct(
    psi: impl Fn(C64, C64, C64) -> C64 + Sync,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    let (v1, v2, v3) = (e1.values(), e2.values(), e3.values());
    toi_direct_indexed(|i, j, k| psi(v1[i], v2[j], v3[k]), e1, t, e2, r, e3)
}

/// [`toi_direct`] for an integrand given by its values on the spectral
/// points, indexed as the points of `e1`, `e2`, `e3`.
pub fn toi_direct_table(
    table: &Table3,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    if table.dims != [e1.len(), e2.len(), e3.len()] {
        return Err(Error::DimensionMismatch(format!(
            "integrand table {:?} for spectral point counts {:?}",
            table.dims,
            [e1.len(), e2.len(), e3.len()]
        )));
    }
    toi_direct_indexed(|i, j, k| table.get(i, j, k), e1, t, e2, r, e3)
}

/// [`toi_direct`] for an integrand addressed by spectral point indices.
/// The integrand is evaluated on the fly, so memory stays quadratic.
pub fn toi_direct_indexed(
    psi: impl Fn(usize, usize, usize) -> C64 + Sync,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    let fr = Frames::new(e1, t, e2, r, e3)?;
    let (p1, p2, p3) = (e1.column_points(), e2.column_points(), e3.column_points());
    let n = e1.dim();
    let rows: Vec<Vec<C64>> = (0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|cc| {
                    let mut acc = C64::new(0.0, 0.0);
                    for b in 0..n {
                        acc += psi(p1[a], p2[b], p3[cc]) * fr.t[(a, b)] * fr.r[(b, cc)];
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let w = DenseMatrix::from_fn(n, n, |a, cc| rows[a][cc]);
    Ok(fr.finish(w))
}

fn column_table(values: &DenseMatrix, idx: &[usize], sm: &SpectralMeasure) -> DenseMatrix {
    let cols = sm.column_points();
    DenseMatrix::from_fn(cols.len(), values.ncols(), |a, j| values[(idx[cols[a]], j)])
}

/// Haagerup evaluator
/// `W = Σ_{j,k} (∫α_j dE₁) T (∫β_{jk} dE₂) R (∫γ_k dE₃)`.
pub fn toi_haagerup(
    rep: &HaagerupRep,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    let fr = Frames::new(e1, t, e2, r, e3)?;
    let w = haagerup_in_frames(rep, &fr)?;
    Ok(fr.finish(w))
}

fn haagerup_in_frames(rep: &HaagerupRep, fr: &Frames) -> Result<DenseMatrix> {
    let [e1, e2, e3] = fr.e;
    let i1 = locate(&rep.supports[0], e1)?;
    let i2 = locate(&rep.supports[1], e2)?;
    let i3 = locate(&rep.supports[2], e3)?;
    let alpha = column_table(&rep.alpha, &i1, e1);
    let gamma = column_table(&rep.gamma, &i3, e3);
    let cols2 = e2.column_points();
    let n = e1.dim();
    let jn = rep.alpha.ncols();
    let kn = rep.gamma.ncols();
    let mut w = DenseMatrix::zeros(n, n);
    for j in 0..jn {
        // Σ_k β_{jk}(x₂) γ_k(x₃) on frame columns, times R entrywise.
        let bj = DenseMatrix::from_fn(n, kn, |b, k| rep.beta[i2[cols2[b]]][(j, k)]);
        let y = (bj * gamma.transpose()).component_mul(&fr.r);
        let mut ty = &fr.t * y;
        for a in 0..n {
            let s = alpha[(a, j)];
            ty.row_mut(a).iter_mut().for_each(|z| *z *= s);
        }
        w += ty;
    }
    Ok(w)
}

/// Projective evaluator
/// `W = Σ_m (∫φ_m dE₁) T (∫ψ_m dE₂) R (∫χ_m dE₃)`.
pub fn toi_projective(
    rep: &ProjectiveRep,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    let fr = Frames::new(e1, t, e2, r, e3)?;
    let phi = column_table(&rep.phi, &locate(&rep.supports[0], e1)?, e1);
    let psi = column_table(&rep.psi, &locate(&rep.supports[1], e2)?, e2);
    let chi = column_table(&rep.chi, &locate(&rep.supports[2], e3)?, e3);
    let n = e1.dim();
    let mut w = DenseMatrix::zeros(n, n);
    for m in 0..rep.phi.ncols() {
        let left = DenseMatrix::from_fn(n, n, |a, b| phi[(a, m)] * fr.t[(a, b)] * psi[(b, m)]);
        let right = DenseMatrix::from_fn(n, n, |b, cc| fr.r[(b, cc)] * chi[(cc, m)]);
        w += left * right;
    }
    Ok(fr.finish(w))
}

/// Assembles `W` from the functional `Q ↦ trace(W Q)` by pairing with the
/// matrix units `E_{ab}`: `W_{ba} = trace(W E_{ab})`.
fn assemble_from_functional(n: usize, pairing: impl Fn(&DenseMatrix) -> Result<C64> + Sync) -> Result<DenseMatrix> {
    let entries: Vec<Result<(usize, usize, C64)>> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (a, b) = (idx / n, idx % n);
            let mut unit = DenseMatrix::zeros(n, n);
            unit[(a, b)] = C64::new(1.0, 0.0);
            Ok((b, a, pairing(&unit)?))
        })
        .collect();
    let mut w = DenseMatrix::zeros(n, n);
    for e in entries {
        let (i, j, v) = e?;
        w[(i, j)] = v;
    }
    Ok(w)
}

/// Evaluator for `Ψ = Σ α_j(x₁) β_k(x₂) γ_{jk}(x₃)`.
///
/// `W` is defined through `trace(W Q) = trace((∭Φ dE₂ R dE₃ Q dE₁) T)`
/// with `Φ(x₂,x₃,x₁) = Ψ(x₁,x₂,x₃)` in Haagerup form; the inner integral is
/// computed by the Haagerup evaluator for every matrix unit `Q`.
pub fn toi_haagerup_like_1(
    rep: &HaagerupLikeRep1,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    Frames::new(e1, t, e2, r, e3)?;
    let rot = rep.rotated();
    assemble_from_functional(e1.dim(), |q| {
        let inner = toi_haagerup(&rot, e2, r, e3, q, e1)?;
        Ok(trace_of_product(&inner, t))
    })
}

/// Evaluator for `Ψ = Σ α_{jk}(x₁) β_j(x₂) γ_k(x₃)`.
///
/// `W` is defined through `trace(W Q) = trace((∭Φ dE₃ Q dE₁ T dE₂) R)`
/// with `Φ(x₃,x₁,x₂) = Ψ(x₁,x₂,x₃)` in Haagerup form.
pub fn toi_haagerup_like_2(
    rep: &HaagerupLikeRep2,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> Result<DenseMatrix> {
    Frames::new(e1, t, e2, r, e3)?;
    let rot = rep.rotated();
    assemble_from_functional(e1.dim(), |q| {
        let inner = toi_haagerup(&rot, e3, q, e1, t, e2)?;
        Ok(trace_of_product(&inner, r))
    })
}

/// Literal projector sum `Σ_{i,j,k} Ψ_{ijk} P_i T Q_j R S_k`, quartic in the
/// dimension; kept as an independent check of [`toi_direct`].
pub fn toi_projector_sum(
    table: &Table3,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
) -> DenseMatrix {
    let p: Vec<DenseMatrix> = (0..e1.len()).map(|i| e1.projector(i)).collect();
    let q: Vec<DenseMatrix> = (0..e2.len()).map(|j| e2.projector(j)).collect();
    let s: Vec<DenseMatrix> = (0..e3.len()).map(|k| e3.projector(k)).collect();
    let n = e1.dim();
    let mut w = DenseMatrix::zeros(n, n);
    for (i, pi) in p.iter().enumerate() {
        for (j, qj) in q.iter().enumerate() {
            let left = pi * t * qj * r;
            for (k, sk) in s.iter().enumerate() {
                w += &left * sk * table.get(i, j, k);
            }
        }
    }
    w
}
