//! Finite representations of functions of three variables.
//!
//! Every factor is stored as a value table on a finite support, one row
//! per support point. Evaluators match the points of the spectral measures
//! against these supports by value.

use crate::matcore::{op_norm, SpectralMeasure};
use crate::{re, DenseMatrix, Error, Result, C64};

/// Relative tolerance for matching spectral points with support points.
pub const SUPPORT_TOL: f64 = 1e-9;

/// Values of a function of three variables on a product of finite
/// supports.
#[derive(Debug, Clone)]
pub struct Table3 {
    pub dims: [usize; 3],
    pub data: Vec<C64>,
}

impl Table3 {
    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    data.push(f(i, j, k));
                }
            }
        }
        Table3 { dims, data }
    }

    pub fn try_from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Result<C64>) -> Result<Self> {
        let mut data = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    data.push(f(i, j, k)?);
                }
            }
        }
        Ok(Table3 { dims, data })
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> C64 {
        self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }
}

/// Index of each spectral point of `sm` inside `support`.
pub fn locate(support: &[C64], sm: &SpectralMeasure) -> Result<Vec<usize>> {
    sm.values()
        .iter()
        .map(|&v| {
            support
                .iter()
                .position(|&s| (s - v).norm() <= SUPPORT_TOL * (1.0 + v.norm()))
                .ok_or_else(|| Error::SupportNotCovered(format!("{v}")))
        })
        .collect()
}

fn sup_row_l2(m: &DenseMatrix) -> f64 {
    (0..m.nrows()).map(|i| m.row(i).norm()).fold(0.0, f64::max)
}

fn sup_op(ms: &[DenseMatrix]) -> f64 {
    ms.iter().map(op_norm).fold(0.0, f64::max)
}

fn check_rows(name: &str, m: &DenseMatrix, support: &[C64], cols: usize) -> Result<()> {
    if m.nrows() != support.len() || m.ncols() != cols {
        return Err(Error::DimensionMismatch(format!(
            "{name} table is {}x{}, expected {}x{cols}",
            m.nrows(),
            m.ncols(),
            support.len()
        )));
    }
    Ok(())
}

fn check_family(name: &str, ms: &[DenseMatrix], support: &[C64], rows: usize, cols: usize) -> Result<()> {
    if ms.len() != support.len() {
        return Err(Error::DimensionMismatch(format!("{name} has {} matrices for {} points", ms.len(), support.len())));
    }
    for m in ms {
        if m.nrows() != rows || m.ncols() != cols {
            return Err(Error::DimensionMismatch(format!(
                "{name} matrix is {}x{}, expected {rows}x{cols}",
                m.nrows(),
                m.ncols()
            )));
        }
    }
    Ok(())
}

/// `Ψ(x₁,x₂,x₃) = Σ_{j,k} α_j(x₁) β_{jk}(x₂) γ_k(x₃)`.
#[derive(Debug, Clone)]
pub struct HaagerupRep {
    pub supports: [Vec<C64>; 3],
    /// `α`, one row per point of the first support, `J` columns.
    pub alpha: DenseMatrix,
    /// `β(x₂)`, one `J × K` matrix per point of the second support.
    pub beta: Vec<DenseMatrix>,
    /// `γ`, one row per point of the third support, `K` columns.
    pub gamma: DenseMatrix,
}

impl HaagerupRep {
    pub fn new(supports: [Vec<C64>; 3], alpha: DenseMatrix, beta: Vec<DenseMatrix>, gamma: DenseMatrix) -> Result<Self> {
        let (j, k) = (alpha.ncols(), gamma.ncols());
        check_rows("alpha", &alpha, &supports[0], j)?;
        check_family("beta", &beta, &supports[1], j, k)?;
        check_rows("gamma", &gamma, &supports[2], k)?;
        Ok(HaagerupRep { supports, alpha, beta, gamma })
    }

    /// `sup‖α‖_{ℓ²} · sup‖β‖_{op} · sup‖γ‖_{ℓ²}`, an upper bound for the
    /// Haagerup tensor norm of the represented function.
    pub fn norm(&self) -> f64 {
        sup_row_l2(&self.alpha) * sup_op(&self.beta) * sup_row_l2(&self.gamma)
    }

    /// Value at support indices.
    pub fn eval(&self, i: usize, j: usize, k: usize) -> C64 {
        (self.alpha.row(i) * &self.beta[j] * self.gamma.row(k).transpose())[(0, 0)]
    }
}

/// `Ψ(x₁,x₂,x₃) = Σ_{j,k} α_j(x₁) β_k(x₂) γ_{jk}(x₃)`.
#[derive(Debug, Clone)]
pub struct HaagerupLikeRep1 {
    pub supports: [Vec<C64>; 3],
    pub alpha: DenseMatrix,
    pub beta: DenseMatrix,
    /// `γ(x₃)`, one `J × K` matrix per point of the third support.
    pub gamma: Vec<DenseMatrix>,
    /// Extra norm contributed by an exact correction block, if any.
    pub correction_norm: f64,
}

impl HaagerupLikeRep1 {
    pub fn new(supports: [Vec<C64>; 3], alpha: DenseMatrix, beta: DenseMatrix, gamma: Vec<DenseMatrix>) -> Result<Self> {
        let (j, k) = (alpha.ncols(), beta.ncols());
        check_rows("alpha", &alpha, &supports[0], j)?;
        check_rows("beta", &beta, &supports[1], k)?;
        check_family("gamma", &gamma, &supports[2], j, k)?;
        Ok(HaagerupLikeRep1 { supports, alpha, beta, gamma, correction_norm: 0.0 })
    }

    /// `sup‖α‖_{ℓ²} · sup‖β‖_{ℓ²} · sup‖γ‖_{op}`.
    pub fn norm(&self) -> f64 {
        sup_row_l2(&self.alpha) * sup_row_l2(&self.beta) * sup_op(&self.gamma)
    }

    pub fn eval(&self, i: usize, j: usize, k: usize) -> C64 {
        (self.alpha.row(i) * &self.gamma[k] * self.beta.row(j).transpose())[(0, 0)]
    }

    /// Haagerup representation of `Φ(x₂,x₃,x₁) = Ψ(x₁,x₂,x₃)`.
    pub fn rotated(&self) -> HaagerupRep {
        HaagerupRep {
            supports: [self.supports[1].clone(), self.supports[2].clone(), self.supports[0].clone()],
            alpha: self.beta.clone(),
            beta: self.gamma.iter().map(|g| g.transpose()).collect(),
            gamma: self.alpha.clone(),
        }
    }

    /// Representation of `Ψ₁ + Ψ₂` on common supports whose norm is at
    /// most the sum of the two norms.
    pub fn direct_sum(&self, other: &HaagerupLikeRep1) -> Result<HaagerupLikeRep1> {
        for s in 0..3 {
            if self.supports[s] != other.supports[s] {
                return Err(Error::DimensionMismatch("direct sum needs identical supports".into()));
            }
        }
        let (a1, b1, g1) = (sup_row_l2(&self.alpha), sup_row_l2(&self.beta), sup_op(&self.gamma));
        let (a2, b2, g2) = (sup_row_l2(&other.alpha), sup_row_l2(&other.beta), sup_op(&other.gamma));
        let n1 = a1 * b1 * g1;
        let n2 = a2 * b2 * g2;
        if n2 == 0.0 {
            return Ok(self.clone());
        }
        if n1 == 0.0 {
            return Ok(other.clone());
        }
        let s = (n2 / n1).sqrt();
        let alpha = hcat(&(&self.alpha * re(1.0 / a1)), &(&other.alpha * re(s / a2)));
        let beta = hcat(&(&self.beta * re(1.0 / b1)), &(&other.beta * re(s / b2)));
        let gamma = self
            .gamma
            .iter()
            .zip(&other.gamma)
            .map(|(x, y)| block_diag(&(x * re(a1 * b1)), &(y * re(a2 * b2 / (s * s)))))
            .collect();
        Ok(HaagerupLikeRep1 {
            supports: self.supports.clone(),
            alpha,
            beta,
            gamma,
            correction_norm: self.correction_norm + other.correction_norm,
        })
    }
}

/// `Ψ(x₁,x₂,x₃) = Σ_{j,k} α_{jk}(x₁) β_j(x₂) γ_k(x₃)`.
#[derive(Debug, Clone)]
pub struct HaagerupLikeRep2 {
    pub supports: [Vec<C64>; 3],
    /// `α(x₁)`, one `J × K` matrix per point of the first support.
    pub alpha: Vec<DenseMatrix>,
    pub beta: DenseMatrix,
    pub gamma: DenseMatrix,
    pub correction_norm: f64,
}

impl HaagerupLikeRep2 {
    pub fn new(supports: [Vec<C64>; 3], alpha: Vec<DenseMatrix>, beta: DenseMatrix, gamma: DenseMatrix) -> Result<Self> {
        let (j, k) = (beta.ncols(), gamma.ncols());
        check_family("alpha", &alpha, &supports[0], j, k)?;
        check_rows("beta", &beta, &supports[1], j)?;
        check_rows("gamma", &gamma, &supports[2], k)?;
        Ok(HaagerupLikeRep2 { supports, alpha, beta, gamma, correction_norm: 0.0 })
    }

    /// `sup‖α‖_{op} · sup‖β‖_{ℓ²} · sup‖γ‖_{ℓ²}`.
    pub fn norm(&self) -> f64 {
        sup_op(&self.alpha) * sup_row_l2(&self.beta) * sup_row_l2(&self.gamma)
    }

    pub fn eval(&self, i: usize, j: usize, k: usize) -> C64 {
        (self.beta.row(j) * &self.alpha[i] * self.gamma.row(k).transpose())[(0, 0)]
    }

    /// Haagerup representation of `Φ(x₃,x₁,x₂) = Ψ(x₁,x₂,x₃)`.
    pub fn rotated(&self) -> HaagerupRep {
        HaagerupRep {
            supports: [self.supports[2].clone(), self.supports[0].clone(), self.supports[1].clone()],
            alpha: self.gamma.clone(),
            beta: self.alpha.iter().map(|a| a.transpose()).collect(),
            gamma: self.beta.clone(),
        }
    }

    /// Representation of `Ψ₁ + Ψ₂` with norm at most the sum of norms.
    pub fn direct_sum(&self, other: &HaagerupLikeRep2) -> Result<HaagerupLikeRep2> {
        for s in 0..3 {
            if self.supports[s] != other.supports[s] {
                return Err(Error::DimensionMismatch("direct sum needs identical supports".into()));
            }
        }
        let (g1, b1, c1) = (sup_op(&self.alpha), sup_row_l2(&self.beta), sup_row_l2(&self.gamma));
        let (g2, b2, c2) = (sup_op(&other.alpha), sup_row_l2(&other.beta), sup_row_l2(&other.gamma));
        let n1 = g1 * b1 * c1;
        let n2 = g2 * b2 * c2;
        if n2 == 0.0 {
            return Ok(self.clone());
        }
        if n1 == 0.0 {
            return Ok(other.clone());
        }
        let s = (n2 / n1).sqrt();
        let beta = hcat(&(&self.beta * re(1.0 / b1)), &(&other.beta * re(s / b2)));
        let gamma = hcat(&(&self.gamma * re(1.0 / c1)), &(&other.gamma * re(s / c2)));
        let alpha = self
            .alpha
            .iter()
            .zip(&other.alpha)
            .map(|(x, y)| block_diag(&(x * re(b1 * c1)), &(y * re(b2 * c2 / (s * s)))))
            .collect();
        Ok(HaagerupLikeRep2 {
            supports: self.supports.clone(),
            alpha,
            beta,
            gamma,
            correction_norm: self.correction_norm + other.correction_norm,
        })
    }
}

/// `Ψ(x₁,x₂,x₃) = Σ_m φ_m(x₁) ψ_m(x₂) χ_m(x₃)`.
#[derive(Debug, Clone)]
pub struct ProjectiveRep {
    pub supports: [Vec<C64>; 3],
    pub phi: DenseMatrix,
    pub psi: DenseMatrix,
    pub chi: DenseMatrix,
}

impl ProjectiveRep {
    pub fn new(supports: [Vec<C64>; 3], phi: DenseMatrix, psi: DenseMatrix, chi: DenseMatrix) -> Result<Self> {
        let m = phi.ncols();
        check_rows("phi", &phi, &supports[0], m)?;
        check_rows("psi", &psi, &supports[1], m)?;
        check_rows("chi", &chi, &supports[2], m)?;
        Ok(ProjectiveRep { supports, phi, psi, chi })
    }

    fn sup_col(m: &DenseMatrix, t: usize) -> f64 {
        m.column(t).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `Σ_m ‖φ_m‖_∞ ‖ψ_m‖_∞ ‖χ_m‖_∞`.
    pub fn norm(&self) -> f64 {
        (0..self.phi.ncols())
            .map(|t| Self::sup_col(&self.phi, t) * Self::sup_col(&self.psi, t) * Self::sup_col(&self.chi, t))
            .sum()
    }

    pub fn eval(&self, i: usize, j: usize, k: usize) -> C64 {
        (0..self.phi.ncols()).map(|t| self.phi[(i, t)] * self.psi[(j, t)] * self.chi[(k, t)]).sum()
    }

    /// Haagerup representation with diagonal middle factor:
    /// `α_m = √c_m φ_m/‖φ_m‖`, `β_mm = ψ_m/‖ψ_m‖`, `γ_m = √c_m χ_m/‖χ_m‖`,
    /// where `c_m` is the product of the three sup norms. Its norm is at most
    /// [`ProjectiveRep::norm`].
    pub fn to_haagerup(&self) -> HaagerupRep {
        let m = self.phi.ncols();
        let mut alpha = DenseMatrix::zeros(self.phi.nrows(), m);
        let mut gamma = DenseMatrix::zeros(self.chi.nrows(), m);
        let mut beta = vec![DenseMatrix::zeros(m, m); self.psi.nrows()];
        for t in 0..m {
            let (a, b, g) = (Self::sup_col(&self.phi, t), Self::sup_col(&self.psi, t), Self::sup_col(&self.chi, t));
            let ct = a * b * g;
            if ct == 0.0 {
                continue;
            }
            let r = ct.sqrt();
            alpha.set_column(t, &(self.phi.column(t) * re(r / a)));
            gamma.set_column(t, &(self.chi.column(t) * re(r / g)));
            for (x, bm) in beta.iter_mut().enumerate() {
                bm[(t, t)] = self.psi[(x, t)] / b;
            }
        }
        HaagerupRep { supports: self.supports.clone(), alpha, beta, gamma }
    }
}

fn hcat(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let mut out = DenseMatrix::zeros(a.nrows(), a.ncols() + b.ncols());
    out.columns_mut(0, a.ncols()).copy_from(a);
    out.columns_mut(a.ncols(), b.ncols()).copy_from(b);
    out
}

fn block_diag(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let mut out = DenseMatrix::zeros(a.nrows() + b.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    out.view_mut((a.nrows(), a.ncols()), (b.nrows(), b.ncols())).copy_from(b);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn support(n: usize) -> Vec<C64> {
        (0..n).map(|i| re(i as f64)).collect()
    }

    fn tab(r: usize, cols: usize, s: f64) -> DenseMatrix {
        DenseMatrix::from_fn(r, cols, |i, j| c(((i + 1) as f64 * s + j as f64).sin(), (j as f64 * s - i as f64).cos()))
    }

    #[test]
    fn rotation_preserves_values() {
        let sup = [support(2), support(3), support(2)];
        let rep = HaagerupLikeRep1::new(sup, tab(2, 3, 0.3), tab(3, 4, 0.7), (0..2).map(|i| tab(3, 4, 1.1 + i as f64)).collect())
            .unwrap();
        let rot = rep.rotated();
        for i in 0..2 {
            for j in 0..3 {
                for k in 0..2 {
                    assert!((rep.eval(i, j, k) - rot.eval(j, k, i)).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn direct_sum_adds_values_and_norms() {
        let sup = [support(2), support(2), support(3)];
        let r1 = HaagerupLikeRep1::new(sup.clone(), tab(2, 2, 0.3), tab(2, 3, 0.5), (0..3).map(|i| tab(2, 3, i as f64)).collect())
            .unwrap();
        let r2 = HaagerupLikeRep1::new(sup, tab(2, 4, 0.9), tab(2, 1, 0.2), (0..3).map(|i| tab(4, 1, 2.0 * i as f64)).collect())
            .unwrap();
        let s = r1.direct_sum(&r2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..3 {
                    assert!((s.eval(i, j, k) - r1.eval(i, j, k) - r2.eval(i, j, k)).norm() < 1e-12);
                }
            }
        }
        assert!(s.norm() <= (r1.norm() + r2.norm()) * (1.0 + 1e-12));
    }

    #[test]
    fn projective_embedding_preserves_values_and_norm_bound() {
        let sup = [support(3), support(2), support(2)];
        let p = ProjectiveRep::new(sup, tab(3, 5, 0.4), tab(2, 5, 1.3), tab(2, 5, 2.2)).unwrap();
        let h = p.to_haagerup();
        for i in 0..3 {
            for j in 0..2 {
                for k in 0..2 {
                    assert!((p.eval(i, j, k) - h.eval(i, j, k)).norm() < 1e-12);
                }
            }
        }
        assert!(h.norm() <= p.norm() * (1.0 + 1e-12));
    }
}
