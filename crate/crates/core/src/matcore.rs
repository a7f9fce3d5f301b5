//! Dense matrices, spectral measures and Schatten norms.
//!
//! A [`SpectralMeasure`] stores the distinct eigenvalues of a self-adjoint
//! or unitary matrix together with an orthonormal eigenframe whose columns
//! are grouped by eigenvalue. Projectors are formed from the frame on
//! demand, so a 256-dimensional measure costs one frame rather than one
//! dense matrix per point.

use serde::{Deserialize, Serialize};

use crate::linalg::{hermitian_eigen, unitary_eigen};
use crate::{re, DenseMatrix, Error, Result, C64};

/// Relative tolerance for the self-adjointness and unitarity checks.
pub const NORMALITY_TOL: f64 = 1e-10;

/// Relative gap below which neighbouring eigenvalues are merged.
pub const CLUSTER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Hermitian,
    Unitary,
}

impl SpectrumKind {
    fn name(self) -> &'static str {
        match self {
            SpectrumKind::Hermitian => "self-adjoint",
            SpectrumKind::Unitary => "unitary",
        }
    }
}

/// Finite spectral measure `E = Σ_i δ_{λ_i} P_i`.
#[derive(Debug, Clone)]
pub struct SpectralMeasure {
    kind: SpectrumKind,
    values: Vec<C64>,
    frame: DenseMatrix,
    offsets: Vec<usize>,
}

impl SpectralMeasure {
    /// Builds a measure from an orthonormal frame and one eigenvalue per
    /// column. Columns with (nearly) equal values are merged into a single
    /// spectral point.
    pub fn from_frame(kind: SpectrumKind, column_values: &[C64], frame: DenseMatrix) -> Result<Self> {
        let n = frame.nrows();
        if frame.ncols() != n || column_values.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "frame is {}x{}, {} eigenvalues",
                frame.nrows(),
                frame.ncols(),
                column_values.len()
            )));
        }
        let mut order: Vec<usize> = (0..n).collect();
        let key = |v: C64| match kind {
            SpectrumKind::Hermitian => v.re,
            SpectrumKind::Unitary => unit_angle(v),
        };
        order.sort_by(|&a, &b| key(column_values[a]).total_cmp(&key(column_values[b])));

        let diameter = diameter(column_values);
        let tol = CLUSTER_TOL * (diameter + 1.0);
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &col in &order {
            match groups.last_mut() {
                Some(g) if (column_values[*g.last().unwrap()] - column_values[col]).norm() < tol => g.push(col),
                _ => groups.push(vec![col]),
            }
        }
        if kind == SpectrumKind::Unitary && groups.len() > 1 {
            let first = column_values[groups[0][0]];
            let last_group = groups.last().unwrap();
            if (column_values[*last_group.last().unwrap()] - first).norm() < tol {
                let tail = groups.pop().unwrap();
                groups[0].splice(0..0, tail);
            }
        }

        let mut values = Vec::with_capacity(groups.len());
        let mut offsets = Vec::with_capacity(groups.len() + 1);
        let mut sorted = DenseMatrix::zeros(n, n);
        let mut next = 0;
        for g in &groups {
            offsets.push(next);
            let mut mean = C64::new(0.0, 0.0);
            for &col in g {
                sorted.set_column(next, &frame.column(col));
                mean += column_values[col];
                next += 1;
            }
            mean /= g.len() as f64;
            values.push(match kind {
                SpectrumKind::Hermitian => re(mean.re),
                SpectrumKind::Unitary => mean / mean.norm(),
            });
        }
        offsets.push(n);
        Ok(SpectralMeasure { kind, values, frame: sorted, offsets })
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.frame.nrows()
    }

    /// Number of distinct spectral points.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Real parts of the spectral points, the natural coordinates for a
    /// self-adjoint matrix.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    /// Arguments of the spectral points in `[0, 2π)`.
    pub fn angles(&self) -> Vec<f64> {
        self.values.iter().map(|&v| unit_angle(v)).collect()
    }

    /// Orthonormal eigenframe with columns grouped by spectral point.
    pub fn frame(&self) -> &DenseMatrix {
        &self.frame
    }

    /// Columns of the frame belonging to point `i`.
    pub fn columns(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    /// Spectral point index of every frame column.
    pub fn column_points(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.len() {
            out.extend(std::iter::repeat(i).take(self.offsets[i + 1] - self.offsets[i]));
        }
        out
    }

    /// Orthogonal projector `P_i = F_i F_i*`.
    pub fn projector(&self, i: usize) -> DenseMatrix {
        let r = self.columns(i);
        let block = self.frame.columns(r.start, r.len());
        &block * block.adjoint()
    }

    /// `∫ g dE = Σ_i g(λ_i) P_i` for a function given by its values on the
    /// spectral points.
    pub fn integrate_values(&self, point_values: &[C64]) -> DenseMatrix {
        let cols = self.column_points();
        let mut scaled = self.frame.clone();
        for (j, &p) in cols.iter().enumerate() {
            let g = point_values[p];
            for x in scaled.column_mut(j).iter_mut() {
                *x *= g;
            }
        }
        scaled * self.frame.adjoint()
    }

    /// `∫ g dE` for a function of the spectral value.
    pub fn integrate(&self, g: impl Fn(C64) -> C64) -> DenseMatrix {
        let vals: Vec<C64> = self.values.iter().map(|&v| g(v)).collect();
        self.integrate_values(&vals)
    }

    /// Worst violation of `P_i² = P_i`, `P_i* = P_i`, `P_i P_j = 0` and
    /// `Σ P_i = I`, measured in Frobenius norm.
    pub fn projector_defect(&self) -> f64 {
        let n = self.dim();
        let projectors: Vec<DenseMatrix> = (0..self.len()).map(|i| self.projector(i)).collect();
        let mut worst: f64 = 0.0;
        let mut sum = DenseMatrix::zeros(n, n);
        for (i, p) in projectors.iter().enumerate() {
            worst = worst.max((p * p - p).norm());
            worst = worst.max((p.adjoint() - p).norm());
            for q in projectors.iter().skip(i + 1) {
                worst = worst.max((p * q).norm());
            }
            sum += p;
        }
        worst.max((sum - DenseMatrix::identity(n, n)).norm())
    }
}

/// Argument of a unit complex number in `[0, 2π)`.
pub fn unit_angle(z: C64) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        a + std::f64::consts::TAU
    } else {
        a
    }
}

fn diameter(values: &[C64]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            d = d.max((a - b).norm());
        }
    }
    d
}

fn check_finite_square(m: &DenseMatrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    check_finite(m)
}

fn check_finite(m: &DenseMatrix) -> Result<()> {
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            let z = m[(i, j)];
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Spectral decomposition of a self-adjoint or unitary matrix.
///
/// Self-adjointness is accepted when `‖M − M*‖_F ≤ 1e-10 ‖M‖_F`; unitarity
/// when `‖M*M − I‖_F ≤ 1e-10 √n`. Eigenvalues closer than
/// `1e-8 (diameter + 1)` are merged. Hermitian points are sorted
/// ascending, unitary points by argument in `[0, 2π)`.
pub fn spectral_decompose(m: &DenseMatrix, kind: SpectrumKind) -> Result<SpectralMeasure> {
    check_finite_square(m)?;
    let n = m.nrows();
    match kind {
        SpectrumKind::Hermitian => {
            let scale = m.norm();
            let defect = (m - m.adjoint()).norm();
            let tol = NORMALITY_TOL * scale;
            if defect > tol {
                return Err(Error::NotNormal { kind: kind.name(), defect, tol });
            }
            let (vals, frame) = hermitian_eigen(m)?;
            let vals: Vec<C64> = vals.into_iter().map(re).collect();
            SpectralMeasure::from_frame(kind, &vals, frame)
        }
        SpectrumKind::Unitary => {
            let defect = (m.adjoint() * m - DenseMatrix::identity(n, n)).norm();
            let tol = NORMALITY_TOL * (n as f64).sqrt().max(1.0);
            if defect > tol {
                return Err(Error::NotNormal { kind: kind.name(), defect, tol });
            }
            let (vals, frame) = unitary_eigen(m)?;
            SpectralMeasure::from_frame(kind, &vals, frame)
        }
    }
}

/// `Σ_i λ_i P_i`.
pub fn reconstruct(sm: &SpectralMeasure) -> DenseMatrix {
    sm.integrate(|v| v)
}

/// Singular values in non-increasing order.
pub fn singular_values(m: &DenseMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Schatten `p`-norm from a list of singular values. `p = ∞` gives the
/// operator norm; `0 < p < 1` gives the quasi-norm.
pub fn schatten_from_singular(s: &[f64], p: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::InvalidExponent(p));
    }
    let top = s.iter().copied().fold(0.0, f64::max);
    if p.is_infinite() || top == 0.0 {
        return Ok(top);
    }
    let sum: f64 = s.iter().map(|&x| (x / top).powf(p)).sum();
    Ok(top * sum.powf(1.0 / p))
}

/// Schatten `p`-norm `(Σ σ_k^p)^{1/p}`; `p = f64::INFINITY` is the
/// operator norm.
pub fn schatten_norm(m: &DenseMatrix, p: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::InvalidExponent(p));
    }
    check_finite(m)?;
    schatten_from_singular(&singular_values(m), p)
}

/// Operator norm (largest singular value).
pub fn op_norm(m: &DenseMatrix) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Row-major JSON interchange form of a complex matrix.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl MatrixJson {
    pub fn from_matrix(m: &DenseMatrix) -> Result<Self> {
        check_finite(m)?;
        let mut re = Vec::with_capacity(m.len());
        let mut im = Vec::with_capacity(m.len());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                re.push(m[(i, j)].re);
                im.push(m[(i, j)].im);
            }
        }
        Ok(MatrixJson { rows: m.nrows(), cols: m.ncols(), re, im })
    }

    pub fn to_matrix(&self) -> Result<DenseMatrix> {
        let n = self.rows * self.cols;
        if self.re.len() != n || self.im.len() != n {
            return Err(Error::InvalidInput(format!(
                "{}x{} matrix needs {n} entries, got re={} im={}",
                self.rows,
                self.cols,
                self.re.len(),
                self.im.len()
            )));
        }
        let m = DenseMatrix::from_fn(self.rows, self.cols, |i, j| {
            C64::new(self.re[i * self.cols + j], self.im[i * self.cols + j])
        });
        check_finite(&m)?;
        Ok(m)
    }
}

pub fn matrix_to_json(m: &DenseMatrix) -> Result<String> {
    Ok(serde_json::to_string(&MatrixJson::from_matrix(m)?)?)
}

pub fn matrix_from_json(s: &str) -> Result<DenseMatrix> {
    serde_json::from_str::<MatrixJson>(s)?.to_matrix()
}

/// JSON form of a spectral measure: points with their projectors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralMeasureJson {
    pub kind: SpectrumKind,
    pub points: Vec<SpectralPointJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralPointJson {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub projector: MatrixJson,
}

impl SpectralMeasureJson {
    pub fn from_measure(sm: &SpectralMeasure) -> Result<Self> {
        let points = (0..sm.len())
            .map(|i| {
                Ok(SpectralPointJson {
                    re: sm.values()[i].re,
                    im: sm.values()[i].im,
                    multiplicity: sm.columns(i).len(),
                    projector: MatrixJson::from_matrix(&sm.projector(i))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectralMeasureJson { kind: sm.kind(), points })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    #[test]
    fn diagonal_matrix_decomposes_into_coordinate_projectors() {
        let m = DenseMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![re(2.0), re(-1.0), re(2.0)]));
        let sm = spectral_decompose(&m, SpectrumKind::Hermitian).unwrap();
        assert_eq!(sm.len(), 2);
        assert!((sm.values()[0].re + 1.0).abs() < 1e-14);
        assert_eq!(sm.columns(1).len(), 2);
        assert!((reconstruct(&sm) - &m).norm() < 1e-13);
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let m = DenseMatrix::from_row_slice(2, 2, &[re(0.0), re(1.0), re(0.0), re(0.0)]);
        assert!(matches!(spectral_decompose(&m, SpectrumKind::Hermitian), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn rotation_is_unitary_with_conjugate_pair() {
        let (s, co) = 0.7f64.sin_cos();
        let m = DenseMatrix::from_row_slice(2, 2, &[re(co), re(-s), re(s), re(co)]);
        let sm = spectral_decompose(&m, SpectrumKind::Unitary).unwrap();
        let ang = sm.angles();
        assert!((ang[0] - 0.7).abs() < 1e-12);
        assert!((ang[1] - (std::f64::consts::TAU - 0.7)).abs() < 1e-12);
        assert!((reconstruct(&sm) - &m).norm() < 1e-13);
    }

    #[test]
    fn unitary_clusters_wrap_around_zero_angle() {
        let tiny: f64 = 1e-12;
        let vals = [c(tiny.cos(), tiny.sin()), c((-tiny).cos(), (-tiny).sin()), c(-1.0, 0.0)];
        let sm = SpectralMeasure::from_frame(SpectrumKind::Unitary, &vals, DenseMatrix::identity(3, 3)).unwrap();
        assert_eq!(sm.len(), 2);
    }

    #[test]
    fn schatten_norms_of_diagonal() {
        let m = DenseMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![re(3.0), re(-4.0)]));
        assert!((schatten_norm(&m, 2.0).unwrap() - 5.0).abs() < 1e-13);
        assert!((schatten_norm(&m, 1.0).unwrap() - 7.0).abs() < 1e-13);
        assert!((schatten_norm(&m, f64::INFINITY).unwrap() - 4.0).abs() < 1e-13);
        assert!(matches!(schatten_norm(&m, 0.0), Err(Error::InvalidExponent(_))));
        assert!(matches!(schatten_norm(&m, -1.0), Err(Error::InvalidExponent(_))));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let m = DenseMatrix::from_fn(2, 3, |i, j| c(0.1 * i as f64 + 1.0 / 3.0, -(j as f64) / 7.0));
        let s = matrix_to_json(&m).unwrap();
        assert_eq!(matrix_from_json(&s).unwrap(), m);
    }

    #[test]
    fn json_rejects_short_payload() {
        let s = r#"{"rows":2,"cols":2,"re":[1,2,3],"im":[0,0,0,0]}"#;
        assert!(matrix_from_json(s).is_err());
    }
}
