//! Small dense helpers and a matrix-free largest-singular-value estimator.

use std::f64::consts::TAU;

use faer::{Mat, Side};
use nalgebra::DVector;
use rustfft::FftPlanner;

use crate::{DenseMatrix, Error, Result, C64};

/// Entrywise product.
pub fn hadamard(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    a.component_mul(b)
}

/// `trace(A B)` without forming the product.
pub fn trace_of_product(a: &DenseMatrix, b: &DenseMatrix) -> C64 {
    let mut t = C64::new(0.0, 0.0);
    for i in 0..a.nrows() {
        for k in 0..a.ncols() {
            t += a[(i, k)] * b[(k, i)];
        }
    }
    t
}

/// Unnormalised 2D inverse DFT, `out[p,q] = Σ_{a,b} x[a,b] e^{2πi(ap/R + bq/C)}`,
/// of a row-major `rows × cols` array, in place.
pub fn inverse_fft_2d(data: &mut [C64], rows: usize, cols: usize) {
    assert_eq!(data.len(), rows * cols);
    let mut planner = FftPlanner::new();
    let row_fft = planner.plan_fft_inverse(cols);
    for row in data.chunks_exact_mut(cols) {
        row_fft.process(row);
    }
    let col_fft = planner.plan_fft_inverse(rows);
    let mut column = vec![C64::new(0.0, 0.0); rows];
    for q in 0..cols {
        for p in 0..rows {
            column[p] = data[p * cols + q];
        }
        col_fft.process(&mut column);
        for p in 0..rows {
            data[p * cols + q] = column[p];
        }
    }
}

/// Eigenvalues, ascending, and orthonormal eigenvectors of a Hermitian
/// matrix (its Hermitian part, if it is not exactly Hermitian).
///
/// Uses faer: the symmetric solver in nalgebra 0.33 leaves residuals
/// `‖HV − VΛ‖` of order 1e-4 on some inputs and loses orthogonality on
/// repeated eigenvalues.
pub fn hermitian_eigen(h: &DenseMatrix) -> Result<(Vec<f64>, DenseMatrix)> {
    let n = h.nrows();
    let m = Mat::<C64>::from_fn(n, n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let eig = m.self_adjoint_eigen(Side::Lower).map_err(|e| Error::NoConvergence(format!("{e:?}")))?;
    let s = eig.S().column_vector();
    let u = eig.U();
    Ok(((0..n).map(|i| s[i].re).collect(), DenseMatrix::from_fn(n, n, |i, j| u[(i, j)])))
}

/// Eigenvalues and orthonormal eigenvectors of a unitary matrix.
///
/// With `w = e^{iφ}` in the middle of the widest gap of the spectrum, the
/// Cayley transform `C = i (w + U)(w − U)⁻¹` is Hermitian with the
/// eigenvectors of `U`, and `‖(w − U)⁻¹‖ ≤ 1/sin(π/2n)`. Values are the
/// normalised Rayleigh quotients `v* U v`.
pub fn unitary_eigen(u: &DenseMatrix) -> Result<(Vec<C64>, DenseMatrix)> {
    let n = u.nrows();
    if n == 0 {
        return Ok((Vec::new(), DenseMatrix::zeros(0, 0)));
    }
    let m = Mat::<C64>::from_fn(n, n, |i, j| u[(i, j)]);
    let rough = m.eigenvalues().map_err(|e| Error::NoConvergence(format!("{e:?}")))?;
    let mut angles: Vec<f64> = rough.iter().map(|z| z.im.atan2(z.re)).collect();
    angles.sort_by(f64::total_cmp);
    let mut phi = angles[n - 1] + 0.5 * (angles[0] + TAU - angles[n - 1]);
    let mut widest = angles[0] + TAU - angles[n - 1];
    for w in angles.windows(2) {
        if w[1] - w[0] > widest {
            widest = w[1] - w[0];
            phi = 0.5 * (w[0] + w[1]);
        }
    }
    let w = C64::new(phi.cos(), phi.sin());
    let id = DenseMatrix::identity(n, n);
    let resolvent = (&id * w - u)
        .try_inverse()
        .ok_or_else(|| Error::NoConvergence("Cayley transform of a unitary matrix is singular".into()))?;
    let cayley = (&id * w + u) * resolvent * C64::new(0.0, 1.0);
    let (_, frame) = hermitian_eigen(&cayley)?;
    let values = (0..n)
        .map(|j| {
            let col = frame.column(j);
            let z = col.dotc(&(u * col));
            z / z.norm()
        })
        .collect();
    Ok((values, frame))
}

/// Largest singular value of a linear map known only through its action
/// and the action of its adjoint, by Golub–Kahan–Lanczos
/// bidiagonalisation with full reorthogonalisation.
///
/// The returned value is the top singular value of the projected
/// bidiagonal matrix, which never exceeds the true norm and converges to
/// it from below.
pub fn largest_singular_value<F, G>(apply: F, apply_adjoint: G, dim: usize, steps: usize) -> f64
where
    F: Fn(&DVector<C64>) -> DVector<C64>,
    G: Fn(&DVector<C64>) -> DVector<C64>,
{
    if dim == 0 {
        return 0.0;
    }
    let steps = steps.min(dim).max(1);
    let mut v = DVector::from_fn(dim, |i, _| {
        let t = i as f64 + 1.0;
        C64::new((t * 0.618_033_988_7).fract() + 0.5, (t * 0.414_213_562_3).fract() - 0.5)
    });
    v /= C64::new(v.norm(), 0.0);
    let mut vs: Vec<DVector<C64>> = vec![v.clone()];
    let mut us: Vec<DVector<C64>> = Vec::new();
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();

    let mut u = apply(&v);
    for k in 0..steps {
        if k > 0 {
            u -= us[k - 1].clone() * C64::new(betas[k - 1], 0.0);
        }
        reorthogonalise(&mut u, &us);
        let alpha = u.norm();
        alphas.push(alpha);
        if alpha <= 1e-300 {
            break;
        }
        u /= C64::new(alpha, 0.0);
        us.push(u.clone());

        let mut w = apply_adjoint(&u) - vs[k].clone() * C64::new(alpha, 0.0);
        reorthogonalise(&mut w, &vs);
        let beta = w.norm();
        let scale = alphas.iter().copied().fold(0.0, f64::max);
        if beta <= 1e-13 * scale || k + 1 == steps {
            break;
        }
        betas.push(beta);
        w /= C64::new(beta, 0.0);
        vs.push(w.clone());
        u = apply(&w);
    }

    let m = alphas.len();
    let mut b = nalgebra::DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        b[(i, i)] = alphas[i];
        if i + 1 < m {
            b[(i, i + 1)] = betas[i];
        }
    }
    b.singular_values().iter().copied().fold(0.0, f64::max)
}

fn reorthogonalise(x: &mut DVector<C64>, basis: &[DVector<C64>]) {
    for _ in 0..2 {
        for q in basis {
            let proj = q.dotc(x);
            *x -= q.clone() * proj;
        }
    }
}

/// Largest singular value of a dense matrix via the Lanczos estimator.
pub fn dense_norm_estimate(m: &DenseMatrix, steps: usize) -> f64 {
    let adj = m.adjoint();
    largest_singular_value(|x| m * x, |y| &adj * y, m.ncols(), steps)
}
