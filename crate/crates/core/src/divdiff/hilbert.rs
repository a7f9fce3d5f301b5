//! Discrete Hilbert transform `h_{jk} = 1/(j − k)`, `h_{jj} = 0`.

use std::sync::Arc;

use nalgebra::DVector;
use rustfft::{Fft, FftPlanner};

use crate::linalg::largest_singular_value;
use crate::{DenseMatrix, C64};

/// Dense `n × n` section of the discrete Hilbert matrix.
pub fn hilbert_matrix(n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |j, k| {
        if j == k {
            C64::new(0.0, 0.0)
        } else {
            C64::new(1.0 / (j as f64 - k as f64), 0.0)
        }
    })
}

/// Matrix-free `n × n` section applied by circulant embedding.
pub struct HilbertOperator {
    n: usize,
    symbol: Vec<C64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl HilbertOperator {
    pub fn new(n: usize) -> Self {
        let m = 2 * n;
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(m);
        let inv = planner.plan_fft_inverse(m);
        // First column of the circulant: t_0, t_1, …, t_{n−1}, 0, t_{−(n−1)}, …, t_{−1}.
        let mut col = vec![C64::new(0.0, 0.0); m];
        for d in 1..n {
            col[d] = C64::new(1.0 / d as f64, 0.0);
            col[m - d] = C64::new(-1.0 / d as f64, 0.0);
        }
        fwd.process(&mut col);
        HilbertOperator { n, symbol: col, fwd, inv }
    }

    pub fn apply(&self, x: &DVector<C64>) -> DVector<C64> {
        let m = 2 * self.n;
        let mut buf = vec![C64::new(0.0, 0.0); m];
        buf[..self.n].copy_from_slice(x.as_slice());
        self.fwd.process(&mut buf);
        for (b, s) in buf.iter_mut().zip(&self.symbol) {
            *b *= s;
        }
        self.inv.process(&mut buf);
        let scale = 1.0 / m as f64;
        DVector::from_iterator(self.n, buf[..self.n].iter().map(|z| z * scale))
    }
}

/// Norm of the `n × n` section, estimated by Lanczos bidiagonalisation.
/// The estimate approaches the true norm from below; the full operator has
/// norm `π`.
pub fn hilbert_norm(n: usize, steps: usize) -> f64 {
    let op = HilbertOperator::new(n);
    largest_singular_value(|x| op.apply(x), |y| -op.apply(y), n, steps)
}
