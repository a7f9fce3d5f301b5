//! Numerical lab for functions of pairs of noncommuting operators.
//!
//! Finite-dimensional self-adjoint and unitary matrices stand in for the
//! operators. The crate evaluates `f(A, B)` through spectral measures,
//! builds divided differences and their sinc and roots-of-unity
//! expansions, evaluates triple operator integrals in four ways, audits
//! Schatten-class bounds, computes Besov norms and runs the
//! counterexample and identity experiments.

pub mod besov;
pub mod divdiff;
pub mod error;
pub mod experiments;
pub mod funcalc;
pub mod linalg;
pub mod matcore;
pub mod toi;

pub use error::{Error, Result};
pub use nalgebra::DMatrix;

/// Complex scalar used throughout.
pub type C64 = nalgebra::Complex<f64>;

/// Dense complex matrix, row count by column count.
pub type DenseMatrix = DMatrix<C64>;

pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub(crate) fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}
