//! Littlewood–Paley decompositions and `B¹_{∞,1}` norms.
//!
//! On the torus the pieces of a trigonometric polynomial are exact:
//! convolution with `W_n` multiplies the coefficient of frequency `j` by
//! the mask value at `‖j‖₂`. On the plane, families with closed-form
//! Fourier transforms are handled by quadrature.

pub mod class_c;
pub mod filter;
pub mod plane;
pub mod torus;

pub use class_c::{ClassCFunction, ClassCNorm, Factorisation};
pub use filter::{standard_filter, FilterKind, LpFilterBank};
pub use plane::{besov_norm_plane_dyadic, plane_pieces, PlaneDyadicConfig, PlaneDyadicFamily};
pub use torus::{
    besov_norm_1_inf_1, besov_norm_1d, lp_decompose_torus, lp_decompose_torus_1d, sup_norm_torus, sup_norm_torus_1d,
    BesovNorm, LpDecomposition, SupNorm,
};
