//! Divided differences and their expansions.
//!
//! `D₁f(x₁,x₂,y) = (f(x₁,y) − f(x₂,y))/(x₁ − x₂)`, equal to `∂f/∂x` when
//! `x₁ = x₂`; `D₂f` is the same in the second variable. On the torus the
//! denominator is the difference of unit complex numbers and the
//! coincident value is the complex derivative in `ζ`.

pub mod hilbert;
pub mod reps;
pub mod sinc;
pub mod torus;

pub use hilbert::{hilbert_matrix, hilbert_norm, HilbertOperator};
pub use reps::{
    build_besov_summed_rep_d1, build_haagerup_like_rep_d1, build_haagerup_like_rep_d2, build_torus_rep_d1,
    build_torus_rep_d2, SincRep1, SincRep2, SincRepOptions,
};
pub use sinc::{
    divdiff_matrix, hilbert_commutator_split, partition_deficit_bound, sinc, sinc_expand_d1, sinc_partition_sum,
    sinc_weights, DividedDiffMatrix,
};
pub use torus::{
    roots_of_unity, torus_divdiff_matrix, torus_expand_d1, xi_kernel, xi_normalization,
};

use crate::funcalc::{Function2D, TrigPoly2};
use crate::{Result, C64};

/// `D₁f(x₁, x₂, y)`.
pub fn divided_diff_1(f: &Function2D, x1: f64, x2: f64, y: f64) -> Result<C64> {
    if x1 == x2 {
        f.dx(x1, y)
    } else {
        Ok((f.eval(x1, y) - f.eval(x2, y)) / (x1 - x2))
    }
}

/// `D₂f(x, y₁, y₂)`.
pub fn divided_diff_2(f: &Function2D, x: f64, y1: f64, y2: f64) -> Result<C64> {
    if y1 == y2 {
        f.dy(x, y1)
    } else {
        Ok((f.eval(x, y1) - f.eval(x, y2)) / (y1 - y2))
    }
}

/// `(f(ζ₁,τ) − f(ζ₂,τ))/(ζ₁ − ζ₂)` on the torus, `∂f/∂ζ` at coincidence.
pub fn torus_divided_diff_1(p: &TrigPoly2, z1: C64, z2: C64, tau: C64) -> C64 {
    if z1 == z2 {
        p.dzeta_torus(z1, tau)
    } else {
        (p.eval_torus(z1, tau) - p.eval_torus(z2, tau)) / (z1 - z2)
    }
}

/// `(f(ζ,τ₁) − f(ζ,τ₂))/(τ₁ − τ₂)` on the torus, `∂f/∂τ` at coincidence.
pub fn torus_divided_diff_2(p: &TrigPoly2, zeta: C64, t1: C64, t2: C64) -> C64 {
    if t1 == t2 {
        p.dtau_torus(zeta, t1)
    } else {
        (p.eval_torus(zeta, t1) - p.eval_torus(zeta, t2)) / (t1 - t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, re};

    #[test]
    fn divided_difference_of_product() {
        let f = Function2D::callable_with_derivatives(|x, y| re(x * x * y), |x, y| re(2.0 * x * y), |x, _| re(x * x));
        assert!((divided_diff_1(&f, 1.0, 3.0, 2.0).unwrap().re - 8.0).abs() < 1e-13);
        assert!((divided_diff_1(&f, 1.5, 1.5, 2.0).unwrap().re - 6.0).abs() < 1e-13);
        assert!((divided_diff_2(&f, 2.0, 0.5, -1.0).unwrap().re - 4.0).abs() < 1e-13);
    }

    #[test]
    fn flip_duality() {
        let f = Function2D::from(TrigPoly2::torus([((1, 2), c(0.3, 1.0)), ((-1, 1), c(1.0, 0.0))]));
        let g = f.flip();
        for &(x, y1, y2) in &[(0.2, 1.1, -0.4), (1.0, 0.3, 0.3)] {
            let a = divided_diff_2(&f, x, y1, y2).unwrap();
            let b = divided_diff_1(&g, y1, y2, x).unwrap();
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn torus_difference_of_monomial() {
        let p = TrigPoly2::torus([((3, 0), re(1.0))]);
        let z1 = c(0.6, 0.8);
        let z2 = c(0.0, 1.0);
        let want = z1 * z1 + z1 * z2 + z2 * z2;
        assert!((torus_divided_diff_1(&p, z1, z2, re(1.0)) - want).norm() < 1e-13);
        assert!((torus_divided_diff_1(&p, z1, z1, re(1.0)) - z1 * z1 * 3.0).norm() < 1e-13);
    }
}
