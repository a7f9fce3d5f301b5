//! Functional calculus for pairs of noncommuting matrices.
//!
//! For spectral measures `E_A = Σ δ_{λ_i} P_i` and `E_B = Σ δ_{μ_j} Q_j`,
//! `f(A, B) = Σ_{i,j} f(λ_i, μ_j) P_i Q_j`. In eigenframes `V`, `W` this is
//! `V (G ∘ V*W) W*` with `G_{ab}` the value of `f` at the eigenvalues of
//! columns `a` and `b`, which costs `O(n³)` instead of `O(n⁴)`.

pub mod atoms;
pub mod function;
pub mod trigpoly;

pub use atoms::Atom;
pub use function::{AtomSum1, AtomSum2, Callable1, Callable2, Function1D, Function2D, SeparableSum};
pub use trigpoly::{TrigPoly1, TrigPoly2};

use crate::matcore::{SpectralMeasure, SpectrumKind};
use crate::{DenseMatrix, Error, Result, C64};

/// Expands a table indexed by spectral points to one indexed by frame
/// columns.
pub fn expand_point_table(table: &DenseMatrix, rows: &SpectralMeasure, cols: &SpectralMeasure) -> DenseMatrix {
    let rp = rows.column_points();
    let cp = cols.column_points();
    DenseMatrix::from_fn(rp.len(), cp.len(), |a, b| table[(rp[a], cp[b])])
}

/// `Σ_{i,j} G_{ij} P_i Q_j` for a table `G` over spectral-point pairs.
pub fn double_spectral_sum(table: &DenseMatrix, ea: &SpectralMeasure, eb: &SpectralMeasure) -> Result<DenseMatrix> {
    if ea.dim() != eb.dim() {
        return Err(Error::DimensionMismatch(format!("measures of dimension {} and {}", ea.dim(), eb.dim())));
    }
    if table.nrows() != ea.len() || table.ncols() != eb.len() {
        return Err(Error::DimensionMismatch(format!(
            "value table {}x{} for {}x{} spectral points",
            table.nrows(),
            table.ncols(),
            ea.len(),
            eb.len()
        )));
    }
    let g = expand_point_table(table, ea, eb);
    let v = ea.frame();
    let w = eb.frame();
    let overlap = v.adjoint() * w;
    Ok(v * g.component_mul(&overlap) * w.adjoint())
}

fn require_kind(sm: &SpectralMeasure, kind: SpectrumKind) -> Result<()> {
    if sm.kind() != kind {
        return Err(Error::InvalidInput(format!("expected a {kind:?} spectral measure, got {:?}", sm.kind())));
    }
    Ok(())
}

/// `f(A, B) = Σ_{i,j} f(λ_i, μ_j) P_i Q_j` for self-adjoint `A`, `B`.
pub fn apply_f_ab(f: &Function2D, ea: &SpectralMeasure, eb: &SpectralMeasure) -> Result<DenseMatrix> {
    require_kind(ea, SpectrumKind::Hermitian)?;
    require_kind(eb, SpectrumKind::Hermitian)?;
    let table = f.grid(&ea.real_values(), &eb.real_values());
    double_spectral_sum(&table, ea, eb)
}

/// `f(U, V)` for unitary `U`, `V` and a trigonometric polynomial on the
/// torus, `f(ζ, τ) = Σ c_{jk} ζ^j τ^k`.
pub fn apply_f_uv(f: &Function2D, eu: &SpectralMeasure, ev: &SpectralMeasure) -> Result<DenseMatrix> {
    require_kind(eu, SpectrumKind::Unitary)?;
    require_kind(ev, SpectrumKind::Unitary)?;
    let p = torus_poly(f)?;
    let table = p.grid(&eu.angles(), &ev.angles());
    double_spectral_sum(&table, eu, ev)
}

/// The trigonometric polynomial behind a torus function.
pub fn torus_poly(f: &Function2D) -> Result<&TrigPoly2> {
    match f {
        Function2D::TrigPoly(p) if p.is_torus() => Ok(p),
        _ => Err(Error::NotTorusFunction),
    }
}

/// `∫ φ dE` for a function of one variable on a self-adjoint measure.
pub fn apply_1d(f: &Function1D, e: &SpectralMeasure) -> Result<DenseMatrix> {
    require_kind(e, SpectrumKind::Hermitian)?;
    Ok(e.integrate(|v| f.eval(v.re)))
}

/// Values `f(λ_i, μ_j)` on the spectral points of two measures, using the
/// real coordinates of self-adjoint points and the complex values of
/// unitary ones.
pub fn point_table(f: impl Fn(C64, C64) -> C64, ea: &SpectralMeasure, eb: &SpectralMeasure) -> DenseMatrix {
    DenseMatrix::from_fn(ea.len(), eb.len(), |i, j| f(ea.values()[i], eb.values()[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::spectral_decompose;
    use crate::{c, re};

    fn herm(n: usize, seed: f64) -> DenseMatrix {
        let m = DenseMatrix::from_fn(n, n, |i, j| c(((i * 3 + j) as f64 * seed).sin(), ((i + 2 * j) as f64 * seed).cos()));
        (&m + m.adjoint()) * re(0.5)
    }

    #[test]
    fn monomial_is_product_of_powers() {
        let a = herm(5, 0.37);
        let b = herm(5, 0.91);
        let ea = spectral_decompose(&a, SpectrumKind::Hermitian).unwrap();
        let eb = spectral_decompose(&b, SpectrumKind::Hermitian).unwrap();
        let f = Function2D::callable(|x, y| re(x * x * y));
        let got = apply_f_ab(&f, &ea, &eb).unwrap();
        let want = &a * &a * &b;
        assert!((got - &want).norm() < 1e-11 * (1.0 + want.norm()));
    }

    #[test]
    fn unitary_calculus_needs_torus_poly() {
        let u = DenseMatrix::identity(2, 2);
        let eu = spectral_decompose(&u, SpectrumKind::Unitary).unwrap();
        let f = Function2D::callable(|x, _| re(x));
        assert!(matches!(apply_f_uv(&f, &eu, &eu), Err(Error::NotTorusFunction)));
    }
}
