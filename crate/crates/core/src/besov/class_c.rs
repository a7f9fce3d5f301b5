//! Functions `f(x, y) = Σ φ_n(x) ψ_n(y) = Σ φ♯_n(x) ψ♯_n(y)` with two
//! separable factorisations and the norm
//! `Σ ‖φ_n‖_B ‖ψ_n‖_∞ + Σ ‖φ♯_n‖_∞ ‖ψ♯_n‖_B`, `B = B¹_{∞,1}`.

use std::collections::BTreeMap;

use crate::funcalc::{Function1D, Function2D, SeparableSum, TrigPoly1};
use crate::{Error, Result, C64};

use super::filter::LpFilterBank;
use super::torus::{besov_norm_1d, sup_norm_torus_1d};

/// Coefficient agreement required between the two factorisations.
pub const FACTORISATION_TOL: f64 = 1e-12;

pub type Factorisation = Vec<(TrigPoly1, TrigPoly1)>;

#[derive(Debug, Clone)]
pub struct ClassCFunction {
    pub primary: Factorisation,
    pub dual: Option<Factorisation>,
}

/// Components of the norm; `upper` uses Bernstein bounds for every factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassCNorm {
    pub value: f64,
    pub upper: f64,
}

fn coefficients(fac: &Factorisation) -> BTreeMap<(i32, i32), C64> {
    let mut out = BTreeMap::new();
    for (a, b) in fac {
        for (&j, &u) in &a.terms {
            for (&k, &v) in &b.terms {
                *out.entry((j, k)).or_insert(C64::new(0.0, 0.0)) += u * v;
            }
        }
    }
    out
}

impl ClassCFunction {
    pub fn new(primary: Factorisation, dual: Option<Factorisation>) -> Result<Self> {
        let f = ClassCFunction { primary, dual };
        if let Some(d) = &f.dual {
            let a = coefficients(&f.primary);
            let b = coefficients(d);
            let scale = a.values().chain(b.values()).map(|z| z.norm()).fold(1.0, f64::max);
            let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
            for k in keys {
                let za = a.get(k).copied().unwrap_or_default();
                let zb = b.get(k).copied().unwrap_or_default();
                if (za - zb).norm() > FACTORISATION_TOL * scale {
                    return Err(Error::ConstraintViolated(format!("factorisations differ at frequency {k:?}")));
                }
            }
        }
        Ok(f)
    }

    pub fn norm(&self, bank: &LpFilterBank) -> Result<ClassCNorm> {
        let dual = self.dual.as_ref().ok_or(Error::MissingFactorization)?;
        let mut value = 0.0;
        let mut upper = 0.0;
        for (phi, psi) in &self.primary {
            let b = besov_norm_1d(phi, bank);
            let s = sup_norm_torus_1d(psi);
            value += b.value * s.grid_max;
            upper += b.upper * s.upper;
        }
        for (phi, psi) in dual {
            let s = sup_norm_torus_1d(phi);
            let b = besov_norm_1d(psi, bank);
            value += s.grid_max * b.value;
            upper += s.upper * b.upper;
        }
        Ok(ClassCNorm { value, upper })
    }

    pub fn to_function(&self) -> Function2D {
        Function2D::Separable(SeparableSum {
            factors: self
                .primary
                .iter()
                .map(|(a, b)| (Function1D::Trig(a.clone()), Function1D::Trig(b.clone())))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::re;

    fn one() -> TrigPoly1 {
        TrigPoly1::torus([(0, re(1.0))])
    }

    #[test]
    fn missing_dual_is_reported() {
        let f = ClassCFunction::new(vec![(TrigPoly1::torus([(1, re(1.0))]), one())], None).unwrap();
        assert!(matches!(f.norm(&LpFilterBank::default()), Err(Error::MissingFactorization)));
    }

    #[test]
    fn mismatched_factorisations_are_refused() {
        let a = vec![(TrigPoly1::torus([(1, re(1.0))]), one())];
        let b = vec![(TrigPoly1::torus([(2, re(1.0))]), one())];
        assert!(ClassCFunction::new(a, Some(b)).is_err());
    }

    #[test]
    fn one_factor_norm() {
        let phi = TrigPoly1::torus([(1, re(1.0))]);
        let f = ClassCFunction::new(vec![(phi.clone(), one())], Some(vec![(phi, one())])).unwrap();
        let n = f.norm(&LpFilterBank::default()).unwrap();
        // ‖e^{ix}‖_B ‖1‖_∞ + ‖e^{ix}‖_∞ ‖1‖_B = 1 + 1.
        assert!((n.value - 2.0).abs() < 1e-14);
    }
}
