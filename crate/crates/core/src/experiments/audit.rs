//! Randomised trials of the Schatten-class bounds.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::matcore::{spectral_decompose, SpectralMeasure, SpectrumKind};
use crate::toi::{audit_schatten_bounds, BoundTheorem, HaagerupLikeRep1, HaagerupLikeRep2, HaagerupRep, RepRef, SchattenReport};
use crate::{Result, DenseMatrix};

use super::random::{gaussian_matrix, random_hermitian, trial_rng};

const INF: f64 = f64::INFINITY;

/// Exponent pairs `(p, q)` sampled for each bound, all inside its regime.
pub fn regime_exponents(theorem: BoundTheorem) -> &'static [(f64, f64)] {
    match theorem {
        BoundTheorem::HaagerupHilbertSchmidt => &[(INF, 2.0)],
        BoundTheorem::HaagerupRight => &[(INF, 2.0), (INF, 3.0), (INF, 4.0), (INF, INF)],
        BoundTheorem::HaagerupLeft => &[(2.0, INF), (3.0, INF), (6.0, INF), (INF, INF)],
        BoundTheorem::HaagerupHolder => &[(4.0, 4.0), (3.0, 6.0), (6.0, 3.0), (2.0, INF), (INF, 2.0)],
        BoundTheorem::FirstKind => &[(1.0, INF), (1.5, 3.0), (2.0, 2.0), (2.0, INF), (1.25, 5.0)],
        BoundTheorem::SecondKind => &[(INF, 1.0), (3.0, 1.5), (2.0, 2.0), (INF, 2.0), (5.0, 1.25)],
    }
}

fn measure(rng: &mut impl Rng, n: usize) -> Result<SpectralMeasure> {
    spectral_decompose(&random_hermitian(rng, n), SpectrumKind::Hermitian)
}

/// One trial: random dimension `2..=max_dim`, random measures, operators,
/// representation and in-regime exponents for `theorem`.
pub fn audit_trial(theorem: BoundTheorem, max_dim: usize, seed: u64, trial: u64) -> Result<SchattenReport> {
    let mut rng = trial_rng(seed, trial);
    let n = rng.gen_range(2..=max_dim.max(2));
    let (e1, e2, e3) = (measure(&mut rng, n)?, measure(&mut rng, n)?, measure(&mut rng, n)?);
    let t = gaussian_matrix(&mut rng, n, n);
    let r = gaussian_matrix(&mut rng, n, n);
    let (j, k) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let supports = [e1.values().to_vec(), e2.values().to_vec(), e3.values().to_vec()];
    let (s1, s2, s3) = (e1.len(), e2.len(), e3.len());
    let &(p, q) = regime_exponents(theorem).choose(&mut rng).expect("nonempty regime list");
    match theorem {
        BoundTheorem::FirstKind => {
            let alpha = gaussian_matrix(&mut rng, s1, j);
            let beta = gaussian_matrix(&mut rng, s2, k);
            let gamma: Vec<DenseMatrix> = (0..s3).map(|_| gaussian_matrix(&mut rng, j, k)).collect();
            let rep = HaagerupLikeRep1::new(supports, alpha, beta, gamma)?;
            audit_schatten_bounds(theorem, RepRef::FirstKind(&rep), &e1, &t, &e2, &r, &e3, p, q)
        }
        BoundTheorem::SecondKind => {
            let alpha: Vec<DenseMatrix> = (0..s1).map(|_| gaussian_matrix(&mut rng, j, k)).collect();
            let beta = gaussian_matrix(&mut rng, s2, j);
            let gamma = gaussian_matrix(&mut rng, s3, k);
            let rep = HaagerupLikeRep2::new(supports, alpha, beta, gamma)?;
            audit_schatten_bounds(theorem, RepRef::SecondKind(&rep), &e1, &t, &e2, &r, &e3, p, q)
        }
        _ => {
            let alpha = gaussian_matrix(&mut rng, s1, j);
            let beta: Vec<DenseMatrix> = (0..s2).map(|_| gaussian_matrix(&mut rng, j, k)).collect();
            let gamma = gaussian_matrix(&mut rng, s3, k);
            let rep = HaagerupRep::new(supports, alpha, beta, gamma)?;
            audit_schatten_bounds(theorem, RepRef::Haagerup(&rep), &e1, &t, &e2, &r, &e3, p, q)
        }
    }
}

/// `trials` trials cycling through `theorems`, in trial order.
pub fn audit_trials(theorems: &[BoundTheorem], trials: usize, max_dim: usize, seed: u64) -> Result<Vec<SchattenReport>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|t| audit_trial(theorems[t as usize % theorems.len()], max_dim, seed, t))
        .collect()
}
