//! Randomised runs of the perturbation identities.

use std::fmt;
use std::f64::consts::PI;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::funcalc::Function2D;
use crate::toi::Verdict;
use crate::{Error, Result};

use super::identities::{verify_identity_102, verify_identity_121, verify_identity_71};
use super::random::{perturb_unitary, random_hermitian, random_trigpoly2, random_unitary, trial_rng};
use super::scan::{random_pairs, PERTURBATION_SIZE};

/// Largest polynomial degree drawn in identity trials.
pub const MAX_TRIAL_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdentityKind {
    /// Self-adjoint pairs, both variables perturbed.
    SelfAdjoint,
    /// Unitary pairs.
    Unitary,
    /// One variable frozen at a scalar.
    Scalar,
}

impl IdentityKind {
    pub fn tag(self) -> &'static str {
        match self {
            IdentityKind::SelfAdjoint => "7.1",
            IdentityKind::Unitary => "12.1",
            IdentityKind::Scalar => "10.2",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "7.1" => Ok(IdentityKind::SelfAdjoint),
            "12.1" => Ok(IdentityKind::Unitary),
            "10.2" => Ok(IdentityKind::Scalar),
            other => Err(Error::InvalidInput(format!("unknown identity '{other}', expected 7.1, 12.1 or 10.2"))),
        }
    }
}

/// Residuals of one random instance. For the two-variable identities the
/// single-sided halves are reported alongside the full identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityRecord {
    pub trial: u64,
    pub dim: usize,
    pub degree: usize,
    pub full: f64,
    pub first_variable: Option<f64>,
    pub second_variable: Option<f64>,
}

impl IdentityRecord {
    pub const CSV_HEADER: &'static str = "identity,trial,dim,degree,full,first,second,verdict";

    pub fn max_residual(&self) -> f64 {
        self.full.max(self.first_variable.unwrap_or(0.0)).max(self.second_variable.unwrap_or(0.0))
    }

    pub fn verdict(&self, tol: f64) -> Verdict {
        if self.max_residual() <= tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn csv_row(&self, kind: IdentityKind, tol: f64) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.16e}")).unwrap_or_default();
        format!(
            "{},{},{},{},{:.16e},{},{},{}",
            kind,
            self.trial,
            self.dim,
            self.degree,
            self.full,
            opt(self.first_variable),
            opt(self.second_variable),
            self.verdict(tol)
        )
    }
}

/// One random instance with dimension in `1..=max_dim` and polynomial
/// degree in `1..=MAX_TRIAL_DEGREE`. Self-adjoint spectra lie in
/// `[−π, π]`.
pub fn identity_trial(kind: IdentityKind, max_dim: usize, seed: u64, trial: u64) -> Result<IdentityRecord> {
    let mut rng = trial_rng(seed, trial);
    let dim = rng.gen_range(1..=max_dim.max(1));
    let degree = rng.gen_range(1..=MAX_TRIAL_DEGREE);
    let f = Function2D::TrigPoly(random_trigpoly2(&mut rng, degree));
    match kind {
        IdentityKind::SelfAdjoint => {
            let [a1, a2, b1, b2] = random_pairs(&mut rng, dim);
            let r = verify_identity_71(&f, &a1, &a2, &b1, &b2)?;
            Ok(IdentityRecord {
                trial,
                dim,
                degree,
                full: r.full.residual,
                first_variable: Some(r.first_variable.residual),
                second_variable: Some(r.second_variable.residual),
            })
        }
        IdentityKind::Unitary => {
            let u1 = random_unitary(&mut rng, dim);
            let u2 = perturb_unitary(&mut rng, &u1, PERTURBATION_SIZE);
            let v1 = random_unitary(&mut rng, dim);
            let v2 = perturb_unitary(&mut rng, &v1, PERTURBATION_SIZE);
            let r = verify_identity_121(&f, &u1, &u2, &v1, &v2)?;
            Ok(IdentityRecord {
                trial,
                dim,
                degree,
                full: r.full.residual,
                first_variable: Some(r.first_variable.residual),
                second_variable: Some(r.second_variable.residual),
            })
        }
        IdentityKind::Scalar => {
            let a = random_hermitian(&mut rng, dim);
            let b = random_hermitian(&mut rng, dim);
            let alpha = rng.gen_range(-PI..PI);
            let beta = rng.gen_range(-PI..PI);
            let r = verify_identity_102(&f, &a, &b, alpha, beta, &[])?;
            Ok(IdentityRecord { trial, dim, degree, full: r.residual.residual, first_variable: None, second_variable: None })
        }
    }
}

/// `trials` independent instances, in trial order.
pub fn identity_trials(kind: IdentityKind, trials: usize, max_dim: usize, seed: u64) -> Result<Vec<IdentityRecord>> {
    (0..trials as u64).into_par_iter().map(|t| identity_trial(kind, max_dim, seed, t)).collect()
}
