//! Lipschitz-ratio scans and the class-𝒞 check.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::besov::{ClassCFunction, Factorisation, LpFilterBank};
use crate::funcalc::{apply_f_ab, Function2D, TrigPoly1};
use crate::matcore::{schatten_norm, spectral_decompose, SpectrumKind};
use crate::toi::Verdict;
use crate::{DenseMatrix, Error, Result};

use super::counterexample::measure_growth;
use super::random::{random_hermitian, random_hermitian_direction, random_trigpoly1, random_trigpoly2, trial_rng};
use super::records::ScanRecord;

/// Operator-norm size of the random perturbations `A₂ − A₁`, `B₂ − B₁`.
pub const PERTURBATION_SIZE: f64 = 0.5;
/// Degree of the random torus polynomials.
pub const SCAN_DEGREE: usize = 3;
/// Rank of the random separable functions.
pub const CLASS_C_RANK: usize = 3;
/// Constant against which class-𝒞 ratios are checked.
pub const CLASS_C_AUDIT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScanFamily {
    Counterexample,
    RandomTrigPoly,
    ClassC,
}

impl ScanFamily {
    pub fn tag(self) -> &'static str {
        match self {
            ScanFamily::Counterexample => "counterexample",
            ScanFamily::RandomTrigPoly => "random-trigpoly",
            ScanFamily::ClassC => "class-C",
        }
    }
}

impl fmt::Display for ScanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ScanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "counterexample" => Ok(ScanFamily::Counterexample),
            "random-trigpoly" => Ok(ScanFamily::RandomTrigPoly),
            "class-C" | "class-c" => Ok(ScanFamily::ClassC),
            other => Err(Error::InvalidInput(format!("unknown scan family '{other}'"))),
        }
    }
}

/// Random pair of self-adjoint pairs `(A₁, A₂, B₁, B₂)` with perturbations
/// of operator norm [`PERTURBATION_SIZE`].
pub fn random_pairs(rng: &mut impl rand::Rng, n: usize) -> [DenseMatrix; 4] {
    let a1 = random_hermitian(rng, n);
    let a2 = &a1 + random_hermitian_direction(rng, n, PERTURBATION_SIZE);
    let b1 = random_hermitian(rng, n);
    let b2 = &b1 + random_hermitian_direction(rng, n, PERTURBATION_SIZE);
    [a1, a2, b1, b2]
}

fn difference(f: &Function2D, m: &[DenseMatrix; 4]) -> Result<DenseMatrix> {
    let h = SpectrumKind::Hermitian;
    let (ea1, ea2) = (spectral_decompose(&m[0], h)?, spectral_decompose(&m[1], h)?);
    let (eb1, eb2) = (spectral_decompose(&m[2], h)?, spectral_decompose(&m[3], h)?);
    Ok(apply_f_ab(f, &ea1, &eb1)? - apply_f_ab(f, &ea2, &eb2)?)
}

/// Random class-𝒞 function: a rank-`r` separable sum with the second
/// factorisation obtained by grouping terms by frequency in `y`.
pub fn random_class_c(rng: &mut impl rand::Rng, rank: usize, degree: usize) -> Result<ClassCFunction> {
    let primary: Factorisation = (0..rank).map(|_| (random_trigpoly1(rng, degree), random_trigpoly1(rng, degree))).collect();
    let mut by_k: std::collections::BTreeMap<i32, TrigPoly1> = std::collections::BTreeMap::new();
    for (phi, psi) in &primary {
        for (&k, &v) in &psi.terms {
            let slot = by_k.entry(k).or_insert_with(|| TrigPoly1::torus(Vec::new()));
            for (&j, &u) in &phi.terms {
                *slot.terms.entry(j).or_insert_with(Default::default) += u * v;
            }
        }
    }
    let dual = by_k.into_iter().map(|(k, phi)| (phi, TrigPoly1::torus([(k, crate::re(1.0))]))).collect();
    ClassCFunction::new(primary, Some(dual))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassCReport {
    pub p: f64,
    pub difference: f64,
    pub perturbation: f64,
    pub norm: f64,
    pub ratio: f64,
    pub bound: f64,
    pub verdict: Verdict,
}

/// `‖f(A₁,B₁) − f(A₂,B₂)‖_p / (‖f‖_𝒞 (‖A₁ − A₂‖_p + ‖B₁ − B₂‖_p))`,
/// checked against [`CLASS_C_AUDIT`].
pub fn class_c_check(
    f: &ClassCFunction,
    a1: &DenseMatrix,
    a2: &DenseMatrix,
    b1: &DenseMatrix,
    b2: &DenseMatrix,
    p: f64,
    bank: &LpFilterBank,
) -> Result<ClassCReport> {
    let norm = f.norm(bank)?.value;
    let m = [a1.clone(), a2.clone(), b1.clone(), b2.clone()];
    let difference = schatten_norm(&difference(&f.to_function(), &m)?, p)?;
    let perturbation = schatten_norm(&(a1 - a2), p)? + schatten_norm(&(b1 - b2), p)?;
    let denom = norm * perturbation;
    let ratio = if denom > 0.0 { difference / denom } else { 0.0 };
    Ok(ClassCReport {
        p,
        difference,
        perturbation,
        norm,
        ratio,
        bound: CLASS_C_AUDIT,
        verdict: if ratio <= CLASS_C_AUDIT { Verdict::Pass } else { Verdict::Fail },
    })
}

fn trial_ratios(family: ScanFamily, n: usize, ps: &[f64], seed: u64, trial: u64) -> Result<Vec<f64>> {
    let mut rng = trial_rng(seed, trial);
    match family {
        ScanFamily::RandomTrigPoly => {
            let f = Function2D::TrigPoly(random_trigpoly2(&mut rng, SCAN_DEGREE));
            let m = random_pairs(&mut rng, n);
            let d = difference(&f, &m)?;
            ps.iter()
                .map(|&p| {
                    let pert = schatten_norm(&(&m[0] - &m[1]), p)?.max(schatten_norm(&(&m[2] - &m[3]), p)?);
                    Ok(schatten_norm(&d, p)? / pert)
                })
                .collect()
        }
        ScanFamily::ClassC => {
            let f = random_class_c(&mut rng, CLASS_C_RANK, SCAN_DEGREE)?;
            let m = random_pairs(&mut rng, n);
            let bank = LpFilterBank::default();
            ps.iter().map(|&p| Ok(class_c_check(&f, &m[0], &m[1], &m[2], &m[3], p, &bank)?.ratio)).collect()
        }
        ScanFamily::Counterexample => unreachable!("deterministic family"),
    }
}

/// Lipschitz ratios per `(N, p)`. The counterexample family is
/// deterministic and checked against `N^{1/2−1/p}`; the random families
/// report the largest ratio over `trials` independent trials.
pub fn lipschitz_scan(family: ScanFamily, ps: &[f64], ns: &[usize], trials: usize, seed: u64) -> Result<Vec<ScanRecord>> {
    if ps.is_empty() || ns.is_empty() {
        return Err(Error::InvalidInput("scan needs nonempty N and p lists".into()));
    }
    if family == ScanFamily::Counterexample {
        return measure_growth(ns, ps);
    }
    let mut out = Vec::new();
    for &n in ns {
        let per_trial: Vec<Result<Vec<f64>>> =
            (0..trials as u64).into_par_iter().map(|t| trial_ratios(family, n, ps, seed, t)).collect();
        let mut max = vec![0.0f64; ps.len()];
        for r in per_trial {
            for (m, v) in max.iter_mut().zip(r?) {
                *m = m.max(v);
            }
        }
        for (&p, &measured) in ps.iter().zip(&max) {
            let (bound, verdict) = match family {
                ScanFamily::ClassC => (
                    Some(CLASS_C_AUDIT),
                    Some(if measured <= CLASS_C_AUDIT { Verdict::Pass } else { Verdict::Fail }),
                ),
                _ => (None, None),
            };
            out.push(ScanRecord {
                family: family.tag().into(),
                n,
                p,
                epsilon: 1.0,
                measured,
                predicted: None,
                bound,
                verdict,
            });
        }
    }
    Ok(out)
}
