//! Schatten-class bounds for triple operator integrals, checked numerically.

use std::fmt;

use serde::Serialize;

use super::eval::{toi_haagerup, toi_haagerup_like_1, toi_haagerup_like_2};
use super::reps::{HaagerupLikeRep1, HaagerupLikeRep2, HaagerupRep};
use crate::matcore::{schatten_norm, SpectralMeasure};
use crate::{DenseMatrix, Error, Result};

/// Relative slack granted to a bound before it counts as violated.
pub const AUDIT_SLACK: f64 = 1e-9;

/// Bounds `‖W‖_r ≤ ‖Ψ‖ ‖T‖_p ‖R‖_q`, `1/r = 1/p + 1/q`, with the regime in
/// which each one holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundTheorem {
    /// Haagerup integrand, `T` bounded, `R ∈ S₂`.
    HaagerupHilbertSchmidt,
    /// Haagerup integrand, `T` bounded, `R ∈ S_q`, `q ≥ 2`.
    HaagerupRight,
    /// Haagerup integrand, `T ∈ S_p`, `p ≥ 2`, `R` bounded.
    HaagerupLeft,
    /// Haagerup integrand, `1/p + 1/q ≤ 1/2`.
    HaagerupHolder,
    /// First-kind integrand, `1 ≤ p ≤ 2`, `1/p + 1/q ≤ 1` (`q = ∞` allowed).
    FirstKind,
    /// Second-kind integrand, `p ≥ 1`, `1 ≤ q ≤ 2`, `1/p + 1/q ≤ 1`
    /// (`p = ∞` allowed).
    SecondKind,
}

impl BoundTheorem {
    pub const ALL: [BoundTheorem; 6] = [
        BoundTheorem::HaagerupHilbertSchmidt,
        BoundTheorem::HaagerupRight,
        BoundTheorem::HaagerupLeft,
        BoundTheorem::HaagerupHolder,
        BoundTheorem::FirstKind,
        BoundTheorem::SecondKind,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundTheorem::HaagerupHilbertSchmidt => "haagerup-s2",
            BoundTheorem::HaagerupRight => "haagerup-right",
            BoundTheorem::HaagerupLeft => "haagerup-left",
            BoundTheorem::HaagerupHolder => "haagerup-holder",
            BoundTheorem::FirstKind => "first-kind",
            BoundTheorem::SecondKind => "second-kind",
        }
    }

    /// Checks the exponent regime and returns `r`.
    pub fn validate(self, p: f64, q: f64) -> Result<f64> {
        if !(p >= 1.0) || !(q >= 1.0) {
            return Err(Error::RegimeMismatch(format!("exponents p={p}, q={q} must be at least 1")));
        }
        let s = 1.0 / p + 1.0 / q;
        let ok = match self {
            BoundTheorem::HaagerupHilbertSchmidt => p.is_infinite() && q == 2.0,
            BoundTheorem::HaagerupRight => p.is_infinite() && q >= 2.0,
            BoundTheorem::HaagerupLeft => p >= 2.0 && q.is_infinite(),
            BoundTheorem::HaagerupHolder => s <= 0.5,
            BoundTheorem::FirstKind => p <= 2.0 && s <= 1.0,
            BoundTheorem::SecondKind => q <= 2.0 && s <= 1.0,
        };
        if !ok {
            return Err(Error::RegimeMismatch(format!("{} does not cover p={p}, q={q}", self.name())));
        }
        Ok(if s == 0.0 { f64::INFINITY } else { 1.0 / s })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bound(measured: f64, bound: f64) -> Verdict {
        if measured <= bound * (1.0 + AUDIT_SLACK) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Formats a Schatten exponent, writing `inf` for the operator norm.
pub fn format_exponent(p: f64) -> String {
    if p.is_infinite() {
        "inf".to_string()
    } else {
        format!("{p}")
    }
}

/// Outcome of one bound check.
#[derive(Debug, Clone, Serialize)]
pub struct SchattenReport {
    pub context: String,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub measured: f64,
    pub bound: f64,
    pub verdict: Verdict,
}

impl SchattenReport {
    pub const CSV_HEADER: &'static str = "context,p,q,r,measured,bound,verdict";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.16e},{:.16e},{}",
            self.context,
            format_exponent(self.p),
            format_exponent(self.q),
            format_exponent(self.r),
            self.measured,
            self.bound,
            self.verdict
        )
    }
}

/// Integrand representation handed to the audit.
#[derive(Debug, Clone, Copy)]
pub enum RepRef<'a> {
    Haagerup(&'a HaagerupRep),
    FirstKind(&'a HaagerupLikeRep1),
    SecondKind(&'a HaagerupLikeRep2),
}

/// Evaluates `W` with the evaluator matching the representation and checks
/// `‖W‖_r ≤ ‖Ψ‖ ‖T‖_p ‖R‖_q`, where `‖Ψ‖` is the product of the factor
/// norms of the representation.
///
/// Fails with [`Error::RegimeMismatch`] when the representation kind does
/// not fit the theorem or the exponents fall outside its regime.
#[allow(clippy::too_many_arguments)]
pub fn audit_schatten_bounds(
    theorem: BoundTheorem,
    rep: RepRef,
    e1: &SpectralMeasure,
    t: &DenseMatrix,
    e2: &SpectralMeasure,
    r: &DenseMatrix,
    e3: &SpectralMeasure,
    p: f64,
    q: f64,
) -> Result<SchattenReport> {
    let r_exp = theorem.validate(p, q)?;
    let (w, rep_norm) = match (theorem, rep) {
        (
            BoundTheorem::HaagerupHilbertSchmidt
            | BoundTheorem::HaagerupRight
            | BoundTheorem::HaagerupLeft
            | BoundTheorem::HaagerupHolder,
            RepRef::Haagerup(h),
        ) => (toi_haagerup(h, e1, t, e2, r, e3)?, h.norm()),
        (BoundTheorem::FirstKind, RepRef::FirstKind(h)) => (toi_haagerup_like_1(h, e1, t, e2, r, e3)?, h.norm()),
        (BoundTheorem::SecondKind, RepRef::SecondKind(h)) => (toi_haagerup_like_2(h, e1, t, e2, r, e3)?, h.norm()),
        _ => {
            return Err(Error::RegimeMismatch(format!("{} needs a different representation kind", theorem.name())));
        }
    };
    let measured = schatten_norm(&w, r_exp)?;
    let bound = rep_norm * schatten_norm(t, p)? * schatten_norm(r, q)?;
    Ok(SchattenReport {
        context: theorem.name().to_string(),
        p,
        q,
        r: r_exp,
        measured,
        bound,
        verdict: Verdict::from_bound(measured, bound),
    })
}
