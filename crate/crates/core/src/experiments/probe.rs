//! Growth of the dual first-kind integral on the counterexample family.
//!
//! With `W₀ = f(A₁,B) − f(A₂,B) = ∭ D₁f dE_{A₁} (A₁−A₂) dE_{A₂} dE_B` and
//! `Q₀` the rank-one trace-class matrix norming `W₀`, the dual map
//! `M(Q) = ∭ Φ dE_{A₂} I dE_B Q dE_{A₁}`, `Φ(x₂,y,x₁) = D₁f(x₁,x₂,y)`,
//! satisfies `trace(M(Q₀)(A₁−A₂)) = ‖W₀‖ = √N`, so `‖M(Q₀)‖_{S₁} ≥ √N`.
//! A trace-class estimate of the shape `‖M(Q)‖_{S₁} ≤ 3σ‖f‖_∞‖Q‖_{S₁}`
//! would keep the ratio below one; the measured ratio grows like `√N`.

use serde::Serialize;

use crate::funcalc::Function2D;
use crate::linalg::trace_of_product;
use crate::matcore::schatten_norm;
use crate::toi::toi_direct_indexed;
use crate::{DenseMatrix, Result};

use super::counterexample::build_counterexample;

/// Sample step for the sup-norm estimate of `f`.
const SUP_STEP: f64 = 0.125;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbeRecord {
    pub n: usize,
    /// `‖M(Q₀)‖_{S₁}`.
    pub measured: f64,
    /// `3σ‖f‖_∞ ‖Q₀‖_{S₁}`.
    pub bound: f64,
    pub ratio: f64,
    /// `|trace(M(Q₀)(A₁−A₂)) − trace(W₀Q₀)|`.
    pub pairing_defect: f64,
}

fn samples(hi: f64) -> Vec<f64> {
    let steps = (hi / SUP_STEP).ceil() as usize;
    (0..=steps).map(|i| -1.0 + i as f64 * SUP_STEP).collect()
}

pub fn regime_probe(ns: &[usize]) -> Result<Vec<ProbeRecord>> {
    ns.iter().map(|&n| probe_one(n)).collect()
}

fn probe_one(n: usize) -> Result<ProbeRecord> {
    let inst = build_counterexample(n)?;
    let w0 = inst.difference()?;
    let svd = w0.clone().svd(true, true);
    let top = (0..svd.singular_values.len())
        .max_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]))
        .unwrap_or(0);
    let u = svd.u.as_ref().expect("left vectors").column(top).into_owned();
    let v = svd.v_t.as_ref().expect("right vectors").row(top).adjoint();
    let q0: DenseMatrix = &v * u.adjoint();

    let f = Function2D::BandLimited(inst.f.clone());
    let (x1, x2, ys) = (inst.e_a1.real_values(), inst.e_a2.real_values(), inst.e_b.real_values());
    let f1 = f.grid(&x1, &ys);
    let f2 = f.grid(&x2, &ys);
    let d1 = f.grid_dx(&x1, &ys)?;
    let phi = |a: usize, b: usize, c: usize| {
        if x1[c] == x2[a] {
            d1[(c, b)]
        } else {
            (f1[(c, b)] - f2[(a, b)]) / (x1[c] - x2[a])
        }
    };
    let id = DenseMatrix::identity(n, n);
    let m = toi_direct_indexed(phi, &inst.e_a2, &id, &inst.e_b, &q0, &inst.e_a1)?;

    let t = &inst.a1 - &inst.a2;
    let pairing_defect = (trace_of_product(&m, &t) - trace_of_product(&w0, &q0)).norm();
    let sigma = inst.f.x_bandlimit();
    let f_sup = inst.f.separable_sup_bound(&samples(2.0 * n as f64 + 3.0), &samples(n as f64 + 3.0));
    let measured = schatten_norm(&m, 1.0)?;
    let bound = 3.0 * sigma * f_sup * schatten_norm(&q0, 1.0)?;
    Ok(ProbeRecord { n, measured, bound, ratio: measured / bound, pairing_defect })
}
