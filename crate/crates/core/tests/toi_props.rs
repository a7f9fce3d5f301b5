mod common;

use common::toi_fixtures::{evaluator_gap, instance};
use common::{c, rel_diff, INF};
use opcalc::experiments::{audit_trials, regime_probe};
use opcalc::toi::{
    audit_schatten_bounds, toi_direct, toi_haagerup, toi_haagerup_like_1, toi_haagerup_like_2, toi_projective,
    BoundTheorem, RepRef,
};
use opcalc::{Error, C64};
use proptest::prelude::*;

#[test]
fn evaluators_agree_with_reference_on_200_instances() {
    let worst = (0..200).map(|trial| evaluator_gap(&instance(0x5EED, trial, 6))).fold(0.0, f64::max);
    assert!(worst <= 1e-10, "worst relative gap {worst:e}");
}

#[test]
fn audits_pass_in_regime() {
    let reports = audit_trials(&BoundTheorem::ALL, 500, 8, 0x5EED).unwrap();
    assert_eq!(reports.len(), 500);
    for r in &reports {
        assert!(r.verdict.passed(), "{}", r.csv_row());
    }
}

#[test]
fn out_of_regime_requests_are_refused() {
    let inst = instance(9, 0, 4);
    let [e1, e2, e3] = &inst.e;
    let (t, r) = (&inst.t, &inst.r);
    let refused = |res: opcalc::Result<_>| matches!(res, Err(Error::RegimeMismatch(_)));
    let h = RepRef::Haagerup(&inst.haagerup);
    let first = RepRef::FirstKind(&inst.first);
    let second = RepRef::SecondKind(&inst.second);
    assert!(refused(audit_schatten_bounds(BoundTheorem::HaagerupHilbertSchmidt, h, e1, t, e2, r, e3, INF, 3.0)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::HaagerupRight, h, e1, t, e2, r, e3, INF, 1.5)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::HaagerupLeft, h, e1, t, e2, r, e3, 1.5, INF)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::HaagerupHolder, h, e1, t, e2, r, e3, 2.0, 3.0)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::FirstKind, first, e1, t, e2, r, e3, 3.0, INF)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::FirstKind, first, e1, t, e2, r, e3, 1.5, 2.0)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::SecondKind, second, e1, t, e2, r, e3, INF, 3.0)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::SecondKind, second, e1, t, e2, r, e3, 1.5, 1.5)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::FirstKind, h, e1, t, e2, r, e3, 1.0, INF)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::HaagerupRight, second, e1, t, e2, r, e3, INF, 2.0)));
    assert!(refused(audit_schatten_bounds(BoundTheorem::FirstKind, first, e1, t, e2, r, e3, 0.5, INF)));
}

#[test]
fn first_kind_bound_shape_grows_on_counterexample() {
    let probe = regime_probe(&[4, 16, 64, 256]).unwrap();
    for w in probe.windows(2) {
        assert!(w[1].ratio > w[0].ratio);
    }
    assert!(probe[3].ratio >= 4.0 * probe[0].ratio, "{probe:?}");
    for p in &probe {
        assert!(p.pairing_defect <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn evaluators_agree_with_reference(seed in any::<u64>()) {
        prop_assert!(evaluator_gap(&instance(seed, 0, 6)) <= 1e-10);
    }

    #[test]
    fn evaluators_are_linear_in_t(seed in any::<u64>(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let inst = instance(seed, 0, 6);
        let [e1, e2, e3] = &inst.e;
        let (t, r) = (&inst.t, &inst.r);
        let z = c(re, im);
        let ts = t * z;
        let pairs = [
            (toi_haagerup(&inst.haagerup, e1, &ts, e2, r, e3).unwrap(), toi_haagerup(&inst.haagerup, e1, t, e2, r, e3).unwrap()),
            (toi_haagerup_like_1(&inst.first, e1, &ts, e2, r, e3).unwrap(), toi_haagerup_like_1(&inst.first, e1, t, e2, r, e3).unwrap()),
            (toi_haagerup_like_2(&inst.second, e1, &ts, e2, r, e3).unwrap(), toi_haagerup_like_2(&inst.second, e1, t, e2, r, e3).unwrap()),
            (toi_projective(&inst.projective, e1, &ts, e2, r, e3).unwrap(), toi_projective(&inst.projective, e1, t, e2, r, e3).unwrap()),
        ];
        for (scaled, base) in pairs {
            prop_assert!(rel_diff(&scaled, &(base * z)) <= 1e-12);
        }
    }

    #[test]
    fn adjoint_is_flipped_integral(seed in any::<u64>()) {
        let inst = instance(seed, 0, 6);
        let [e1, e2, e3] = &inst.e;
        let psi = |a: C64, b: C64, c: C64| (a * 0.7 + b * b - c).exp() + a * c.conj();
        let w = toi_direct(psi, e1, &inst.t, e2, &inst.r, e3).unwrap();
        let flipped = toi_direct(|a, b, c| psi(c, b, a).conj(), e3, &inst.r.adjoint(), e2, &inst.t.adjoint(), e1).unwrap();
        prop_assert!(rel_diff(&flipped, &w.adjoint()) <= 1e-10);
    }
}
