mod common;

use common::{c, degenerate_hermitian, square, INF};
use opcalc::experiments::{random_hermitian, random_unitary, trial_rng};
use opcalc::matcore::{reconstruct, schatten_norm, spectral_decompose, SpectrumKind};
use opcalc::{DenseMatrix, Error};
use proptest::prelude::*;
use rand::Rng;

const EXPONENTS: [f64; 6] = [1.0, 1.5, 2.0, 3.0, 4.0, INF];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermitian_round_trip(seed in any::<u64>(), n in 1usize..=16) {
        let h = random_hermitian(&mut trial_rng(seed, 0), n);
        let sm = spectral_decompose(&h, SpectrumKind::Hermitian).unwrap();
        prop_assert!((reconstruct(&sm) - &h).norm() <= 1e-10 * h.norm());
        prop_assert!(sm.projector_defect() <= 1e-10);
    }

    #[test]
    fn degenerate_spectra_are_merged(seed in any::<u64>(), n in 2usize..=12) {
        let h = degenerate_hermitian(&mut trial_rng(seed, 0), n);
        let sm = spectral_decompose(&h, SpectrumKind::Hermitian).unwrap();
        prop_assert!(sm.len() <= 5);
        let total: usize = (0..sm.len()).map(|i| sm.columns(i).len()).sum();
        prop_assert_eq!(total, n);
        prop_assert!((reconstruct(&sm) - &h).norm() <= 1e-10 * (1.0 + h.norm()));
        prop_assert!(sm.projector_defect() <= 1e-10);
    }

    #[test]
    fn unitary_round_trip(seed in any::<u64>(), n in 1usize..=16) {
        let u = random_unitary(&mut trial_rng(seed, 0), n);
        let sm = spectral_decompose(&u, SpectrumKind::Unitary).unwrap();
        prop_assert!((reconstruct(&sm) - &u).norm() <= 1e-10 * u.norm());
        for z in sm.values() {
            prop_assert!((z.norm() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn degenerate_unitary_round_trip(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = trial_rng(seed, 0);
        let w = random_unitary(&mut rng, n);
        let d = DenseMatrix::from_fn(n, n, |i, j| {
            if i == j {
                let t = rng.gen_range(0..6) as f64 * std::f64::consts::FRAC_PI_3;
                c(t.cos(), t.sin())
            } else {
                c(0.0, 0.0)
            }
        });
        let u = &w * d * w.adjoint();
        let sm = spectral_decompose(&u, SpectrumKind::Unitary).unwrap();
        prop_assert!(sm.len() <= 6);
        prop_assert!((reconstruct(&sm) - &u).norm() <= 1e-10 * u.norm());
        prop_assert!(sm.projector_defect() <= 1e-10);
    }

    #[test]
    fn schatten_norm_decreases_in_p(seed in any::<u64>(), n in 1usize..=10) {
        let m = square(&mut trial_rng(seed, 0), n);
        let norms: Vec<f64> = [0.5, 1.0, 2.0, 4.0, INF].iter().map(|&p| schatten_norm(&m, p).unwrap()).collect();
        for w in norms.windows(2) {
            prop_assert!(w[1] <= w[0] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn schatten_norm_is_unitarily_invariant(seed in any::<u64>(), n in 1usize..=10, pi in 0usize..6) {
        let mut rng = trial_rng(seed, 0);
        let m = square(&mut rng, n);
        let (u, v) = (random_unitary(&mut rng, n), random_unitary(&mut rng, n));
        let p = EXPONENTS[pi];
        let a = schatten_norm(&m, p).unwrap();
        let b = schatten_norm(&(&u * &m * &v), p).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a);
    }

    #[test]
    fn holder_inequality(seed in any::<u64>(), n in 1usize..=10, pi in 0usize..6, qi in 0usize..6) {
        let mut rng = trial_rng(seed, 0);
        let (m, k) = (square(&mut rng, n), square(&mut rng, n));
        let (p, q) = (EXPONENTS[pi], EXPONENTS[qi]);
        let r = 1.0 / (1.0 / p + 1.0 / q);
        let lhs = schatten_norm(&(&m * &k), r).unwrap();
        let rhs = schatten_norm(&m, p).unwrap() * schatten_norm(&k, q).unwrap();
        prop_assert!(lhs <= rhs * (1.0 + 1e-10));
    }
}

#[test]
fn invalid_exponent_is_refused() {
    let m = square(&mut trial_rng(1, 0), 3);
    assert!(matches!(schatten_norm(&m, 0.0), Err(Error::InvalidExponent(_))));
    assert!(matches!(schatten_norm(&m, f64::NAN), Err(Error::InvalidExponent(_))));
}

#[test]
fn non_finite_entries_are_refused() {
    let mut m = square(&mut trial_rng(2, 0), 3);
    m[(1, 2)].re = f64::NAN;
    assert!(schatten_norm(&m, 2.0).is_err());
    assert!(spectral_decompose(&m, SpectrumKind::Hermitian).is_err());
}
