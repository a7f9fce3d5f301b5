mod common;

use std::f64::consts::{PI, TAU};

use common::{band_limited, c, hermitian_measure};
use opcalc::divdiff::{
    build_haagerup_like_rep_d1, build_torus_rep_d1, divdiff_matrix, divided_diff_1, divided_diff_2, hilbert_norm,
    partition_deficit_bound, sinc_expand_d1, sinc_partition_sum, torus_divided_diff_1, torus_divided_diff_2,
    torus_expand_d1, xi_normalization, SincRepOptions,
};
use opcalc::experiments::{loglog_slope, random_trigpoly2, trial_rng};
use opcalc::funcalc::Function2D;
use opcalc::C64;
use proptest::prelude::*;

fn unit(t: f64) -> C64 {
    c(t.cos(), t.sin())
}

#[test]
fn partition_deficit_within_bound_on_grid() {
    for radius in [100, 1000] {
        for k in 0..=400 {
            let x = -10.0 + 0.05 * k as f64;
            let deficit = (1.0 - sinc_partition_sum(x, radius)).abs();
            assert!(deficit <= partition_deficit_bound(x, radius), "x={x} J={radius}");
        }
    }
}

#[test]
fn sinc_expansion_converges_at_first_order() {
    let radii = [125usize, 250, 500, 1000, 2000];
    for (name, f, _) in band_limited() {
        for &(x1, x2, y) in &[(0.3, 1.7, 0.0), (0.9, 0.9, 0.4)] {
            let exact = divided_diff_1(&f, x1, x2, y).unwrap();
            let pts: Vec<(f64, f64)> = radii
                .iter()
                .map(|&r| (r as f64, (sinc_expand_d1(&f, x1, x2, y, r).unwrap() - exact).norm()))
                .collect();
            if pts.iter().all(|p| p.1 < 1e-13) {
                continue;
            }
            let slope = -loglog_slope(&pts);
            assert!(slope >= 0.9, "{name} at ({x1},{x2},{y}): slope {slope}, errors {pts:?}");
        }
    }
}

#[test]
fn divided_difference_matrix_norm_at_most_three_sup() {
    for (name, f, sup) in band_limited() {
        for y in [0.0, 0.5, 2.0] {
            for radius in [50, 150] {
                let norm = divdiff_matrix(&f, y, radius).unwrap().norm();
                assert!(norm <= 3.0 * sup, "{name} y={y} J={radius}: {norm}");
            }
        }
    }
}

#[test]
fn discrete_hilbert_section_norm_near_pi() {
    let h = hilbert_norm(4096, 100);
    assert!(h <= PI && h >= PI - 0.05, "{h}");
}

#[test]
fn sinc_representation_reproduces_divided_differences() {
    let mut rng = trial_rng(3, 0);
    let (e1, e2, e3) = (hermitian_measure(&mut rng, 5), hermitian_measure(&mut rng, 5), hermitian_measure(&mut rng, 5));
    for (name, f, sup) in band_limited() {
        let opts = SincRepOptions { sigma: None, f_sup: sup, radius: None };
        let rep = build_haagerup_like_rep_d1(&f, opts, &e1, &e2, &e3).unwrap();
        for i in 0..e1.len() {
            for j in 0..e2.len() {
                for k in 0..e3.len() {
                    let want = divided_diff_1(&f, e1.values()[i].re, e2.values()[j].re, e3.values()[k].re).unwrap();
                    assert!((rep.rep.eval(i, j, k) - want).norm() <= 1e-10 * (1.0 + want.norm()), "{name}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn partition_deficit_within_bound(x in -10.0f64..10.0, big in any::<bool>()) {
        let radius = if big { 1000 } else { 100 };
        prop_assert!((1.0 - sinc_partition_sum(x, radius)).abs() <= partition_deficit_bound(x, radius));
    }

    #[test]
    fn xi_kernels_are_normalised(t in 0.0f64..TAU, n in 0usize..=64) {
        prop_assert!((xi_normalization(n, unit(t)) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn flip_duality(seed in any::<u64>(), x in -3.0f64..3.0, y1 in -3.0f64..3.0, y2 in -3.0f64..3.0, same in any::<bool>()) {
        let p = random_trigpoly2(&mut trial_rng(seed, 0), 3);
        let f = Function2D::TrigPoly(p);
        let y2 = if same { y1 } else { y2 };
        let a = divided_diff_2(&f, x, y1, y2).unwrap();
        let b = divided_diff_1(&f.flip(), y1, y2, x).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn torus_flip_duality(seed in any::<u64>(), s in 0.0f64..TAU, t1 in 0.0f64..TAU, t2 in 0.0f64..TAU) {
        let p = random_trigpoly2(&mut trial_rng(seed, 0), 3);
        let a = torus_divided_diff_2(&p, unit(s), unit(t1), unit(t2));
        let b = torus_divided_diff_1(&p.flip(), unit(t1), unit(t2), unit(s));
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn torus_expansion_reproduces_divided_differences(
        seed in any::<u64>(),
        deg in 1usize..=6,
        extra in 0usize..=3,
        s1 in 0.0f64..TAU,
        s2 in 0.0f64..TAU,
        tau in 0.0f64..TAU,
        same in any::<bool>(),
    ) {
        let p = random_trigpoly2(&mut trial_rng(seed, 0), deg);
        let s2 = if same { s1 } else { s2 };
        let (z1, z2, t) = (unit(s1), unit(s2), unit(tau));
        let want = torus_divided_diff_1(&p, z1, z2, t);
        let got = torus_expand_d1(&p, z1, z2, t, deg + extra).unwrap();
        prop_assert!((got - want).norm() <= 1e-10 * (1.0 + want.norm()));
    }

    #[test]
    fn torus_representation_is_exact(seed in any::<u64>(), deg in 1usize..=4, n in 1usize..=6) {
        let mut rng = trial_rng(seed, 0);
        let p = random_trigpoly2(&mut rng, deg);
        let e: Vec<_> = (0..3).map(|_| common::unitary_measure(&mut rng, n)).collect();
        let rep = build_torus_rep_d1(&p, &e[0], &e[1], &e[2]).unwrap();
        for i in 0..e[0].len() {
            for j in 0..e[1].len() {
                for k in 0..e[2].len() {
                    let want = torus_divided_diff_1(&p, e[0].values()[i], e[1].values()[j], e[2].values()[k]);
                    prop_assert!((rep.eval(i, j, k) - want).norm() <= 1e-10 * (1.0 + want.norm()));
                }
            }
        }
    }
}
