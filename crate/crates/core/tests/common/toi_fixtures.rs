use opcalc::experiments::random::gaussian_matrix;
use opcalc::experiments::trial_rng;
use opcalc::matcore::SpectralMeasure;
use opcalc::toi::{
    toi_direct_table, toi_haagerup, toi_haagerup_like_1, toi_haagerup_like_2, toi_projective, toi_projector_sum,
    HaagerupLikeRep1, HaagerupLikeRep2, HaagerupRep, ProjectiveRep, Table3,
};
use opcalc::{DenseMatrix, C64};
use rand::Rng;

use super::{hermitian_measure, rel_diff, square, unitary_measure};

pub struct Instance {
    pub e: [SpectralMeasure; 3],
    pub t: DenseMatrix,
    pub r: DenseMatrix,
    pub haagerup: HaagerupRep,
    pub first: HaagerupLikeRep1,
    pub second: HaagerupLikeRep2,
    pub projective: ProjectiveRep,
}

pub fn instance(seed: u64, trial: u64, max_dim: usize) -> Instance {
    let mut rng = trial_rng(seed, trial);
    let n = rng.gen_range(1..=max_dim);
    let measure = |rng: &mut rand_chacha::ChaCha8Rng| {
        if rng.gen_bool(0.25) {
            unitary_measure(rng, n)
        } else {
            hermitian_measure(rng, n)
        }
    };
    let e = [measure(&mut rng), measure(&mut rng), measure(&mut rng)];
    let (t, r) = (square(&mut rng, n), square(&mut rng, n));
    let s = [e[0].len(), e[1].len(), e[2].len()];
    let supports = || [e[0].values().to_vec(), e[1].values().to_vec(), e[2].values().to_vec()];
    let (j, k) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let g = |rng: &mut rand_chacha::ChaCha8Rng, a: usize, b: usize| gaussian_matrix(rng, a, b);
    let haagerup = HaagerupRep::new(
        supports(),
        g(&mut rng, s[0], j),
        (0..s[1]).map(|_| g(&mut rng, j, k)).collect(),
        g(&mut rng, s[2], k),
    )
    .unwrap();
    let first = HaagerupLikeRep1::new(
        supports(),
        g(&mut rng, s[0], j),
        g(&mut rng, s[1], k),
        (0..s[2]).map(|_| g(&mut rng, j, k)).collect(),
    )
    .unwrap();
    let second = HaagerupLikeRep2::new(
        supports(),
        (0..s[0]).map(|_| g(&mut rng, j, k)).collect(),
        g(&mut rng, s[1], j),
        g(&mut rng, s[2], k),
    )
    .unwrap();
    let projective =
        ProjectiveRep::new(supports(), g(&mut rng, s[0], j), g(&mut rng, s[1], j), g(&mut rng, s[2], j)).unwrap();
    Instance { e, t, r, haagerup, first, second, projective }
}

pub fn table(e: &[SpectralMeasure; 3], f: impl FnMut(usize, usize, usize) -> C64) -> Table3 {
    Table3::from_fn([e[0].len(), e[1].len(), e[2].len()], f)
}

/// The four structured evaluators and the projector sum against the
/// reference, on one random instance; returns the worst relative gap.
pub fn evaluator_gap(inst: &Instance) -> f64 {
    let Instance { e, t, r, .. } = inst;
    let [e1, e2, e3] = e;
    let mut worst: f64 = 0.0;
    let mut check = |got: DenseMatrix, values: Table3| {
        let want = toi_direct_table(&values, e1, t, e2, r, e3).unwrap();
        worst = worst.max(rel_diff(&got, &want));
    };
    check(toi_haagerup(&inst.haagerup, e1, t, e2, r, e3).unwrap(), table(e, |i, j, k| inst.haagerup.eval(i, j, k)));
    check(toi_haagerup_like_1(&inst.first, e1, t, e2, r, e3).unwrap(), table(e, |i, j, k| inst.first.eval(i, j, k)));
    check(toi_haagerup_like_2(&inst.second, e1, t, e2, r, e3).unwrap(), table(e, |i, j, k| inst.second.eval(i, j, k)));
    check(toi_projective(&inst.projective, e1, t, e2, r, e3).unwrap(), table(e, |i, j, k| inst.projective.eval(i, j, k)));
    let values = table(e, |i, j, k| inst.haagerup.eval(i, j, k));
    check(toi_projector_sum(&values, e1, t, e2, r, e3), values.clone());
    worst
}
