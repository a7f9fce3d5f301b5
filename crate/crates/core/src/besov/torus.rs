//! Littlewood–Paley pieces, sup norms and `B¹_{∞,1}` norms of
//! trigonometric polynomials.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::funcalc::{TrigPoly1, TrigPoly2};
use crate::linalg::inverse_fft_2d;
use crate::C64;

use super::filter::LpFilterBank;

/// Grid points per unit of degree in each variable.
pub const OVERSAMPLING: usize = 16;

/// Sup norm of a trigonometric polynomial, bracketed by the largest grid
/// value and a Bernstein bound.
///
/// Every point lies within half a grid step of a grid point in each
/// variable, so `‖p‖_∞ ≤ grid_max + ‖p‖_∞ π (d_x/G_x + d_y/G_y)` and
/// `upper = grid_max / (1 − π (d_x/G_x + d_y/G_y))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupNorm {
    pub grid_max: f64,
    pub upper: f64,
    pub grid: (usize, usize),
}

fn grid_size(degree: usize) -> usize {
    (OVERSAMPLING * degree.max(1)).next_power_of_two()
}

pub fn sup_norm_torus(p: &TrigPoly2) -> SupNorm {
    let (dx, dy) = p.degrees();
    let (gx, gy) = (grid_size(dx), grid_size(dy));
    if p.terms.is_empty() {
        return SupNorm { grid_max: 0.0, upper: 0.0, grid: (gx, gy) };
    }
    let mut data = vec![C64::new(0.0, 0.0); gx * gy];
    for (&(j, k), &v) in &p.terms {
        let a = j.rem_euclid(gx as i32) as usize;
        let b = k.rem_euclid(gy as i32) as usize;
        data[a * gy + b] += v;
    }
    inverse_fft_2d(&mut data, gx, gy);
    let grid_max = data.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let slack = PI * (dx as f64 / gx as f64 + dy as f64 / gy as f64);
    SupNorm { grid_max, upper: grid_max / (1.0 - slack), grid: (gx, gy) }
}

pub fn sup_norm_torus_1d(p: &TrigPoly1) -> SupNorm {
    sup_norm_torus(&TrigPoly2::from_x(p))
}

/// Pieces `f_n = f ∗ W_n` and their sup norms.
#[derive(Debug, Clone)]
pub struct LpDecomposition {
    pub pieces: BTreeMap<u32, TrigPoly2>,
    pub norms: BTreeMap<u32, SupNorm>,
}

impl LpDecomposition {
    /// `Σ_n f_n`, coefficientwise.
    pub fn reconstruct(&self, periods: [f64; 2]) -> TrigPoly2 {
        let mut terms = BTreeMap::new();
        for piece in self.pieces.values() {
            for (&jk, &v) in &piece.terms {
                *terms.entry(jk).or_insert(C64::new(0.0, 0.0)) += v;
            }
        }
        TrigPoly2 { periods, terms }
    }
}

/// Masks every coefficient `c_{jk}` by the piece masks at `‖(j, k)‖₂`.
pub fn lp_decompose_torus(p: &TrigPoly2, bank: &LpFilterBank) -> LpDecomposition {
    let mut pieces: BTreeMap<u32, TrigPoly2> = BTreeMap::new();
    for (&(j, k), &v) in &p.terms {
        let s = (j as f64).hypot(k as f64);
        for n in 0..=bank.top_piece(s) {
            let m = bank.torus_mask(n, s);
            if m != 0.0 {
                pieces
                    .entry(n)
                    .or_insert_with(|| TrigPoly2 { periods: p.periods, terms: BTreeMap::new() })
                    .terms
                    .insert((j, k), v * m);
            }
        }
    }
    let norms = pieces.iter().map(|(&n, piece)| (n, sup_norm_torus(piece))).collect();
    LpDecomposition { pieces, norms }
}

pub fn lp_decompose_torus_1d(p: &TrigPoly1, bank: &LpFilterBank) -> LpDecomposition {
    lp_decompose_torus(&TrigPoly2::from_x(p), bank)
}

/// `Σ_n 2ⁿ ‖f_n‖_∞`, from grid maxima (`value`) and from the Bernstein
/// upper bounds (`upper`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesovNorm {
    pub value: f64,
    pub upper: f64,
}

pub fn besov_norm_1_inf_1(p: &TrigPoly2, bank: &LpFilterBank) -> BesovNorm {
    let dec = lp_decompose_torus(p, bank);
    let mut value = 0.0;
    let mut upper = 0.0;
    for (&n, s) in &dec.norms {
        let w = 2f64.powi(n as i32);
        value += w * s.grid_max;
        upper += w * s.upper;
    }
    BesovNorm { value, upper }
}

pub fn besov_norm_1d(p: &TrigPoly1, bank: &LpFilterBank) -> BesovNorm {
    besov_norm_1_inf_1(&TrigPoly2::from_x(p), bank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, re};

    #[test]
    fn first_harmonic_is_its_own_low_piece() {
        let p = TrigPoly2::torus([((1, 0), re(1.0))]);
        let dec = lp_decompose_torus(&p, &LpFilterBank::default());
        assert_eq!(dec.pieces.len(), 1);
        assert_eq!(dec.pieces[&0], p);
        assert_eq!(besov_norm_1_inf_1(&p, &LpFilterBank::default()).value, 1.0);
    }

    #[test]
    fn frequency_three_splits_between_pieces_one_and_two() {
        let bank = LpFilterBank::default();
        let p = TrigPoly2::torus([((3, 0), re(1.0))]);
        let dec = lp_decompose_torus(&p, &bank);
        assert_eq!(dec.pieces.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        let total = dec.pieces[&1].terms[&(3, 0)] + dec.pieces[&2].terms[&(3, 0)];
        assert!((total - re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn diagonal_frequency_is_reconstructed() {
        let p = TrigPoly2::torus([((1, 1), c(0.3, -0.2))]);
        let dec = lp_decompose_torus(&p, &LpFilterBank::default());
        let back = dec.reconstruct(p.periods);
        assert!((back.terms[&(1, 1)] - p.terms[&(1, 1)]).norm() < 1e-15);
    }

    #[test]
    fn sup_norm_bracket_contains_true_value() {
        let p = TrigPoly2::torus([((1, 0), re(1.0)), ((0, 2), re(1.0)), ((3, 1), c(0.0, 1.0))]);
        let s = sup_norm_torus(&p);
        assert!(s.grid_max <= 3.0 + 1e-12 && s.upper >= s.grid_max);
        let mut dense = 0.0f64;
        for a in 0..400 {
            for b in 0..400 {
                let x = a as f64 * 2.0 * PI / 400.0;
                let y = b as f64 * 2.0 * PI / 400.0;
                dense = dense.max(p.eval(x, y).norm());
            }
        }
        assert!(dense <= s.upper);
    }

    #[test]
    fn constant_norm_is_modulus() {
        let p = TrigPoly2::torus([((0, 0), c(3.0, 4.0))]);
        assert!((besov_norm_1_inf_1(&p, &LpFilterBank::default()).value - 5.0).abs() < 1e-15);
    }
}
