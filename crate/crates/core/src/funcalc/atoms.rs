//! Closed-form one-variable building blocks with known Fourier transforms.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{c, re, C64};

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        0.0
    } else {
        (PI * r).sin()
    }
}

/// `cos(πx)` after exact reduction modulo 2.
pub fn cos_pi(x: f64) -> f64 {
    (PI * (x - 2.0 * (x / 2.0).round())).cos()
}

/// `sin(πx)/(πx)` with value 1 at the origin.
pub fn sinc_pi(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        sin_pi(x) / (PI * x)
    }
}

fn sinc_pi_deriv(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let p2 = PI * PI;
        -p2 * x / 3.0 + p2 * p2 * x * x * x / 30.0
    } else {
        (PI * x * cos_pi(x) - sin_pi(x)) / (PI * x * x)
    }
}

/// Fejér-type atom `(1 − cos 2πx)/(2π²x²) = (sin πx / πx)²`.
///
/// Equals 1 at the origin and vanishes at every other integer. Its Fourier
/// transform is the triangle `(1 − |t|/2π)_+`.
pub fn fejer(x: f64) -> f64 {
    let s = sinc_pi(x);
    s * s
}

pub fn fejer_deriv(x: f64) -> f64 {
    if x != 0.0 && x.fract() == 0.0 {
        return 0.0;
    }
    2.0 * sinc_pi(x) * sinc_pi_deriv(x)
}

/// Triangle `(1 − |t|/2π)_+`.
pub fn fejer_transform(t: f64) -> f64 {
    (1.0 - t.abs() / (2.0 * PI)).max(0.0)
}

/// One-variable atom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Atom {
    /// `fejer((x − center)/width)`.
    Fejer { center: f64, width: f64 },
    /// `e^{i freq x}`.
    Exp { freq: f64 },
    /// `sin(σ(x − center)) / (σ(x − center))`.
    Sinc { center: f64, sigma: f64 },
}

impl Atom {
    pub fn eval(&self, x: f64) -> C64 {
        match *self {
            Atom::Fejer { center, width } => re(fejer((x - center) / width)),
            Atom::Exp { freq } => {
                let (s, co) = (freq * x).sin_cos();
                c(co, s)
            }
            Atom::Sinc { center, sigma } => re(sinc_pi(sigma * (x - center) / PI)),
        }
    }

    pub fn deriv(&self, x: f64) -> C64 {
        match *self {
            Atom::Fejer { center, width } => re(fejer_deriv((x - center) / width) / width),
            Atom::Exp { freq } => c(0.0, freq) * self.eval(x),
            Atom::Sinc { center, sigma } => re(sinc_pi_deriv(sigma * (x - center) / PI) * sigma / PI),
        }
    }

    /// Radius of the Fourier support.
    pub fn bandlimit(&self) -> f64 {
        match *self {
            Atom::Fejer { width, .. } => 2.0 * PI / width,
            Atom::Exp { freq } => freq.abs(),
            Atom::Sinc { sigma, .. } => sigma.abs(),
        }
    }

    /// Fourier transform `∫ a(x) e^{−ixt} dx` for integrable atoms.
    pub fn fourier(&self, t: f64) -> Option<C64> {
        match *self {
            Atom::Fejer { center, width } => {
                let (s, co) = (-center * t).sin_cos();
                Some(c(co, s) * (width * fejer_transform(width * t)))
            }
            Atom::Exp { .. } => None,
            Atom::Sinc { center, sigma } => {
                let sigma = sigma.abs();
                if t.abs() > sigma {
                    Some(re(0.0))
                } else {
                    let (s, co) = (-center * t).sin_cos();
                    Some(c(co, s) * (PI / sigma))
                }
            }
        }
    }

    /// Atom of the conjugate function.
    pub fn conj(&self) -> Atom {
        match *self {
            Atom::Exp { freq } => Atom::Exp { freq: -freq },
            other => other,
        }
    }

    /// Atom of `x ↦ a(x/s)`.
    pub fn dilate(&self, s: f64) -> Atom {
        match *self {
            Atom::Fejer { center, width } => Atom::Fejer { center: center * s, width: width * s },
            Atom::Exp { freq } => Atom::Exp { freq: freq / s },
            Atom::Sinc { center, sigma } => Atom::Sinc { center: center * s, sigma: sigma / s },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fejer_vanishes_at_nonzero_integers() {
        assert_eq!(fejer(0.0), 1.0);
        for k in 1..600 {
            assert_eq!(fejer(k as f64), 0.0);
            assert_eq!(fejer(-(k as f64)), 0.0);
        }
    }

    #[test]
    fn fejer_matches_cosine_form() {
        for &x in &[0.3, -1.7, 2.25, 10.1] {
            let direct = (1.0 - (2.0 * PI * x).cos()) / (2.0 * PI * PI * x * x);
            assert!((fejer(x) - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn atom_derivatives_match_central_differences() {
        let atoms = [
            Atom::Fejer { center: 0.4, width: 1.3 },
            Atom::Exp { freq: 0.8 },
            Atom::Sinc { center: -0.2, sigma: 0.9 },
        ];
        for a in atoms {
            for &x in &[-2.1, 0.4, 0.400001, 1.7, 3.0] {
                let h = 1e-5;
                let fd = (a.eval(x + h) - a.eval(x - h)) / (2.0 * h);
                assert!((fd - a.deriv(x)).norm() < 1e-8, "{a:?} at {x}");
            }
        }
    }

    #[test]
    fn fejer_fourier_integrates_to_one() {
        let a = Atom::Fejer { center: 0.0, width: 1.0 };
        assert!((a.fourier(0.0).unwrap().re - 1.0).abs() < 1e-15);
        assert_eq!(a.fourier(2.0 * PI + 1e-9).unwrap().norm(), 0.0);
    }
}
