//! Littlewood–Paley filter `w` and the dyadic masks built from it.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// `exp(−1/t)` for `t > 0`, zero otherwise.
fn flat(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

/// Default filter: a smooth step rising on `[1/2, 1]`, extended to `[1, 2]`
/// by `w(s) = 1 − w(s/2)` and zero elsewhere.
pub fn standard_filter(s: f64) -> f64 {
    let rise = |s: f64| {
        let a = flat(s - 0.5);
        let b = flat(1.0 - s);
        a / (a + b)
    };
    if s <= 0.5 || s >= 2.0 {
        0.0
    } else if s <= 1.0 {
        rise(s)
    } else {
        1.0 - rise(s / 2.0)
    }
}

/// Filter choice for [`LpFilterBank`].
pub enum FilterKind {
    Standard,
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

/// Validated filter `w ≥ 0`, `supp w ⊆ [1/2, 2]`, `w(s) + w(s/2) = 1` on
/// `[1, 2]`.
#[derive(Clone)]
pub struct LpFilterBank {
    w: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for LpFilterBank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LpFilterBank")
    }
}

impl Default for LpFilterBank {
    fn default() -> Self {
        LpFilterBank { w: Arc::new(standard_filter) }
    }
}

/// Number of sample points used to validate a filter.
const CHECK_POINTS: usize = 4001;
const CHECK_TOL: f64 = 1e-12;

impl LpFilterBank {
    pub fn new(kind: FilterKind) -> Result<Self> {
        let w = match kind {
            FilterKind::Standard => return Ok(Self::default()),
            FilterKind::Custom(w) => w,
        };
        for i in 0..CHECK_POINTS {
            let s = 4.0 * i as f64 / (CHECK_POINTS - 1) as f64;
            let v = w(s);
            if !v.is_finite() || v < -CHECK_TOL {
                return Err(Error::ConstraintViolated(format!("w({s}) = {v} is negative or not finite")));
            }
            if (s < 0.5 || s > 2.0) && v.abs() > CHECK_TOL {
                return Err(Error::ConstraintViolated(format!("w({s}) = {v} outside [1/2, 2]")));
            }
            if (1.0..=2.0).contains(&s) && (v + w(s / 2.0) - 1.0).abs() > CHECK_TOL {
                return Err(Error::ConstraintViolated(format!("w({s}) + w({}) != 1", s / 2.0)));
            }
        }
        Ok(LpFilterBank { w })
    }

    pub fn w(&self, s: f64) -> f64 {
        (self.w)(s)
    }

    /// `Σ_{n ≥ 1} w(s/2ⁿ)` for `s ≥ 0`.
    fn high_sum(&self, s: f64) -> f64 {
        let mut total = 0.0;
        let mut n = 1;
        while s / 2f64.powi(n) > 0.25 {
            total += self.w(s / 2f64.powi(n));
            n += 1;
        }
        total
    }

    /// Torus mask for piece `n` at a frequency of Euclidean norm `s`.
    ///
    /// For `n ≥ 1` this is `w(s/2ⁿ)`. The low-pass mask is
    /// `1 − Σ_{n≥1} w(s/2ⁿ)`: it equals 1 on `s ≤ 1` and 0 on `s ≥ 2`, and
    /// makes the masks sum to one at frequencies with `1 < s < 2` as well.
    pub fn torus_mask(&self, n: u32, s: f64) -> f64 {
        if n == 0 {
            if s <= 1.0 {
                1.0
            } else {
                1.0 - self.high_sum(s)
            }
        } else {
            self.w(s / 2f64.powi(n as i32))
        }
    }

    /// Largest piece index with a nonzero torus mask at norm `s`.
    pub fn top_piece(&self, s: f64) -> u32 {
        if s <= 1.0 {
            0
        } else {
            (s.log2().floor() as u32) + 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_filter_partition() {
        for i in 0..=200 {
            let s = 1.0 + i as f64 / 200.0;
            assert!((standard_filter(s) + standard_filter(s / 2.0) - 1.0).abs() < 1e-15);
        }
        assert_eq!(standard_filter(0.5), 0.0);
        assert_eq!(standard_filter(1.0), 1.0);
        assert_eq!(standard_filter(2.0), 0.0);
    }

    #[test]
    fn bad_custom_filter_rejected() {
        let bad = LpFilterBank::new(FilterKind::Custom(Arc::new(|s| if (0.5..2.0).contains(&s) { 0.5 } else { 0.0 })));
        assert!(matches!(bad, Err(Error::ConstraintViolated(_))));
    }

    #[test]
    fn standard_passes_validation() {
        assert!(LpFilterBank::new(FilterKind::Custom(Arc::new(standard_filter))).is_ok());
    }
}
