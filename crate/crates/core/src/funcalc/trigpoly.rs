//! Trigonometric polynomials in one and two variables.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::{c, DenseMatrix, Error, Result, C64};

/// Tolerance for recognising a period as `2π`.
const PERIOD_TOL: f64 = 1e-12;

fn expi(t: f64) -> C64 {
    let (s, co) = t.sin_cos();
    c(co, s)
}

/// `Σ_j c_j e^{2πi j x / L}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly1 {
    pub period: f64,
    pub terms: BTreeMap<i32, C64>,
}

impl TrigPoly1 {
    /// Polynomial with period `2π`, so the term `j` is `e^{ijx}`.
    pub fn torus(terms: impl IntoIterator<Item = (i32, C64)>) -> Self {
        let mut map = BTreeMap::new();
        for (j, v) in terms {
            *map.entry(j).or_insert(c(0.0, 0.0)) += v;
        }
        TrigPoly1 { period: TAU, terms: map }
    }

    fn omega(&self) -> f64 {
        TAU / self.period
    }

    pub fn eval(&self, x: f64) -> C64 {
        let w = self.omega();
        self.terms.iter().map(|(&j, &v)| v * expi(w * j as f64 * x)).sum()
    }

    pub fn deriv(&self, x: f64) -> C64 {
        let w = self.omega();
        self.terms.iter().map(|(&j, &v)| v * c(0.0, w * j as f64) * expi(w * j as f64 * x)).sum()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|j| j.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn is_torus(&self) -> bool {
        (self.period - TAU).abs() <= PERIOD_TOL * TAU
    }

    pub fn conj(&self) -> Self {
        TrigPoly1 { period: self.period, terms: self.terms.iter().map(|(&j, v)| (-j, v.conj())).collect() }
    }

    pub fn scale(&self, s: C64) -> Self {
        TrigPoly1 { period: self.period, terms: self.terms.iter().map(|(&j, &v)| (j, v * s)).collect() }
    }
}

/// `Σ_{j,k} c_{jk} e^{2πi (j x / L_x + k y / L_y)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly2 {
    pub periods: [f64; 2],
    pub terms: BTreeMap<(i32, i32), C64>,
}

impl TrigPoly2 {
    /// Polynomial with both periods `2π`; the term `(j, k)` is
    /// `e^{i(jx + ky)}`, or `ζ^j τ^k` on the torus.
    pub fn torus(terms: impl IntoIterator<Item = ((i32, i32), C64)>) -> Self {
        let mut map = BTreeMap::new();
        for (jk, v) in terms {
            *map.entry(jk).or_insert(c(0.0, 0.0)) += v;
        }
        TrigPoly2 { periods: [TAU, TAU], terms: map }
    }

    /// Embeds a one-variable polynomial as a function of `x` alone.
    pub fn from_x(p: &TrigPoly1) -> Self {
        TrigPoly2 { periods: [p.period, TAU], terms: p.terms.iter().map(|(&j, &v)| ((j, 0), v)).collect() }
    }

    fn omegas(&self) -> (f64, f64) {
        (TAU / self.periods[0], TAU / self.periods[1])
    }

    pub fn is_torus(&self) -> bool {
        self.periods.iter().all(|p| (p - TAU).abs() <= PERIOD_TOL * TAU)
    }

    pub fn eval(&self, x: f64, y: f64) -> C64 {
        let (wx, wy) = self.omegas();
        self.terms.iter().map(|(&(j, k), &v)| v * expi(wx * j as f64 * x + wy * k as f64 * y)).sum()
    }

    pub fn dx(&self, x: f64, y: f64) -> C64 {
        let (wx, wy) = self.omegas();
        self.terms
            .iter()
            .map(|(&(j, k), &v)| v * c(0.0, wx * j as f64) * expi(wx * j as f64 * x + wy * k as f64 * y))
            .sum()
    }

    pub fn dy(&self, x: f64, y: f64) -> C64 {
        let (wx, wy) = self.omegas();
        self.terms
            .iter()
            .map(|(&(j, k), &v)| v * c(0.0, wy * k as f64) * expi(wx * j as f64 * x + wy * k as f64 * y))
            .sum()
    }

    /// `Σ c_{jk} ζ^j τ^k` at unit complex numbers.
    pub fn eval_torus(&self, zeta: C64, tau: C64) -> C64 {
        self.terms.iter().map(|(&(j, k), &v)| v * zeta.powi(j) * tau.powi(k)).sum()
    }

    /// `∂/∂ζ Σ c_{jk} ζ^j τ^k`.
    pub fn dzeta_torus(&self, zeta: C64, tau: C64) -> C64 {
        self.terms.iter().map(|(&(j, k), &v)| v * (j as f64) * zeta.powi(j - 1) * tau.powi(k)).sum()
    }

    /// `∂/∂τ Σ c_{jk} ζ^j τ^k`.
    pub fn dtau_torus(&self, zeta: C64, tau: C64) -> C64 {
        self.terms.iter().map(|(&(j, k), &v)| v * (k as f64) * zeta.powi(j) * tau.powi(k - 1)).sum()
    }

    /// Values on the tensor grid `xs × ys` as a dense matrix.
    pub fn grid(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let (wx, wy) = self.omegas();
        let js: Vec<i32> = {
            let mut v: Vec<i32> = self.terms.keys().map(|&(j, _)| j).collect();
            v.sort();
            v.dedup();
            v
        };
        let ks: Vec<i32> = {
            let mut v: Vec<i32> = self.terms.keys().map(|&(_, k)| k).collect();
            v.sort();
            v.dedup();
            v
        };
        let jpos: BTreeMap<i32, usize> = js.iter().enumerate().map(|(i, &j)| (j, i)).collect();
        let kpos: BTreeMap<i32, usize> = ks.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut coeff = DenseMatrix::zeros(js.len(), ks.len());
        for (&(j, k), &v) in &self.terms {
            coeff[(jpos[&j], kpos[&k])] += v;
        }
        let ex = DenseMatrix::from_fn(xs.len(), js.len(), |a, b| expi(wx * js[b] as f64 * xs[a]));
        let ey = DenseMatrix::from_fn(ks.len(), ys.len(), |b, a| expi(wy * ks[b] as f64 * ys[a]));
        ex * coeff * ey
    }

    /// Largest `|j|` and `|k|`.
    pub fn degrees(&self) -> (usize, usize) {
        let dx = self.terms.keys().map(|&(j, _)| j.unsigned_abs() as usize).max().unwrap_or(0);
        let dy = self.terms.keys().map(|&(_, k)| k.unsigned_abs() as usize).max().unwrap_or(0);
        (dx, dy)
    }

    /// Radius of the Fourier support in the Euclidean norm.
    pub fn bandlimit(&self) -> f64 {
        let (wx, wy) = self.omegas();
        self.terms.keys().map(|&(j, k)| (wx * j as f64).hypot(wy * k as f64)).fold(0.0, f64::max)
    }

    /// `g(y, x) = f(x, y)`.
    pub fn flip(&self) -> Self {
        TrigPoly2 {
            periods: [self.periods[1], self.periods[0]],
            terms: self.terms.iter().map(|(&(j, k), &v)| ((k, j), v)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        TrigPoly2 { periods: self.periods, terms: self.terms.iter().map(|(&(j, k), v)| ((-j, -k), v.conj())).collect() }
    }

    pub fn scale(&self, s: C64) -> Self {
        TrigPoly2 { periods: self.periods, terms: self.terms.iter().map(|(&jk, &v)| (jk, v * s)).collect() }
    }

    pub fn add(&self, other: &TrigPoly2) -> Result<Self> {
        if self.periods != other.periods {
            return Err(Error::InvalidInput("trigonometric polynomials with different periods".into()));
        }
        let mut terms = self.terms.clone();
        for (&jk, &v) in &other.terms {
            *terms.entry(jk).or_insert(c(0.0, 0.0)) += v;
        }
        Ok(TrigPoly2 { periods: self.periods, terms })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&TrigPolyJson::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<TrigPolyJson>(s)?.try_into()
    }
}

/// JSON interchange: `{"periods":[Lx,Ly],"terms":[{"j","k","re","im"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrigPolyJson {
    pub periods: [f64; 2],
    pub terms: Vec<TrigTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrigTermJson {
    pub j: i32,
    pub k: i32,
    pub re: f64,
    pub im: f64,
}

impl From<&TrigPoly2> for TrigPolyJson {
    fn from(p: &TrigPoly2) -> Self {
        TrigPolyJson {
            periods: p.periods,
            terms: p.terms.iter().map(|(&(j, k), v)| TrigTermJson { j, k, re: v.re, im: v.im }).collect(),
        }
    }
}

impl TryFrom<TrigPolyJson> for TrigPoly2 {
    type Error = Error;

    fn try_from(js: TrigPolyJson) -> Result<Self> {
        if !js.periods.iter().all(|p| p.is_finite() && *p > 0.0) {
            return Err(Error::InvalidInput(format!("periods must be positive, got {:?}", js.periods)));
        }
        let mut terms = BTreeMap::new();
        for t in js.terms {
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(Error::InvalidInput(format!("non-finite coefficient at ({}, {})", t.j, t.k)));
            }
            *terms.entry((t.j, t.k)).or_insert(c(0.0, 0.0)) += c(t.re, t.im);
        }
        Ok(TrigPoly2 { periods: js.periods, terms })
    }
}
