//! Function representations accepted by the functional calculus.

use std::fmt;
use std::sync::Arc;

use super::atoms::Atom;
use super::trigpoly::{TrigPoly1, TrigPoly2};
use crate::{re, DenseMatrix, Error, Result, C64};

pub type Fn1 = Arc<dyn Fn(f64) -> C64 + Send + Sync>;
pub type Fn2 = Arc<dyn Fn(f64, f64) -> C64 + Send + Sync>;

/// Central difference with step `∛ε (1 + |x|)`.
pub fn central_difference(g: impl Fn(f64) -> C64, x: f64) -> C64 {
    let h = f64::EPSILON.cbrt() * (1.0 + x.abs());
    (g(x + h) - g(x - h)) / (2.0 * h)
}

/// Linear combination of atoms `Σ c_a a(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomSum1 {
    pub terms: Vec<(C64, Atom)>,
}

impl AtomSum1 {
    pub fn eval(&self, x: f64) -> C64 {
        self.terms.iter().map(|(c, a)| c * a.eval(x)).sum()
    }

    pub fn deriv(&self, x: f64) -> C64 {
        self.terms.iter().map(|(c, a)| c * a.deriv(x)).sum()
    }
}

/// Black-box function of one variable with an optional derivative.
#[derive(Clone)]
pub struct Callable1 {
    pub f: Fn1,
    pub df: Option<Fn1>,
}

impl fmt::Debug for Callable1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Callable1").field("has_derivative", &self.df.is_some()).finish()
    }
}

#[derive(Debug, Clone)]
pub enum Function1D {
    Trig(TrigPoly1),
    Atoms(AtomSum1),
    Callable(Callable1),
}

impl Function1D {
    pub fn callable(f: impl Fn(f64) -> C64 + Send + Sync + 'static) -> Self {
        Function1D::Callable(Callable1 { f: Arc::new(f), df: None })
    }

    pub fn eval(&self, x: f64) -> C64 {
        match self {
            Function1D::Trig(p) => p.eval(x),
            Function1D::Atoms(a) => a.eval(x),
            Function1D::Callable(g) => (g.f)(x),
        }
    }

    pub fn deriv(&self, x: f64) -> C64 {
        match self {
            Function1D::Trig(p) => p.deriv(x),
            Function1D::Atoms(a) => a.deriv(x),
            Function1D::Callable(g) => match &g.df {
                Some(d) => d(x),
                None => central_difference(|t| (g.f)(t), x),
            },
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Function1D::Trig(p) => Function1D::Trig(p.conj()),
            Function1D::Atoms(a) => Function1D::Atoms(AtomSum1 {
                terms: a.terms.iter().map(|(c, at)| (c.conj(), at.conj())).collect(),
            }),
            Function1D::Callable(g) => {
                let f = g.f.clone();
                let df = g.df.clone();
                Function1D::Callable(Callable1 {
                    f: Arc::new(move |x| f(x).conj()),
                    df: df.map(|d| Arc::new(move |x| d(x).conj()) as Fn1),
                })
            }
        }
    }

    pub fn bandlimit(&self) -> Option<f64> {
        match self {
            Function1D::Trig(p) => Some(std::f64::consts::TAU / p.period * p.degree() as f64),
            Function1D::Atoms(a) => Some(a.terms.iter().map(|(_, at)| at.bandlimit()).fold(0.0, f64::max)),
            Function1D::Callable(_) => None,
        }
    }
}

/// `f(x, y) = Σ_{a,b} c_{ab} X_a(x) Y_b(y)` with closed-form atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomSum2 {
    pub x_atoms: Vec<Atom>,
    pub y_atoms: Vec<Atom>,
    /// Coefficient matrix, `x_atoms.len()` by `y_atoms.len()`.
    pub coeffs: DenseMatrix,
}

impl AtomSum2 {
    pub fn new(x_atoms: Vec<Atom>, y_atoms: Vec<Atom>, coeffs: DenseMatrix) -> Result<Self> {
        if coeffs.nrows() != x_atoms.len() || coeffs.ncols() != y_atoms.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} x-atoms and {} y-atoms with a {}x{} coefficient matrix",
                x_atoms.len(),
                y_atoms.len(),
                coeffs.nrows(),
                coeffs.ncols()
            )));
        }
        Ok(AtomSum2 { x_atoms, y_atoms, coeffs })
    }

    fn x_table(&self, xs: &[f64], deriv: bool) -> DenseMatrix {
        DenseMatrix::from_fn(xs.len(), self.x_atoms.len(), |i, a| {
            if deriv {
                self.x_atoms[a].deriv(xs[i])
            } else {
                self.x_atoms[a].eval(xs[i])
            }
        })
    }

    fn y_table(&self, ys: &[f64], deriv: bool) -> DenseMatrix {
        DenseMatrix::from_fn(self.y_atoms.len(), ys.len(), |b, i| {
            if deriv {
                self.y_atoms[b].deriv(ys[i])
            } else {
                self.y_atoms[b].eval(ys[i])
            }
        })
    }

    pub fn grid(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        self.x_table(xs, false) * &self.coeffs * self.y_table(ys, false)
    }

    pub fn grid_dx(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        self.x_table(xs, true) * &self.coeffs * self.y_table(ys, false)
    }

    pub fn grid_dy(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        self.x_table(xs, false) * &self.coeffs * self.y_table(ys, true)
    }

    pub fn eval(&self, x: f64, y: f64) -> C64 {
        self.grid(&[x], &[y])[(0, 0)]
    }

    /// Radius of the Fourier support in the Euclidean norm.
    pub fn bandlimit(&self) -> f64 {
        let bx = self.x_atoms.iter().map(Atom::bandlimit).fold(0.0, f64::max);
        let by = self.y_atoms.iter().map(Atom::bandlimit).fold(0.0, f64::max);
        bx.hypot(by)
    }

    /// Radius of the Fourier support in the first variable alone.
    pub fn x_bandlimit(&self) -> f64 {
        self.x_atoms.iter().map(Atom::bandlimit).fold(0.0, f64::max)
    }

    /// `x ↦ amp · f(x/s, y/s)`.
    pub fn dilate(&self, s: f64, amp: f64) -> Self {
        AtomSum2 {
            x_atoms: self.x_atoms.iter().map(|a| a.dilate(s)).collect(),
            y_atoms: self.y_atoms.iter().map(|a| a.dilate(s)).collect(),
            coeffs: &self.coeffs * re(amp),
        }
    }

    /// Upper bound `max|c| · sup_x Σ_a |X_a(x)| · sup_y Σ_b |Y_b(y)|`, with
    /// the one-variable sups taken on the supplied sample points.
    pub fn separable_sup_bound(&self, xs: &[f64], ys: &[f64]) -> f64 {
        let cmax = self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let sx = xs
            .iter()
            .map(|&x| self.x_atoms.iter().map(|a| a.eval(x).norm()).sum::<f64>())
            .fold(0.0, f64::max);
        let sy = ys
            .iter()
            .map(|&y| self.y_atoms.iter().map(|a| a.eval(y).norm()).sum::<f64>())
            .fold(0.0, f64::max);
        cmax * sx * sy
    }
}

/// `f(x, y) = Σ_n φ_n(x) ψ_n(y)`.
#[derive(Debug, Clone)]
pub struct SeparableSum {
    pub factors: Vec<(Function1D, Function1D)>,
}

impl SeparableSum {
    pub fn eval(&self, x: f64, y: f64) -> C64 {
        self.factors.iter().map(|(a, b)| a.eval(x) * b.eval(y)).sum()
    }

    pub fn dx(&self, x: f64, y: f64) -> C64 {
        self.factors.iter().map(|(a, b)| a.deriv(x) * b.eval(y)).sum()
    }

    pub fn dy(&self, x: f64, y: f64) -> C64 {
        self.factors.iter().map(|(a, b)| a.eval(x) * b.deriv(y)).sum()
    }

    pub fn grid(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(xs.len(), ys.len());
        for (a, b) in &self.factors {
            let ax: Vec<C64> = xs.iter().map(|&x| a.eval(x)).collect();
            let by: Vec<C64> = ys.iter().map(|&y| b.eval(y)).collect();
            for i in 0..xs.len() {
                for j in 0..ys.len() {
                    out[(i, j)] += ax[i] * by[j];
                }
            }
        }
        out
    }
}

/// Black-box function of two variables.
///
/// Missing partial derivatives fall back to central differences when
/// `fallback` is set; otherwise divided differences at coincident points
/// fail with [`Error::MissingDerivative`].
#[derive(Clone)]
pub struct Callable2 {
    pub f: Fn2,
    pub dx: Option<Fn2>,
    pub dy: Option<Fn2>,
    pub bandlimit: Option<f64>,
    pub fallback: bool,
}

impl fmt::Debug for Callable2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Callable2")
            .field("has_dx", &self.dx.is_some())
            .field("has_dy", &self.dy.is_some())
            .field("bandlimit", &self.bandlimit)
            .field("fallback", &self.fallback)
            .finish()
    }
}

/// A function of two real variables in one of four representations.
#[derive(Debug, Clone)]
pub enum Function2D {
    TrigPoly(TrigPoly2),
    BandLimited(AtomSum2),
    Separable(SeparableSum),
    Callable(Callable2),
}

impl From<TrigPoly2> for Function2D {
    fn from(p: TrigPoly2) -> Self {
        Function2D::TrigPoly(p)
    }
}

impl From<AtomSum2> for Function2D {
    fn from(a: AtomSum2) -> Self {
        Function2D::BandLimited(a)
    }
}

impl From<SeparableSum> for Function2D {
    fn from(s: SeparableSum) -> Self {
        Function2D::Separable(s)
    }
}

impl Function2D {
    /// Black-box function with derivative fallback enabled.
    pub fn callable(f: impl Fn(f64, f64) -> C64 + Send + Sync + 'static) -> Self {
        Function2D::Callable(Callable2 { f: Arc::new(f), dx: None, dy: None, bandlimit: None, fallback: true })
    }

    /// Black-box function with exact partial derivatives.
    pub fn callable_with_derivatives(
        f: impl Fn(f64, f64) -> C64 + Send + Sync + 'static,
        dx: impl Fn(f64, f64) -> C64 + Send + Sync + 'static,
        dy: impl Fn(f64, f64) -> C64 + Send + Sync + 'static,
    ) -> Self {
        Function2D::Callable(Callable2 {
            f: Arc::new(f),
            dx: Some(Arc::new(dx)),
            dy: Some(Arc::new(dy)),
            bandlimit: None,
            fallback: true,
        })
    }

    /// Disables the central-difference fallback of a black-box function.
    pub fn without_fallback(self) -> Self {
        match self {
            Function2D::Callable(mut g) => {
                g.fallback = false;
                Function2D::Callable(g)
            }
            other => other,
        }
    }

    pub fn with_bandlimit(self, sigma: f64) -> Self {
        match self {
            Function2D::Callable(mut g) => {
                g.bandlimit = Some(sigma);
                Function2D::Callable(g)
            }
            other => other,
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> C64 {
        match self {
            Function2D::TrigPoly(p) => p.eval(x, y),
            Function2D::BandLimited(a) => a.eval(x, y),
            Function2D::Separable(s) => s.eval(x, y),
            Function2D::Callable(g) => (g.f)(x, y),
        }
    }

    /// `∂f/∂x`.
    pub fn dx(&self, x: f64, y: f64) -> Result<C64> {
        Ok(match self {
            Function2D::TrigPoly(p) => p.dx(x, y),
            Function2D::BandLimited(a) => a.grid_dx(&[x], &[y])[(0, 0)],
            Function2D::Separable(s) => s.dx(x, y),
            Function2D::Callable(g) => match (&g.dx, g.fallback) {
                (Some(d), _) => d(x, y),
                (None, true) => central_difference(|t| (g.f)(t, y), x),
                (None, false) => return Err(Error::MissingDerivative("x")),
            },
        })
    }

    /// `∂f/∂y`.
    pub fn dy(&self, x: f64, y: f64) -> Result<C64> {
        Ok(match self {
            Function2D::TrigPoly(p) => p.dy(x, y),
            Function2D::BandLimited(a) => a.grid_dy(&[x], &[y])[(0, 0)],
            Function2D::Separable(s) => s.dy(x, y),
            Function2D::Callable(g) => match (&g.dy, g.fallback) {
                (Some(d), _) => d(x, y),
                (None, true) => central_difference(|t| (g.f)(x, t), y),
                (None, false) => return Err(Error::MissingDerivative("y")),
            },
        })
    }

    /// Values on the tensor grid `xs × ys`.
    pub fn grid(&self, xs: &[f64], ys: &[f64]) -> DenseMatrix {
        match self {
            Function2D::TrigPoly(p) => p.grid(xs, ys),
            Function2D::BandLimited(a) => a.grid(xs, ys),
            Function2D::Separable(s) => s.grid(xs, ys),
            Function2D::Callable(g) => DenseMatrix::from_fn(xs.len(), ys.len(), |i, j| (g.f)(xs[i], ys[j])),
        }
    }

    /// `∂f/∂x` on the tensor grid `xs × ys`.
    pub fn grid_dx(&self, xs: &[f64], ys: &[f64]) -> Result<DenseMatrix> {
        match self {
            Function2D::BandLimited(a) => Ok(a.grid_dx(xs, ys)),
            _ => {
                let mut out = DenseMatrix::zeros(xs.len(), ys.len());
                for (i, &x) in xs.iter().enumerate() {
                    for (j, &y) in ys.iter().enumerate() {
                        out[(i, j)] = self.dx(x, y)?;
                    }
                }
                Ok(out)
            }
        }
    }

    /// Radius of the Fourier support, when known.
    pub fn bandlimit(&self) -> Option<f64> {
        match self {
            Function2D::TrigPoly(p) => Some(p.bandlimit()),
            Function2D::BandLimited(a) => Some(a.bandlimit()),
            Function2D::Separable(s) => {
                let mut r: f64 = 0.0;
                for (a, b) in &s.factors {
                    r = r.max(a.bandlimit()?.hypot(b.bandlimit()?));
                }
                Some(r)
            }
            Function2D::Callable(g) => g.bandlimit,
        }
    }

    /// Radius of the Fourier support in the first variable, when known.
    /// Black-box functions report their declared Euclidean band limit.
    pub fn x_bandlimit(&self) -> Option<f64> {
        match self {
            Function2D::TrigPoly(p) => Some(std::f64::consts::TAU / p.periods[0] * p.degrees().0 as f64),
            Function2D::BandLimited(a) => Some(a.x_bandlimit()),
            Function2D::Separable(s) => {
                let mut r: f64 = 0.0;
                for (a, _) in &s.factors {
                    r = r.max(a.bandlimit()?);
                }
                Some(r)
            }
            Function2D::Callable(g) => g.bandlimit,
        }
    }

    /// `g(y, x) = f(x, y)`.
    pub fn flip(&self) -> Function2D {
        match self {
            Function2D::TrigPoly(p) => Function2D::TrigPoly(p.flip()),
            Function2D::BandLimited(a) => Function2D::BandLimited(AtomSum2 {
                x_atoms: a.y_atoms.clone(),
                y_atoms: a.x_atoms.clone(),
                coeffs: a.coeffs.transpose(),
            }),
            Function2D::Separable(s) => Function2D::Separable(SeparableSum {
                factors: s.factors.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            }),
            Function2D::Callable(g) => {
                let f = g.f.clone();
                let flip2 = |h: &Fn2| {
                    let h = h.clone();
                    Arc::new(move |x: f64, y: f64| h(y, x)) as Fn2
                };
                Function2D::Callable(Callable2 {
                    f: Arc::new(move |x, y| f(y, x)),
                    dx: g.dy.as_ref().map(flip2),
                    dy: g.dx.as_ref().map(flip2),
                    bandlimit: g.bandlimit,
                    fallback: g.fallback,
                })
            }
        }
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> Function2D {
        match self {
            Function2D::TrigPoly(p) => Function2D::TrigPoly(p.conj()),
            Function2D::BandLimited(a) => Function2D::BandLimited(AtomSum2 {
                x_atoms: a.x_atoms.iter().map(Atom::conj).collect(),
                y_atoms: a.y_atoms.iter().map(Atom::conj).collect(),
                coeffs: a.coeffs.map(|z| z.conj()),
            }),
            Function2D::Separable(s) => Function2D::Separable(SeparableSum {
                factors: s.factors.iter().map(|(a, b)| (a.conj(), b.conj())).collect(),
            }),
            Function2D::Callable(g) => {
                let f = g.f.clone();
                let conj2 = |h: &Fn2| {
                    let h = h.clone();
                    Arc::new(move |x: f64, y: f64| h(x, y).conj()) as Fn2
                };
                Function2D::Callable(Callable2 {
                    f: Arc::new(move |x, y| f(x, y).conj()),
                    dx: g.dx.as_ref().map(conj2),
                    dy: g.dy.as_ref().map(conj2),
                    bandlimit: g.bandlimit,
                    fallback: g.fallback,
                })
            }
        }
    }
}
