//! Numerics for the Hurwitz zeta function, the generalized Stieltjes
//! constants and Abel-type regularized trigonometric Dirichlet series.
//!
//! Everything is computed in binary64. Each evaluator returns an
//! [`EvalResult`] carrying an a-posteriori error estimate next to the value,
//! so callers can tell when a result sits near the edge of its domain.
//!
//! Module map:
//!
//! * [`special`]: digamma, log-gamma and the Bernoulli table.
//! * [`hurwitz`]: ζ(s,x) and its first two s-derivatives (Euler–Maclaurin),
//!   with Hasse's globally convergent series as an independent route.
//! * [`stieltjes`]: γ₀(x), γ₁(x) and their integrals.
//! * [`regsum`]: oscillatory summation of Σ w(n)·trig(2nπx)·n^(s−1) and
//!   extrapolation s → 1 of the resulting analytic family.
//! * [`identities`]: the catalogue of identities checked against each other,
//!   and the verification report.

pub mod error;
pub mod extrapolate;
pub mod hurwitz;
pub mod identities;
pub mod quad;
pub mod regsum;
pub mod special;
pub mod stieltjes;
mod sum;

pub use error::{Error, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln(2π).
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// A computed value together with an absolute error estimate and work counters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// A-posteriori absolute error estimate, always ≥ 0.
    pub err_estimate: f64,
    /// Number of series terms (or function evaluations) spent.
    pub terms_used: usize,
    pub method: Method,
}

impl EvalResult {
    pub(crate) fn new(value: f64, err_estimate: f64, terms_used: usize, method: Method) -> Self {
        EvalResult {
            value,
            err_estimate: err_estimate.abs(),
            terms_used: terms_used.max(1),
            method,
        }
    }
}

/// Label for the algorithm that produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    EulerMaclaurin,
    Hasse,
    Asymptotic,
    Extrapolation,
    Oscillatory,
    Quadrature,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::EulerMaclaurin => "euler-maclaurin",
            Method::Hasse => "hasse",
            Method::Asymptotic => "asymptotic",
            Method::Extrapolation => "neville-extrapolation",
            Method::Oscillatory => "oscillatory-euler",
            Method::Quadrature => "gauss-legendre",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}
