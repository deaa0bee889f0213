//! Generalized Stieltjes constants γ₀(x), γ₁(x), defined by
//!
//! ζ(s,x) = 1/(s−1) + Σ_n (−1)ⁿ/n!·γₙ(x)·(s−1)ⁿ.
//!
//! γ₀ is −ψ. γ₁ is summed by Euler–Maclaurin on f(t) = ln t / t, whose
//! antiderivative ½ln²t closes the divergent tail. The finite-difference
//! routes through ζ near s = 1 are kept as independent checks.

use crate::extrapolate::neville_at_zero;
use crate::hurwitz::{hurwitz_zeta, HurwitzQuery};
use crate::quad;
use crate::special::{bernoulli_over_factorial, digamma};
use crate::sum::KahanSum;
use crate::{Error, EvalResult, Method, Result};

/// Direct terms before the Euler–Maclaurin tail.
const GAMMA1_CUTOFF: usize = 50;

/// Bernoulli pairs B₂ … B₁₆ in the γ₁ tail.
const GAMMA1_PAIRS: usize = 8;

/// Steps h for the ζ-difference routes; (s−1)ζ(s,x) is entire, so Neville
/// in h² converges fast.
const DIFFERENCE_STEPS: [f64; 5] = [1.0 / 4.0, 1.0 / 8.0, 1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesQuery {
    /// Order, 0 or 1.
    pub n: u8,
    pub x: f64,
}

impl StieltjesQuery {
    pub fn new(n: u8, x: f64) -> Self {
        StieltjesQuery { n, x }
    }
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("x", x, "x > 0"))
    }
}

/// f(t) = ln t / t.
#[inline]
fn log_over(t: f64) -> f64 {
    t.ln() / t
}

/// Regularized tail of Σ_{n≥N} ln(n+x)/(n+x) at a = N + x:
/// −½ln²a + ½f(a) − Σ_k B_{2k}/(2k)!·f^(2k−1)(a),
/// with f^(j)(t) = (−1)^j j!(ln t − H_j)/t^(j+1). Returns (tail, |last correction|).
fn log_over_tail(a: f64) -> (f64, f64) {
    let coeffs = bernoulli_over_factorial();
    let l = a.ln();
    let mut tail = -0.5 * l * l + 0.5 * l / a;
    let mut harmonic = 0.0;
    let mut fact = 1.0;
    let mut pow = 1.0 / a; // a^-(j+1)
    let mut last = 0.0;
    for j in 1..2 * GAMMA1_PAIRS {
        harmonic += 1.0 / j as f64;
        fact *= j as f64;
        pow /= a;
        if j % 2 == 1 {
            let deriv = -fact * (l - harmonic) * pow;
            last = coeffs[j.div_ceil(2)] * deriv;
            tail -= last;
        }
    }
    (tail, last.abs())
}

/// γ_n(x) for n ∈ {0, 1}.
pub fn stieltjes_gamma(q: StieltjesQuery) -> Result<EvalResult> {
    check_x(q.x)?;
    match q.n {
        0 => {
            let v = -digamma(q.x)?;
            Ok(EvalResult::new(
                v,
                4.0 * f64::EPSILON * v.abs().max(1.0),
                1,
                Method::Asymptotic,
            ))
        }
        1 => {
            let mut acc = KahanSum::new();
            acc.extend((0..GAMMA1_CUTOFF).map(|n| log_over(n as f64 + q.x)));
            let (tail, last) = log_over_tail(GAMMA1_CUTOFF as f64 + q.x);
            acc.add(tail);
            Ok(EvalResult::new(
                acc.value(),
                last + 4.0 * f64::EPSILON * acc.abs_total(),
                GAMMA1_CUTOFF + GAMMA1_PAIRS,
                Method::EulerMaclaurin,
            ))
        }
        n => Err(Error::domain("n", n as f64, "0 or 1")),
    }
}

/// γ₁(1−x) − γ₁(x) = Σ_{n≥0} [ln(n+1−x)/(n+1−x) − ln(n+x)/(n+x)], summed
/// termwise in pairs with a paired Euler–Maclaurin tail.
pub fn gamma1_reflection_diff(x: f64) -> Result<EvalResult> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain("x", x, "0 < x < 1"));
    }
    let y = 1.0 - x;
    let mut acc = KahanSum::new();
    for n in 0..GAMMA1_CUTOFF {
        let k = n as f64;
        acc.add(log_over(k + y) - log_over(k + x));
    }
    let (ty, ly) = log_over_tail(GAMMA1_CUTOFF as f64 + y);
    let (tx, lx) = log_over_tail(GAMMA1_CUTOFF as f64 + x);
    acc.add(ty - tx);
    Ok(EvalResult::new(
        acc.value(),
        ly + lx + 4.0 * f64::EPSILON * acc.abs_total(),
        2 * (GAMMA1_CUTOFF + GAMMA1_PAIRS),
        Method::EulerMaclaurin,
    ))
}

/// ∫₁ᵘ γₙ(x) dx = (−1)^(n+1)/(n+1)·[ζ^(n+1)(0,u) − ζ^(n+1)(0,1)].
pub fn integral_gamma(n: u8, u: f64) -> Result<EvalResult> {
    if n > 1 {
        return Err(Error::domain("n", n as f64, "0 or 1"));
    }
    check_x(u)?;
    let order = n + 1;
    let at_u = hurwitz_zeta(HurwitzQuery::new(0.0, u, order))?;
    let at_1 = hurwitz_zeta(HurwitzQuery::new(0.0, 1.0, order))?;
    let sign = if order.is_multiple_of(2) { 1.0 } else { -1.0 };
    let factor = sign / order as f64;
    Ok(EvalResult::new(
        factor * (at_u.value - at_1.value),
        factor.abs() * (at_u.err_estimate + at_1.err_estimate),
        at_u.terms_used + at_1.terms_used,
        Method::EulerMaclaurin,
    ))
}

/// ∫ₐᵇ γ₁(x) dx by 20-point Gauss–Legendre on the series route.
pub fn integral_gamma1_quadrature(a: f64, b: f64) -> Result<EvalResult> {
    check_x(a.min(b))?;
    let f = |x: f64| stieltjes_gamma(StieltjesQuery::new(1, x)).map(|r| r.value);
    let v = quad::integrate(&f, a, b)?;
    Ok(EvalResult::new(
        v,
        1e-14 * (b - a).abs(),
        20,
        Method::Quadrature,
    ))
}

/// g(1 ± h) with g(s) = (s−1)ζ(s,x).
fn residue_pair(x: f64, h: f64) -> Result<(f64, f64)> {
    let up = hurwitz_zeta(HurwitzQuery::new(1.0 + h, x, 0))?.value;
    let down = hurwitz_zeta(HurwitzQuery::new(1.0 - h, x, 0))?.value;
    Ok((h * up, -h * down))
}

fn difference_route(x: f64, sample: impl Fn(f64, f64, f64) -> f64) -> Result<EvalResult> {
    check_x(x)?;
    let mut t = Vec::with_capacity(DIFFERENCE_STEPS.len());
    let mut y = Vec::with_capacity(DIFFERENCE_STEPS.len());
    for &h in &DIFFERENCE_STEPS {
        let (up, down) = residue_pair(x, h)?;
        t.push(h * h);
        y.push(sample(h, up, down));
    }
    let e = neville_at_zero(&t, &y)?;
    Ok(EvalResult::new(
        e.value,
        e.err_estimate,
        2 * DIFFERENCE_STEPS.len(),
        Method::Extrapolation,
    ))
}

/// γ₀(x) = ∂ₛ[(s−1)ζ(s,x)] at s = 1, from central differences of ζ at
/// s = 1 ± h extrapolated to h = 0.
pub fn gamma0_by_zeta_differences(x: f64) -> Result<EvalResult> {
    difference_route(x, |h, up, down| (up - down) / (2.0 * h))
}

/// γ₁(x) = −½∂²ₛ[(s−1)ζ(s,x)] at s = 1, using (s−1)ζ(s,x) → 1 at s = 1.
pub fn gamma1_by_zeta_differences(x: f64) -> Result<EvalResult> {
    difference_route(x, |h, up, down| -0.5 * (up + down - 2.0) / (h * h))
}
