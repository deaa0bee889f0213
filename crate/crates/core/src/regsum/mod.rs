//! Weighted trigonometric Dirichlet series
//!
//! S(s, x) = Σ w(n)·trig(2nπx)·P(n)^(s−1),   P(n) = n or 2πn,
//!
//! evaluated strictly inside the convergence region s < 1 and continued to
//! the boundary by polynomial extrapolation in s. For a divergent series such
//! as Σ sin 2nπx this assigns the value lim_{s→1} S(s, x).
//!
//! Parity variants use the natural frequency of each family:
//!
//! * `AllN`:        Σ_{n≥1} w(n)·trig(2nπx)·P(n)^(s−1)
//! * `Alternating`: Σ_{n≥1} (−1)^(n+1)·w(n)·trig(nπx)·P(n)^(s−1)
//! * `OddOnly`:     Σ_{n≥0} w(2n+1)·trig((2n+1)πx)·P(2n+1)^(s−1)

mod engine;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::extrapolate::{halving_steps, neville_at_zero};
use crate::special::digamma;
use crate::stieltjes::gamma1_reflection_diff;
use crate::{Error, EvalResult, Method, Result, EULER_GAMMA, LN_2PI};

use engine::{frac_mul, oscillatory_sum};

/// Distance from the singular points x ∈ ℤ (in turns of the series' phase
/// step) inside which the acceleration degrades.
pub const ENDPOINT_GUARD: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trig {
    Sine,
    Cosine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    /// 1
    Unit,
    /// ln n
    LogN,
    /// ln(2πn)
    Log2PiN,
    /// γ + ln(2πn)
    GammaPlusLog2PiN,
}

impl Weight {
    fn at(self, n: f64) -> f64 {
        match self {
            Weight::Unit => 1.0,
            Weight::LogN => n.ln(),
            Weight::Log2PiN => LN_2PI + n.ln(),
            Weight::GammaPlusLog2PiN => EULER_GAMMA + LN_2PI + n.ln(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    AllN,
    Alternating,
    OddOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scale {
    /// n^(s−1)
    NPower,
    /// (2πn)^(s−1)
    TwoPiNPower,
}

/// One member S(s, x) of a weighted trigonometric family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigSeriesSpec {
    pub x: f64,
    pub trig: Trig,
    pub weight: Weight,
    pub parity: Parity,
    pub s: f64,
    pub scale: Scale,
}

impl TrigSeriesSpec {
    pub fn new(x: f64, trig: Trig, weight: Weight, parity: Parity, s: f64, scale: Scale) -> Self {
        TrigSeriesSpec {
            x,
            trig,
            weight,
            parity,
            s,
            scale,
        }
    }

    /// The plain `AllN`, `NPower` member.
    pub fn simple(x: f64, trig: Trig, weight: Weight, s: f64) -> Self {
        Self::new(x, trig, weight, Parity::AllN, s, Scale::NPower)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x > 0.0 && self.x < 1.0) {
            return Err(Error::domain("x", self.x, "0 < x < 1"));
        }
        if self.s.is_nan() || self.s >= 1.0 {
            return Err(Error::ConvergenceRegion {
                s: self.s,
                limit: 1.0,
            });
        }
        Ok(())
    }

    /// Phase step of the underlying power series, in turns.
    fn step(&self) -> f64 {
        match self.parity {
            Parity::AllN | Parity::OddOnly => self.x,
            Parity::Alternating => 0.5 * (1.0 + self.x),
        }
    }

    /// Distance of the power-series variable z from 1, in turns.
    pub fn endpoint_distance(&self) -> f64 {
        let t = self.step().rem_euclid(1.0);
        t.min(1.0 - t)
    }
}

/// Limit point and halving path s = s* − h₀·2^(−k), k = 0 … levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtrapolationPath {
    pub target: f64,
    pub h0: f64,
    pub levels: usize,
}

impl ExtrapolationPath {
    pub const DEFAULT_H0: f64 = 0.25;
    pub const DEFAULT_LEVELS: usize = 8;

    pub fn new(target: f64, h0: f64, levels: usize) -> Self {
        ExtrapolationPath { target, h0, levels }
    }

    /// h₀ = 1/4, eight halvings.
    pub fn toward(target: f64) -> Self {
        Self::new(target, Self::DEFAULT_H0, Self::DEFAULT_LEVELS)
    }

    pub fn validate(&self) -> Result<()> {
        if self.target != 0.0 && self.target != 1.0 {
            return Err(Error::InvalidPath("target must be 0 or 1"));
        }
        if !(self.h0 > 0.0 && self.h0 <= 0.25) {
            return Err(Error::InvalidPath("h0 must lie in (0, 1/4]"));
        }
        if self.levels < 6 {
            return Err(Error::InvalidPath("at least six halvings are required"));
        }
        Ok(())
    }

    pub fn offsets(&self) -> Vec<f64> {
        halving_steps(self.h0, self.levels)
    }
}

/// The complex sum Σ w(n)·e^(iθ_n)·P(n)^(s−1); real part is the cosine
/// series, imaginary part the sine series.
fn complex_sum(spec: &TrigSeriesSpec) -> Result<(Complex64, f64, usize)> {
    spec.validate()?;
    let TrigSeriesSpec {
        x,
        weight,
        s,
        scale,
        ..
    } = *spec;
    let scale_factor = match scale {
        Scale::NPower => 1.0,
        Scale::TwoPiNPower => (2.0 * PI).powf(s - 1.0),
    };
    let c = move |m: f64| weight.at(m) * m.powf(s - 1.0) * scale_factor;
    let half_x = 0.5 * x;
    let r = match spec.parity {
        Parity::AllN => oscillatory_sum(|n| c(n as f64), |n| frac_mul(n, x), spec.step(), 1),
        // (−1)^(n+1) e^(iπnx) = −(−e^(iπx))ⁿ
        Parity::Alternating => oscillatory_sum(
            |n| -c(n as f64),
            |n| frac_mul(n, half_x) + 0.5 * (n % 2) as f64,
            spec.step(),
            1,
        ),
        Parity::OddOnly => oscillatory_sum(
            |n| c((2 * n + 1) as f64),
            |n| frac_mul(n, x) + half_x,
            spec.step(),
            0,
        ),
    };
    Ok((r.value, r.err_estimate, r.terms))
}

/// S(s, x) for s strictly inside the convergence region.
pub fn trig_dirichlet_sum(spec: &TrigSeriesSpec) -> Result<EvalResult> {
    let (z, err, terms) = complex_sum(spec)?;
    let value = match spec.trig {
        Trig::Cosine => z.re,
        Trig::Sine => z.im,
    };
    Ok(EvalResult::new(value, err, terms, Method::Oscillatory))
}

/// Polynomial extrapolation of an arbitrary family f(s) to s = s* along `path`.
pub fn limit_along<F>(path: &ExtrapolationPath, f: F) -> Result<EvalResult>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    path.validate()?;
    let offsets = path.offsets();
    let mut values = Vec::with_capacity(offsets.len());
    let mut sample_err: f64 = 0.0;
    for &h in &offsets {
        let (v, e) = f(path.target - h)?;
        values.push(v);
        sample_err = sample_err.max(e);
    }
    finish_extrapolation(&offsets, &values, sample_err)
}

fn finish_extrapolation(offsets: &[f64], values: &[f64], sample_err: f64) -> Result<EvalResult> {
    let e = neville_at_zero(offsets, values)?;
    let n = e.corrections.len();
    if n >= 2 {
        let last = e.corrections[n - 1].abs();
        let prev = e.corrections[n - 2].abs();
        if last > prev && last > 1e-6 * e.value.abs().max(1.0) {
            return Err(Error::ExtrapolationInstability {
                last_correction: last,
            });
        }
    }
    // Neville's Lebesgue constant on a halving grid is below 10.
    Ok(EvalResult::new(
        e.value,
        e.err_estimate + 10.0 * sample_err,
        offsets.len(),
        Method::Extrapolation,
    ))
}

fn check_guarded(x: f64) -> Result<()> {
    if x > ENDPOINT_GUARD && x < 1.0 - ENDPOINT_GUARD {
        Ok(())
    } else {
        Err(Error::domain("x", x, "0.01 < x < 0.99"))
    }
}

/// lim_{s→s*} S(s, x), evaluated at s = s* − h_k and extrapolated to h = 0.
pub fn regularized_limit(
    x: f64,
    trig: Trig,
    weight: Weight,
    parity: Parity,
    scale: Scale,
    path: &ExtrapolationPath,
) -> Result<EvalResult> {
    check_guarded(x)?;
    limit_along(path, |s| {
        let r = trig_dirichlet_sum(&TrigSeriesSpec::new(x, trig, weight, parity, s, scale))?;
        Ok((r.value, r.err_estimate))
    })
}

/// Both parts of lim_{s→s*} Σ w(n)·e^(iθ_n)·P(n)^(s−1) from a single pass:
/// (cosine limit, sine limit).
pub fn regularized_limit_complex(
    x: f64,
    weight: Weight,
    parity: Parity,
    scale: Scale,
    path: &ExtrapolationPath,
) -> Result<(EvalResult, EvalResult)> {
    check_guarded(x)?;
    path.validate()?;
    let offsets = path.offsets();
    let mut re = Vec::with_capacity(offsets.len());
    let mut im = Vec::with_capacity(offsets.len());
    let mut sample_err: f64 = 0.0;
    for &h in &offsets {
        let spec = TrigSeriesSpec::new(x, Trig::Cosine, weight, parity, path.target - h, scale);
        let (z, e, _) = complex_sum(&spec)?;
        re.push(z.re);
        im.push(z.im);
        sample_err = sample_err.max(e);
    }
    Ok((
        finish_extrapolation(&offsets, &re, sample_err)?,
        finish_extrapolation(&offsets, &im, sample_err)?,
    ))
}

/// Closed-form targets of the regularized limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// lim Σ sin(2nπx)·n^(s−1) = ½cot(πx)
    SineUnit,
    /// lim Σ ln n·sin(2nπx)·n^(s−1) = ([γ₁(1−x) − γ₁(x)] − π[γ + ln 2π]cot(πx)) / 2π
    SineLog,
    /// lim Σ cos(2nπx)·n^(s−1) = −½
    CosineUnit,
    /// lim Σ ln n·cos(2nπx)·(2πn)^(s−1) = ½[ψ(x) + (π/2)cot(πx) + γ + ln 2π]
    CosineLog,
    /// lim Σ (−1)^(n+1) sin(nπx)·n^(s−1) = ½tan(πx/2)
    AlternatingSine,
    /// lim Σ (−1)^(n+1) cos(nπx)·n^(s−1) = ½
    AlternatingCosine,
    /// lim Σ sin((2n+1)πx)·(2n+1)^(s−1) = 1/(2 sin πx)
    ///
    /// Half of ½cot(πx/2) + ½tan(πx/2), which is 1/sin(πx) itself.
    OddSine,
    /// Re e^(2πix)/(1 − e^(2πix)) = −½
    ExponentialRe,
    /// Im e^(2πix)/(1 − e^(2πix)) = ½cot(πx)
    ExponentialIm,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 9] = [
        ClosedForm::SineUnit,
        ClosedForm::SineLog,
        ClosedForm::CosineUnit,
        ClosedForm::CosineLog,
        ClosedForm::AlternatingSine,
        ClosedForm::AlternatingCosine,
        ClosedForm::OddSine,
        ClosedForm::ExponentialRe,
        ClosedForm::ExponentialIm,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClosedForm::SineUnit => "EQ4.1",
            ClosedForm::SineLog => "EQ4.8",
            ClosedForm::CosineUnit => "EQ4.14",
            ClosedForm::CosineLog => "EQ4.18",
            ClosedForm::AlternatingSine => "EQ4.21",
            ClosedForm::AlternatingCosine => "EQ4.22",
            ClosedForm::OddSine => "EQ4.23",
            ClosedForm::ExponentialRe => "PROP4.3.RE",
            ClosedForm::ExponentialIm => "PROP4.3.IM",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

fn cot_pi(x: f64) -> f64 {
    let z = engine::cis_turns(0.5 * x);
    z.re / z.im
}

/// The closed-form value a regularized limit is expected to take.
pub fn closed_form(x: f64, case: ClosedForm) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain("x", x, "0 < x < 1"));
    }
    let v = match case {
        ClosedForm::SineUnit | ClosedForm::ExponentialIm => 0.5 * cot_pi(x),
        ClosedForm::SineLog => {
            let diff = gamma1_reflection_diff(x)?.value;
            (diff - PI * (EULER_GAMMA + LN_2PI) * cot_pi(x)) / (2.0 * PI)
        }
        ClosedForm::CosineUnit | ClosedForm::ExponentialRe => -0.5,
        ClosedForm::CosineLog => 0.5 * (digamma(x)? + 0.5 * PI * cot_pi(x) + EULER_GAMMA + LN_2PI),
        ClosedForm::AlternatingSine => 0.5 / cot_pi(0.5 * x),
        ClosedForm::AlternatingCosine => 0.5,
        ClosedForm::OddSine => 0.5 / engine::cis_turns(0.5 * x).im,
    };
    Ok(v)
}

/// Σ_{n≥1} (ln n / n)·cos(2nπu), the s = 0 member of the log-weighted cosine
/// family (conditionally convergent).
pub fn deninger_cos_log_sum(u: f64) -> Result<EvalResult> {
    check_guarded(u)?;
    trig_dirichlet_sum(&TrigSeriesSpec::simple(u, Trig::Cosine, Weight::LogN, 0.0))
}

/// (2/π)·Σ_{n≥1} ln(2πn)·sin(2nπx)/n.
pub fn kummer_sine_series(x: f64) -> Result<EvalResult> {
    check_guarded(x)?;
    let r = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Sine, Weight::Log2PiN, 0.0))?;
    Ok(scaled(r, 2.0 / PI))
}

/// Σ_{n≥1} ln n·sin(2nπu)/(πn).
pub fn log_sine_fourier(u: f64) -> Result<EvalResult> {
    check_guarded(u)?;
    let r = trig_dirichlet_sum(&TrigSeriesSpec::simple(u, Trig::Sine, Weight::LogN, 0.0))?;
    Ok(scaled(r, 1.0 / PI))
}

/// lim Σ (−1)ⁿ·ln n·(2πn)^(s−1) as s → 1, i.e. the regularized value of
/// Σ (−1)ⁿ ln n; equals ½ln(π/2).
pub fn alternating_log_limit() -> Result<EvalResult> {
    // cos(2nπ·½) = (−1)ⁿ
    regularized_limit(
        0.5,
        Trig::Cosine,
        Weight::LogN,
        Parity::AllN,
        Scale::TwoPiNPower,
        &ExtrapolationPath::toward(1.0),
    )
}

fn scaled(r: EvalResult, k: f64) -> EvalResult {
    EvalResult {
        value: k * r.value,
        err_estimate: k.abs() * r.err_estimate,
        ..r
    }
}

#[cfg(test)]
mod tests;
