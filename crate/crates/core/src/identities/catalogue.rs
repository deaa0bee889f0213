use std::f64::consts::{LN_2, PI};

use super::{Domain, GridPoint, IdentityCase};
use crate::hurwitz::{hurwitz_zeta, pole_residue_limit, HurwitzQuery};
use crate::regsum::{
    alternating_log_limit, deninger_cos_log_sum, kummer_sine_series, log_sine_fourier,
    regularized_limit, regularized_limit_complex, trig_dirichlet_sum, ExtrapolationPath, Parity,
    Scale, Trig, TrigSeriesSpec, Weight,
};
use crate::special::{digamma, gamma, log_gamma};
use crate::stieltjes::{
    gamma0_by_zeta_differences, integral_gamma, integral_gamma1_quadrature, stieltjes_gamma,
    StieltjesQuery,
};
use crate::{Result, EULER_GAMMA, LN_2PI};

const RESIDUE_X: &[f64] = &[0.5, 1.0, 3.7];
const SHIFT_S: &[f64] = &[-2.0, -0.5, 0.5, 2.0, 3.5];
const HALF_S: &[f64] = &[-2.5, -1.0, 0.0, 0.5, 2.0, 3.0];
const FOURIER_S: &[f64] = &[-2.0, -1.0, -0.5, 0.25, 0.5];
const INTEGRAL_U: &[f64] = &[0.5, 1.5, 2.5, 3.0];

fn zeta(s: f64, x: f64, m: u8) -> Result<f64> {
    hurwitz_zeta(HurwitzQuery::new(s, x, m)).map(|r| r.value)
}

fn gamma1(x: f64) -> Result<f64> {
    stieltjes_gamma(StieltjesQuery::new(1, x)).map(|r| r.value)
}

fn cot_pi(x: f64) -> f64 {
    1.0 / (PI * x).tan()
}

fn limit(x: f64, trig: Trig, weight: Weight, parity: Parity, scale: Scale) -> Result<f64> {
    regularized_limit(
        x,
        trig,
        weight,
        parity,
        scale,
        &ExtrapolationPath::toward(1.0),
    )
    .map(|r| r.value)
}

fn series(x: f64, trig: Trig, weight: Weight, s: f64, scale: Scale) -> Result<f64> {
    trig_dirichlet_sum(&TrigSeriesSpec::new(
        x,
        trig,
        weight,
        Parity::AllN,
        s,
        scale,
    ))
    .map(|r| r.value)
}

fn zero(_: &GridPoint) -> Result<f64> {
    Ok(0.0)
}

fn one(_: &GridPoint) -> Result<f64> {
    Ok(1.0)
}

/// ψ(x) through the log(2πn)-weighted cosine limit.
fn psi_by_limit(x: f64) -> Result<f64> {
    let l = limit(
        x,
        Trig::Cosine,
        Weight::Log2PiN,
        Parity::AllN,
        Scale::TwoPiNPower,
    )?;
    Ok(2.0 * l - 0.5 * PI * cot_pi(x) - EULER_GAMMA)
}

/// ½[ζ''(0,u) + ζ''(0,1−u)].
fn half_zeta2_pair(u: f64) -> Result<f64> {
    Ok(0.5 * (zeta(0.0, u, 2)? + zeta(0.0, 1.0 - u, 2)?))
}

fn gamma1_reflected(p: &GridPoint) -> Result<f64> {
    Ok(gamma1(1.0 - p.x())? - gamma1(p.x())?)
}

/// (2^s − 1)ζ(s) and its first two s-derivatives.
fn half_argument_rhs(s: f64, m: u8) -> Result<f64> {
    let p = 2f64.powf(s);
    let z0 = zeta(s, 1.0, 0)?;
    Ok(match m {
        0 => (p - 1.0) * z0,
        1 => p * LN_2 * z0 + (p - 1.0) * zeta(s, 1.0, 1)?,
        _ => {
            p * LN_2 * LN_2 * z0 + 2.0 * p * LN_2 * zeta(s, 1.0, 1)? + (p - 1.0) * zeta(s, 1.0, 2)?
        }
    })
}

pub fn registry() -> Vec<IdentityCase> {
    vec![
        IdentityCase {
            id: "EQ2.3",
            title: "(s−1)ζ(s,x) → 1 as s → 1",
            domain: Domain::XValues(RESIDUE_X),
            tol: 1e-9,
            notes: "simple pole with residue 1; limit by Neville extrapolation from s = 1 ± h",
            lhs: |p| pole_residue_limit(p.x(), 0.25, 8).map(|r| r.value),
            rhs: one,
        },
        IdentityCase {
            id: "EQ3.2",
            title: "γ₀(x) = −ψ(x)",
            domain: Domain::XGrid,
            tol: 1e-9,
            notes: "left side from differences of (s−1)ζ(s,x) about s = 1",
            lhs: |p| gamma0_by_zeta_differences(p.x()).map(|r| r.value),
            rhs: |p| Ok(-digamma(p.x())?),
        },
        IdentityCase {
            id: "EQ3.9",
            title: "ζ(s,1+x) − ζ(s,x) = −x^(−s)",
            domain: Domain::SxGrid(SHIFT_S),
            tol: 1e-9,
            notes: "",
            lhs: |p| Ok(zeta(p.s(), 1.0 + p.x(), 0)? - zeta(p.s(), p.x(), 0)?),
            rhs: |p| Ok(-p.x().powf(-p.s())),
        },
        IdentityCase {
            id: "EQ3.10",
            title: "γ₁(1+x) − γ₁(x) = −ln x / x",
            domain: Domain::XGrid,
            tol: 1e-9,
            notes: "",
            lhs: |p| Ok(gamma1(1.0 + p.x())? - gamma1(p.x())?),
            rhs: |p| Ok(-p.x().ln() / p.x()),
        },
        IdentityCase {
            id: "EQ3.11",
            title: "ψ(1+x) = ψ(x) + 1/x",
            domain: Domain::XGrid,
            tol: 1e-9,
            notes: "",
            lhs: |p| digamma(1.0 + p.x()),
            rhs: |p| Ok(digamma(p.x())? + 1.0 / p.x()),
        },
        IdentityCase {
            id: "EQ3.17",
            title: "∫₁ᵘ γ₁(x)dx = ½[ζ''(0,u) − ζ''(0)]",
            domain: Domain::UValues(INTEGRAL_U),
            tol: 1e-9,
            notes: "right side by Gauss–Legendre quadrature of the γ₁ series",
            lhs: |p| integral_gamma(1, p.u()).map(|r| r.value),
            rhs: |p| integral_gamma1_quadrature(1.0, p.u()).map(|r| r.value),
        },
        IdentityCase {
            id: "EQ3.18",
            title: "ζ'(0,x) = ln Γ(x) − ½ln 2π",
            domain: Domain::XGrid,
            tol: 1e-9,
            notes: "Lerch",
            lhs: |p| zeta(0.0, p.x(), 1),
            rhs: |p| Ok(log_gamma(p.x())? - 0.5 * LN_2PI),
        },
        IdentityCase {
            id: "EQ3.20",
            title: "∫₁² γ₁(x)dx = 0",
            domain: Domain::UValues(&[2.0]),
            tol: 1e-9,
            notes: "through the ζ''(0,·) antiderivative",
            lhs: |p| integral_gamma(1, p.u()).map(|r| r.value),
            rhs: zero,
        },
        IdentityCase {
            id: "EQ3.21",
            title: "∫₀¹ γ₁(1+x)dx = 0",
            domain: Domain::Scalar,
            tol: 1e-9,
            notes: "Gauss–Legendre quadrature of the γ₁ series",
            lhs: |_| integral_gamma1_quadrature(1.0, 2.0).map(|r| r.value),
            rhs: zero,
        },
        IdentityCase {
            id: "HALF.M0",
            title: "ζ(s,½) = (2^s − 1)ζ(s)",
            domain: Domain::SValues(HALF_S),
            tol: 1e-9,
            notes: "",
            lhs: |p| zeta(p.s(), 0.5, 0),
            rhs: |p| half_argument_rhs(p.s(), 0),
        },
        IdentityCase {
            id: "HALF.M1",
            title: "∂ₛ of ζ(s,½) = (2^s − 1)ζ(s)",
            domain: Domain::SValues(HALF_S),
            tol: 1e-9,
            notes: "",
            lhs: |p| zeta(p.s(), 0.5, 1),
            rhs: |p| half_argument_rhs(p.s(), 1),
        },
        IdentityCase {
            id: "HALF.M2",
            title: "∂²ₛ of ζ(s,½) = (2^s − 1)ζ(s)",
            domain: Domain::SValues(HALF_S),
            tol: 1e-9,
            notes: "",
            lhs: |p| zeta(p.s(), 0.5, 2),
            rhs: |p| half_argument_rhs(p.s(), 2),
        },
        IdentityCase {
            id: "EQ4.4",
            title: "ζ(s,x) + ζ(s,1−x) = 4Γ(1−s)sin(πs/2)Σcos(2nπx)(2πn)^(s−1)",
            domain: Domain::SxGrid(FOURIER_S),
            tol: 1e-8,
            notes: "Hurwitz's Fourier expansion, even part",
            lhs: |p| Ok(zeta(p.s(), p.x(), 0)? + zeta(p.s(), 1.0 - p.x(), 0)?),
            rhs: |p| {
                let c = series(p.x(), Trig::Cosine, Weight::Unit, p.s(), Scale::TwoPiNPower)?;
                Ok(4.0 * gamma(1.0 - p.s())? * (0.5 * PI * p.s()).sin() * c)
            },
        },
        IdentityCase {
            id: "EQ4.5",
            title: "ζ(s,x) − ζ(s,1−x) = 4Γ(1−s)cos(πs/2)Σsin(2nπx)(2πn)^(s−1)",
            domain: Domain::SxGrid(FOURIER_S),
            tol: 1e-8,
            notes: "Hurwitz's Fourier expansion, odd part",
            lhs: |p| Ok(zeta(p.s(), p.x(), 0)? - zeta(p.s(), 1.0 - p.x(), 0)?),
            rhs: |p| {
                let c = series(p.x(), Trig::Sine, Weight::Unit, p.s(), Scale::TwoPiNPower)?;
                Ok(4.0 * gamma(1.0 - p.s())? * (0.5 * PI * p.s()).cos() * c)
            },
        },
        IdentityCase {
            id: "EQ4.1",
            title: "lim Σ sin(2nπx)·n^(s−1) = ½cot(πx)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "regularized value of Σ sin 2nπx",
            lhs: |p| limit(p.x(), Trig::Sine, Weight::Unit, Parity::AllN, Scale::NPower),
            rhs: |p| Ok(0.5 * cot_pi(p.x())),
        },
        IdentityCase {
            id: "EQ4.14",
            title: "lim Σ cos(2nπx)·n^(s−1) = −½",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "regularized value of Σ cos 2nπx",
            lhs: |p| {
                limit(
                    p.x(),
                    Trig::Cosine,
                    Weight::Unit,
                    Parity::AllN,
                    Scale::NPower,
                )
            },
            rhs: |_| Ok(-0.5),
        },
        IdentityCase {
            id: "PROP4.3.RE",
            title: "Re lim Σ e^(2πinx)·n^(s−1) = Re e^(2πix)/(1 − e^(2πix))",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| complex_limit(p.x()).map(|c| c.0),
            rhs: |p| Ok(geometric(p.x()).0),
        },
        IdentityCase {
            id: "PROP4.3.IM",
            title: "Im lim Σ e^(2πinx)·n^(s−1) = Im e^(2πix)/(1 − e^(2πix))",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| complex_limit(p.x()).map(|c| c.1),
            rhs: |p| Ok(geometric(p.x()).1),
        },
        IdentityCase {
            id: "EQ4.8",
            title: "γ₁(1−x) − γ₁(x) = 2π lim Σ ln n·sin(2nπx)·n^(s−1) + π[γ + ln 2π]cot(πx)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "left side from the γ₁ series at x and 1−x separately",
            lhs: gamma1_reflected,
            rhs: |p| {
                let l = limit(p.x(), Trig::Sine, Weight::LogN, Parity::AllN, Scale::NPower)?;
                Ok(2.0 * PI * l + PI * (EULER_GAMMA + LN_2PI) * cot_pi(p.x()))
            },
        },
        IdentityCase {
            id: "EQ4.10.1",
            title: "γ₁(1−x) − γ₁(x) = 2π lim Σ [γ + ln 2πn]·sin(2nπx)·n^(s−1)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "single pass with the combined weight",
            lhs: gamma1_reflected,
            rhs: |p| {
                let w = Weight::GammaPlusLog2PiN;
                Ok(2.0 * PI * limit(p.x(), Trig::Sine, w, Parity::AllN, Scale::NPower)?)
            },
        },
        IdentityCase {
            id: "EQ4.12",
            title: "Σ ln n·cos(2nπu)/n = ½[ζ''(0,u) + ζ''(0,1−u)] + [γ + ln 2π]ln(2 sin πu)",
            domain: Domain::UGrid,
            tol: 1e-6,
            notes: "the coefficient of the ζ'' pair is +½; the form with −½ fails (at u = ½ the \
                    sum is γln2 − ½ln²2 > 0)",
            lhs: |p| deninger_cos_log_sum(p.u()).map(|r| r.value),
            rhs: |p| {
                let log_sine = (2.0 * (PI * p.u()).sin()).ln();
                Ok(half_zeta2_pair(p.u())? + (EULER_GAMMA + LN_2PI) * log_sine)
            },
        },
        IdentityCase {
            id: "EQ4.12.1",
            title: "Σ [γ + ln 2πn]·cos(2nπu)/n = ½[ζ''(0,u) + ζ''(0,1−u)]",
            domain: Domain::UGrid,
            tol: 1e-6,
            notes: "coefficient +½ as for the plain log sum",
            lhs: |p| {
                series(
                    p.u(),
                    Trig::Cosine,
                    Weight::GammaPlusLog2PiN,
                    0.0,
                    Scale::NPower,
                )
            },
            rhs: |p| half_zeta2_pair(p.u()),
        },
        IdentityCase {
            id: "EQ4.13",
            title: "∫₀¹ ζ''(0,u)du = 0",
            domain: Domain::Scalar,
            tol: 1e-6,
            notes: "graded Gauss–Legendre panels with ln²u endpoint tails",
            lhs: |_| super::quadrature_zeta2_integral().map(|r| r.value),
            rhs: zero,
        },
        IdentityCase {
            id: "EQ4.18",
            title: "2 lim Σ ln n·cos(2nπx)·(2πn)^(s−1) = ψ(x) + (π/2)cot(πx) + γ + ln 2π",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| {
                let l = limit(
                    p.x(),
                    Trig::Cosine,
                    Weight::LogN,
                    Parity::AllN,
                    Scale::TwoPiNPower,
                )?;
                Ok(2.0 * l)
            },
            rhs: |p| Ok(digamma(p.x())? + 0.5 * PI * cot_pi(p.x()) + EULER_GAMMA + LN_2PI),
        },
        IdentityCase {
            id: "EQ4.19",
            title: "ψ(x) = 2 lim Σ ln(2πn)·cos(2nπx)·(2πn)^(s−1) − (π/2)cot(πx) − γ",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "the variant Σ{[γ + ln 2πn]cos 2nπx + (π/2)sin 2nπx} = 0 is not an identity \
                    and is not checked",
            lhs: |p| digamma(p.x()),
            rhs: |p| psi_by_limit(p.x()),
        },
        IdentityCase {
            id: "EQ4.20",
            title: "ψ(x) + ψ(1−x) = −2γ + 4 lim Σ ln(2πn)·cos(2nπx)·(2πn)^(s−1)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| Ok(digamma(p.x())? + digamma(1.0 - p.x())?),
            rhs: |p| {
                let l = limit(
                    p.x(),
                    Trig::Cosine,
                    Weight::Log2PiN,
                    Parity::AllN,
                    Scale::TwoPiNPower,
                )?;
                Ok(-2.0 * EULER_GAMMA + 4.0 * l)
            },
        },
        IdentityCase {
            id: "PSI-REFLECT",
            title: "ψ(1−x) − ψ(x) = π cot(πx) from two separate limit evaluations",
            domain: Domain::XGrid,
            tol: 1e-7,
            notes: "",
            lhs: |p| Ok(psi_by_limit(1.0 - p.x())? - psi_by_limit(p.x())?),
            rhs: |p| Ok(PI * cot_pi(p.x())),
        },
        IdentityCase {
            id: "KUMMER",
            title: "(2/π)Σ ln(2πn)·sin(2nπx)/n = ln Γ(x) − ln Γ(1−x) + 2γ(x − ½)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "Kummer's Fourier series for ln Γ",
            lhs: |p| kummer_sine_series(p.x()).map(|r| r.value),
            rhs: |p| {
                let x = p.x();
                Ok(log_gamma(x)? - log_gamma(1.0 - x)? + 2.0 * EULER_GAMMA * (x - 0.5))
            },
        },
        IdentityCase {
            id: "LOGSINE",
            title: "Σ ln n·sin(2nπu)/(πn) = ln Γ(u) − ln Γ(½) + ½ln sin(πu) + (u − ½)[γ + ln 2π]",
            domain: Domain::UGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| log_sine_fourier(p.u()).map(|r| r.value),
            rhs: |p| {
                let u = p.u();
                Ok(log_gamma(u)? - 0.5 * PI.ln()
                    + 0.5 * (PI * u).sin().ln()
                    + (u - 0.5) * (EULER_GAMMA + LN_2PI))
            },
        },
        IdentityCase {
            id: "EQ4.21",
            title: "lim Σ (−1)^(n+1) sin(nπx)·n^(s−1) = ½tan(πx/2)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| {
                limit(
                    p.x(),
                    Trig::Sine,
                    Weight::Unit,
                    Parity::Alternating,
                    Scale::NPower,
                )
            },
            rhs: |p| Ok(0.5 * (0.5 * PI * p.x()).tan()),
        },
        IdentityCase {
            id: "EQ4.22",
            title: "lim Σ (−1)^(n+1) cos(nπx)·n^(s−1) = ½",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "",
            lhs: |p| {
                limit(
                    p.x(),
                    Trig::Cosine,
                    Weight::Unit,
                    Parity::Alternating,
                    Scale::NPower,
                )
            },
            rhs: |_| Ok(0.5),
        },
        IdentityCase {
            id: "EQ4.23",
            title: "lim Σ sin((2n+1)πx)·(2n+1)^(s−1) = 1/(2 sin πx)",
            domain: Domain::XGrid,
            tol: 1e-6,
            notes: "half of ½cot(πx/2) + ½tan(πx/2); the value 1/sin πx is twice too large",
            lhs: |p| {
                limit(
                    p.x(),
                    Trig::Sine,
                    Weight::Unit,
                    Parity::OddOnly,
                    Scale::NPower,
                )
            },
            rhs: |p| Ok(0.5 / (PI * p.x()).sin()),
        },
        IdentityCase {
            id: "ALT-LOG",
            title: "lim Σ (−1)ⁿ ln n·(2πn)^(s−1) = ½ln(π/2)",
            domain: Domain::Scalar,
            tol: 1e-7,
            notes: "regularized Σ(−1)ⁿ ln n, equal to η'(0)",
            lhs: |_| alternating_log_limit().map(|r| r.value),
            rhs: |_| Ok(0.5 * (0.5 * PI).ln()),
        },
    ]
}

fn complex_limit(x: f64) -> Result<(f64, f64)> {
    let path = ExtrapolationPath::toward(1.0);
    let (re, im) = regularized_limit_complex(x, Weight::Unit, Parity::AllN, Scale::NPower, &path)?;
    Ok((re.value, im.value))
}

/// e^(2πix)/(1 − e^(2πix)) as (re, im).
fn geometric(x: f64) -> (f64, f64) {
    let (s, c) = (2.0 * PI * x).sin_cos();
    let (dr, di) = (1.0 - c, -s);
    let d = dr * dr + di * di;
    ((c * dr + s * di) / d, (s * dr - c * di) / d)
}
