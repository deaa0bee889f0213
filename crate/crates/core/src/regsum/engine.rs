//! Summation of Σ_{n≥n₀} c(n)·e^(2πi·φ(n)) for slowly varying real c and a
//! phase advancing by a fixed step τ ∉ ℤ per index, i.e. a power series in
//! z = e^(2πiτ) on the unit circle.
//!
//! A compensated direct sum covers n < n₀ + D. The tail is closed by the
//! Euler transform at the cut M = n₀ + D:
//!
//! Σ_{n≥M} c(n)zⁿ = z^M/(1−z) · Σ_k (Δᵏc)(M)·qᵏ,   q = z/(1−z),
//!
//! where |q| = 1/(2|sin πτ|) and Δᵏc(M) ~ k!·M^(−k)·c(M). D grows with |q|
//! so that only a handful of differences are needed, which keeps the
//! cancellation in Δᵏ (about (2|q|)ᵏ ulps) small.

use num_complex::Complex64;

use crate::sum::ComplexKahanSum;

const MIN_DIRECT: usize = 64;
const DIRECT_PER_Q: f64 = 2000.0;
const MAX_DIRECT: usize = 4_000_000;
pub(crate) const MAX_TRANSFORM_STEPS: usize = 40;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Oscillatory {
    pub value: Complex64,
    pub err_estimate: f64,
    pub terms: usize,
}

/// e^(2πit), exact at multiples of a quarter turn.
pub(crate) fn cis_turns(t: f64) -> Complex64 {
    let r = t - t.round();
    let quarter = (4.0 * r).round();
    let f = r - 0.25 * quarter;
    let (s, c) = (2.0 * std::f64::consts::PI * f).sin_cos();
    match quarter as i64 {
        0 => Complex64::new(c, s),
        1 => Complex64::new(-s, c),
        -1 => Complex64::new(s, -c),
        _ => Complex64::new(-c, -s),
    }
}

/// frac(n·x) without the n·ε phase drift of a rounded product; the rounding
/// error of n·x is recovered exactly by a fused multiply-add.
pub(crate) fn frac_mul(n: u64, x: f64) -> f64 {
    let nf = n as f64;
    let p = nf * x;
    let e = nf.mul_add(x, -p);
    p.fract() + e
}

/// 1/(1 − e^(2πiτ)) = ½ + (i/2)·cot(πτ).
pub(crate) fn geometric_factor(step: f64) -> Complex64 {
    let half = cis_turns(0.5 * step);
    Complex64::new(0.5, 0.5 * half.re / half.im)
}

/// Σ_{n≥first} coeff(n)·e^(2πi·turns(n)), where turns(n+1) − turns(n) ≡ step.
pub(crate) fn oscillatory_sum<C, P>(coeff: C, turns: P, step: f64, first: u64) -> Oscillatory
where
    C: Fn(u64) -> f64,
    P: Fn(u64) -> f64,
{
    let inv_one_minus_z = geometric_factor(step);
    let q = inv_one_minus_z - 1.0;
    let q_abs = q.norm();
    let direct = ((DIRECT_PER_Q * q_abs).ceil() as usize).clamp(MIN_DIRECT, MAX_DIRECT);

    let mut acc = ComplexKahanSum::new();
    for n in first..first + direct as u64 {
        acc.add(cis_turns(turns(n)) * coeff(n));
    }

    let cut = first + direct as u64;
    let prefactor = cis_turns(turns(cut)) * inv_one_minus_z;
    let mut diffs: Vec<f64> = (0..=MAX_TRANSFORM_STEPS as u64)
        .map(|j| coeff(cut + j))
        .collect();
    let c_cut = diffs[0].abs();
    let mut tail = Complex64::new(0.0, 0.0);
    let mut q_pow = Complex64::new(1.0, 0.0);
    let mut previous = f64::INFINITY;
    let mut last = 0.0;
    let mut amplification = 0.0;
    let mut steps = 0;
    for k in 0..MAX_TRANSFORM_STEPS {
        let term = prefactor * q_pow * diffs[0];
        let size = term.norm();
        if k >= 2 && size > previous {
            break;
        }
        tail += term;
        last = size;
        previous = size;
        steps = k + 1;
        amplification += (2.0 * q_abs).powi(k as i32);
        if size <= 1e-17 * (acc.value() + tail).norm().max(c_cut) {
            break;
        }
        for i in 0..diffs.len() - 1 - k {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        q_pow *= q;
    }

    let roundoff =
        4.0 * f64::EPSILON * (acc.abs_total() + prefactor.norm() * c_cut * amplification);
    Oscillatory {
        value: acc.value() + tail,
        err_estimate: last + roundoff,
        terms: direct + steps,
    }
}
