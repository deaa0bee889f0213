//! Hurwitz zeta ζ(s,x) = Σ_{n≥0} (n+x)^(−s) on real s ≠ 1 and its first two
//! derivatives in s.
//!
//! The production route is Euler–Maclaurin with every term differentiated
//! analytically in s. Hasse's globally convergent double series is kept as
//! an independent route for cross-checks.

use crate::extrapolate::{halving_steps, neville_at_zero};
use crate::special::bernoulli_over_factorial;
use crate::sum::KahanSum;
use crate::{Error, EvalResult, Method, Result};

/// Queries closer than this to s = 1 are rejected.
pub const POLE_RADIUS: f64 = 1e-8;

/// Euler–Maclaurin starts its tail once n + x reaches this base. Negative s
/// uses a lower base: the direct sum grows like a^(1−s) there and its
/// roundoff dominates long before the tail truncation does.
const EM_BASE: f64 = 10.0;
const EM_BASE_NEGATIVE_S: f64 = 6.0;

/// Bernoulli pairs B₂ … B₂₄ in the tail correction.
const EM_PAIRS: usize = 12;

/// Hasse's series is applied at x + M with x + M ≥ this base, and the
/// first M terms of the defining sum are added back.
const HASSE_BASE: f64 = 25.0;

pub const HASSE_DEFAULT_MAX_TERMS: usize = 200;

const HASSE_TERM_FLOOR: f64 = 1e-14;
const HASSE_FAILURE_THRESHOLD: f64 = 1e-8;

/// One evaluation request: ∂ᵐ/∂sᵐ ζ(s, x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzQuery {
    pub s: f64,
    pub x: f64,
    /// Derivative order in s, one of 0, 1, 2.
    pub order: u8,
}

impl HurwitzQuery {
    pub fn new(s: f64, x: f64, order: u8) -> Self {
        HurwitzQuery { s, x, order }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x > 0.0 && self.x.is_finite()) {
            return Err(Error::domain("x", self.x, "x > 0"));
        }
        if !self.s.is_finite() {
            return Err(Error::domain("s", self.s, "finite real"));
        }
        if self.order > 2 {
            return Err(Error::domain("order", self.order as f64, "0, 1 or 2"));
        }
        if (self.s - 1.0).abs() < POLE_RADIUS {
            return Err(Error::Pole {
                s: self.s,
                radius: POLE_RADIUS,
            });
        }
        Ok(())
    }
}

/// (−l)^m for m ∈ {0, 1, 2}.
#[inline]
fn neg_log_power(l: f64, m: u8) -> f64 {
    match m {
        0 => 1.0,
        1 => -l,
        _ => l * l,
    }
}

/// ∂ᵐ/∂sᵐ ζ(s, x) by Euler–Maclaurin.
///
/// ζ(s,x) = Σ_{n<N} (n+x)^(−s) + a^(1−s)/(s−1) + ½a^(−s)
///          + Σ_k B_{2k}/(2k)!·s(s+1)…(s+2k−2)·a^(−s−2k+1),   a = N + x.
pub fn hurwitz_zeta(q: HurwitzQuery) -> Result<EvalResult> {
    q.validate()?;
    let HurwitzQuery { s, x, order: m } = q;

    let base = if s < 0.0 { EM_BASE_NEGATIVE_S } else { EM_BASE };
    let n_direct = if x >= base {
        0
    } else {
        (base - x).ceil() as usize
    };
    let mut acc = KahanSum::new();
    for n in 0..n_direct {
        let t = n as f64 + x;
        acc.add(neg_log_power(t.ln(), m) * t.powf(-s));
    }

    let a = n_direct as f64 + x;
    let l = a.ln();
    let t = s - 1.0;
    let e = a.powf(-t);
    let pole = match m {
        0 => e / t,
        1 => -e * (l / t + 1.0 / (t * t)),
        _ => e * (l * l / t + 2.0 * l / (t * t) + 2.0 / (t * t * t)),
    };
    acc.add(pole);
    let a_pow_s = e / a;
    acc.add(0.5 * neg_log_power(l, m) * a_pow_s);

    // r, dr, ddr: s(s+1)…(s+2k−2) and its first two s-derivatives.
    let coeffs = bernoulli_over_factorial();
    let inv_a2 = 1.0 / (a * a);
    let (mut r, mut dr, mut ddr) = (s, 1.0, 0.0);
    let mut pow = a_pow_s / a; // a^(−s−2k+1) at k = 1
    let mut last = 0.0;
    for (k, &c) in coeffs.iter().enumerate().take(EM_PAIRS + 1).skip(1) {
        let deriv = match m {
            0 => r,
            1 => dr - l * r,
            _ => ddr - 2.0 * l * dr + l * l * r,
        };
        last = c * deriv * pow;
        acc.add(last);

        for j in [2 * k - 1, 2 * k] {
            let f = s + j as f64;
            ddr = ddr * f + 2.0 * dr;
            dr = dr * f + r;
            r *= f;
        }
        pow *= inv_a2;
    }

    let roundoff = 4.0 * f64::EPSILON * acc.abs_total();
    Ok(EvalResult::new(
        acc.value(),
        last.abs() + roundoff,
        n_direct + EM_PAIRS + 2,
        Method::EulerMaclaurin,
    ))
}

/// ζ(s, x) from Hasse's series
///
/// ζ(s,x) = 1/(s−1) Σ_{n≥0} 1/(n+1) Σ_{k=0}^{n} C(n,k)(−1)^k (k+x)^(1−s).
///
/// The outer terms decay only like n^(−1−x), so the series is applied at
/// x + M (with x + M ≥ 25) and the first M terms of the defining sum are
/// added back; the outer terms then fall off like 1/C(n+x+M, n).
pub fn hurwitz_hasse(s: f64, x: f64, max_terms: usize) -> Result<EvalResult> {
    HurwitzQuery::new(s, x, 0).validate()?;
    let shift = if x >= HASSE_BASE {
        0
    } else {
        (HASSE_BASE - x).ceil() as usize
    };
    let a = x + shift as f64;
    let sigma = 1.0 - s;
    let values: Vec<f64> = (0..max_terms.max(1))
        .map(|k| (k as f64 + a).powf(sigma))
        .collect();

    let mut outer = KahanSum::new();
    let mut noise_total = 0.0;
    let mut last = f64::INFINITY;
    let mut quiet = 0;
    let mut used = 0;
    for n in 0..values.len() {
        // Even- and odd-k contributions are accumulated apart and cancelled once.
        let mut plus = KahanSum::new();
        let mut minus = KahanSum::new();
        let mut binom = 1.0;
        for (k, v) in values[..=n].iter().enumerate() {
            let term = binom * v;
            if k % 2 == 0 {
                plus.add(term);
            } else {
                minus.add(term);
            }
            binom = binom * (n - k) as f64 / (k + 1) as f64;
        }
        let scale = 1.0 / (n + 1) as f64;
        let term = (plus.value() - minus.value()) * scale;
        let noise = 4.0 * f64::EPSILON * (plus.abs_total() + minus.abs_total()) * scale;
        outer.add(term);
        noise_total += noise;
        last = term.abs();
        used = n + 1;
        if n >= 3 && (last < HASSE_TERM_FLOOR || last < noise) {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
    }

    let mut head = KahanSum::new();
    head.extend((0..shift).map(|j| (j as f64 + x).powf(-s)));
    let inv = 1.0 / (s - 1.0);
    let value = head.value() + outer.value() * inv;
    let err = (last + noise_total) * inv.abs() + 4.0 * f64::EPSILON * head.abs_total();
    if err > HASSE_FAILURE_THRESHOLD {
        return Err(Error::NonConvergence {
            err_estimate: err,
            terms: used,
        });
    }
    Ok(EvalResult::new(value, err, used + shift, Method::Hasse))
}

/// (s−1)·ζ(s, x) at s = 1 + h.
pub fn pole_residue_check(x: f64, h: f64) -> Result<f64> {
    if !(h > 0.0 && h <= 0.25) {
        return Err(Error::domain("h", h, "0 < h <= 1/4"));
    }
    Ok(h * hurwitz_zeta(HurwitzQuery::new(1.0 + h, x, 0))?.value)
}

/// lim_{s→1} (s−1)ζ(s,x), extrapolated from s = 1 + h₀·2^(−k), k = 0 … levels.
pub fn pole_residue_limit(x: f64, h0: f64, levels: usize) -> Result<EvalResult> {
    let steps = halving_steps(h0, levels);
    let values = steps
        .iter()
        .map(|&h| pole_residue_check(x, h))
        .collect::<Result<Vec<_>>>()?;
    let e = neville_at_zero(&steps, &values)?;
    Ok(EvalResult::new(
        e.value,
        e.err_estimate,
        steps.len(),
        Method::Extrapolation,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::log_gamma;
    use std::f64::consts::PI;

    fn zeta(s: f64, x: f64, m: u8) -> f64 {
        hurwitz_zeta(HurwitzQuery::new(s, x, m)).unwrap().value
    }

    const S_GRID: [f64; 6] = [-2.0, -1.0, -0.5, 0.5, 2.0, 3.0];
    const X_GRID: [f64; 5] = [0.1, 0.25, 0.5, 1.0, 2.0];

    #[test]
    fn classical_values() {
        assert!((zeta(2.0, 1.0, 0) - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta(0.0, 0.3, 0) - 0.2).abs() < 1e-14);
        assert!((zeta(-1.0, 1.0, 0) + 1.0 / 12.0).abs() < 1e-14);
        assert!((zeta(0.0, 1.0, 1) + 0.5 * (2.0 * PI).ln()).abs() < 1e-14);
        // ζ(4) = π⁴/90
        assert!((zeta(4.0, 1.0, 0) - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn error_estimates_are_small_on_the_working_box() {
        for i in 0..=20 {
            let s = -5.0 + 0.5 * i as f64;
            if s == 1.0 {
                continue;
            }
            for &x in &[0.01, 0.3, 1.0, 4.5, 10.0] {
                for m in 0..=2 {
                    let r = hurwitz_zeta(HurwitzQuery::new(s, x, m)).unwrap();
                    let rel = r.err_estimate / r.value.abs().max(1.0);
                    assert!(rel <= 1e-10, "s={s} x={x} m={m}: {:e}", r.err_estimate);
                }
            }
        }
    }

    #[test]
    fn hasse_spot_values() {
        let r = hurwitz_hasse(2.0, 1.0, HASSE_DEFAULT_MAX_TERMS).unwrap();
        assert!((r.value - PI * PI / 6.0).abs() < 1e-9);
        assert_eq!(r.method, Method::Hasse);
        let r = hurwitz_hasse(-1.0, 1.0, HASSE_DEFAULT_MAX_TERMS).unwrap();
        assert!((r.value + 1.0 / 12.0).abs() < 1e-12);
        let h = hurwitz_hasse(0.5, 0.25, HASSE_DEFAULT_MAX_TERMS).unwrap();
        assert!((h.value - zeta(0.5, 0.25, 0)).abs() < 1e-9);
    }

    #[test]
    fn hasse_reports_non_convergence_when_starved() {
        let r = hurwitz_hasse(0.5, 0.1, 3);
        assert!(matches!(r, Err(Error::NonConvergence { .. })), "{r:?}");
    }

    #[test]
    fn euler_maclaurin_matches_hasse_on_grid() {
        for &s in &S_GRID {
            for &x in &X_GRID {
                let em = zeta(s, x, 0);
                let h = hurwitz_hasse(s, x, HASSE_DEFAULT_MAX_TERMS).unwrap().value;
                assert!((em - h).abs() <= 1e-9, "s={s} x={x}: {em} vs {h}");
            }
        }
    }

    #[test]
    fn shift_identity() {
        for &s in &S_GRID {
            for &x in &X_GRID {
                let r = zeta(s, 1.0 + x, 0) - zeta(s, x, 0) + x.powf(-s);
                assert!(r.abs() <= 1e-10, "s={s} x={x}: {r:e}");
            }
        }
    }

    #[test]
    fn half_argument_identity_with_derivatives() {
        let ln2 = 2f64.ln();
        for &s in &S_GRID {
            let p = 2f64.powf(s);
            let (z0, z1, z2) = (zeta(s, 1.0, 0), zeta(s, 1.0, 1), zeta(s, 1.0, 2));
            let rhs = [
                (p - 1.0) * z0,
                p * ln2 * z0 + (p - 1.0) * z1,
                p * ln2 * ln2 * z0 + 2.0 * p * ln2 * z1 + (p - 1.0) * z2,
            ];
            for m in 0..=2u8 {
                let r = zeta(s, 0.5, m) - rhs[m as usize];
                assert!(r.abs() <= 1e-10, "s={s} m={m}: {r:e}");
            }
        }
    }

    #[test]
    fn s_derivatives_match_central_differences() {
        // Fourth-order stencil: the three-point one carries an h²/6·∂⁴ζ
        // truncation term of ~1e−6 at x = 0.1.
        let h = 1e-4;
        for &s in &S_GRID {
            for &x in &X_GRID {
                for m in 0..2u8 {
                    let f = |d: f64| zeta(s + d * h, x, m);
                    let fd = (8.0 * (f(1.0) - f(-1.0)) - (f(2.0) - f(-2.0))) / (12.0 * h);
                    let exact = zeta(s, x, m + 1);
                    assert!(
                        (fd - exact).abs() <= 1e-6 * exact.abs().max(1.0),
                        "s={s} x={x} m={m}: {fd} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn lerch_formula() {
        for i in 1..=9 {
            let x = i as f64 / 10.0;
            let r = zeta(0.0, x, 1) - log_gamma(x).unwrap() + 0.5 * (2.0 * PI).ln();
            assert!(r.abs() <= 1e-9, "x={x}: {r:e}");
        }
    }

    #[test]
    fn residue_is_one() {
        for &x in &[0.5, 1.0, 3.7] {
            let r = pole_residue_limit(x, 0.25, 8).unwrap();
            assert!((r.value - 1.0).abs() <= 1e-9, "x={x}: {}", r.value);
        }
        assert!(pole_residue_check(1.0, 0.0).is_err());
        assert!(pole_residue_check(1.0, 0.5).is_err());
    }

    #[test]
    fn rejects_pole_and_bad_domain() {
        let e = hurwitz_zeta(HurwitzQuery::new(1.0 + 1e-9, 1.0, 0));
        assert!(matches!(e, Err(Error::Pole { .. })));
        assert!(hurwitz_zeta(HurwitzQuery::new(1.0 + 2e-8, 1.0, 0)).is_ok());
        let e = hurwitz_zeta(HurwitzQuery::new(2.0, 0.0, 0));
        assert!(matches!(e, Err(Error::Domain { .. })));
        assert!(hurwitz_zeta(HurwitzQuery::new(2.0, 1.0, 3)).is_err());
        assert!(hurwitz_hasse(1.0, 1.0, 10).is_err());
    }
}
