//! Polynomial (Neville) extrapolation of a sampled function to the origin.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Extrapolated {
    pub value: f64,
    /// |D_K − D_{K−1}| where D_k interpolates the first k+1 samples.
    pub err_estimate: f64,
    /// D_k − D_{k−1} for k = 1 … K.
    pub corrections: Vec<f64>,
}

/// Evaluates at t = 0 the interpolating polynomial through (t_i, y_i).
///
/// Samples should be ordered with t shrinking toward zero; the successive
/// diagonal estimates then converge and their differences give the error
/// estimate.
pub fn neville_at_zero(t: &[f64], y: &[f64]) -> Result<Extrapolated> {
    if t.len() != y.len() || t.is_empty() {
        return Err(Error::InvalidPath(
            "node and value counts must match and be non-zero",
        ));
    }
    let n = t.len();
    // p[i] holds P_{i..i+k}(0) after pass k.
    let mut p = y.to_vec();
    let mut diag = Vec::with_capacity(n);
    diag.push(p[0]);
    for k in 1..n {
        for i in 0..n - k {
            let (ti, tk) = (t[i], t[i + k]);
            if ti == tk {
                return Err(Error::InvalidPath("extrapolation nodes must be distinct"));
            }
            p[i] = (tk * p[i] - ti * p[i + 1]) / (tk - ti);
        }
        diag.push(p[0]);
    }
    let corrections: Vec<f64> = diag.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(Extrapolated {
        value: diag[n - 1],
        err_estimate: corrections.last().map_or(0.0, |c| c.abs()),
        corrections,
    })
}

/// Steps h_k = h₀·2^(−k), k = 0 … levels.
pub fn halving_steps(h0: f64, levels: usize) -> Vec<f64> {
    (0..=levels).map(|k| h0 * 0.5f64.powi(k as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_polynomials() {
        let t = halving_steps(0.5, 4);
        let y: Vec<f64> = t.iter().map(|&h| 3.0 - 2.0 * h + h * h * h).collect();
        let e = neville_at_zero(&t, &y).unwrap();
        assert!((e.value - 3.0).abs() < 1e-14);
        assert!(e.err_estimate < 1e-13);
    }

    #[test]
    fn converges_for_analytic_functions() {
        let t = halving_steps(0.25, 8);
        let y: Vec<f64> = t.iter().map(|&h| (1.0 + h).ln() / h).collect();
        let e = neville_at_zero(&t, &y).unwrap();
        assert!((e.value - 1.0).abs() < 1e-13, "{}", e.value);
        let c: Vec<f64> = e.corrections.iter().map(|c| c.abs()).collect();
        assert!(c[3] < c[1] && c[5] < c[3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(neville_at_zero(&[], &[]).is_err());
        assert!(neville_at_zero(&[0.1, 0.1], &[1.0, 2.0]).is_err());
        assert!(neville_at_zero(&[0.1], &[1.0, 2.0]).is_err());
    }
}
