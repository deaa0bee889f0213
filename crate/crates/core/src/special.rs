//! Digamma, log-gamma and Bernoulli numbers on the positive real axis.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

/// Highest Bernoulli index kept in the table (B₀ … B₃₂).
pub const BERNOULLI_MAX: usize = 32;

/// Below this the argument is shifted up by the recurrence before the
/// asymptotic series is applied.
const ASYMPTOTIC_THRESHOLD: f64 = 8.0;

/// Number of Bernoulli pairs (B₂ … B₁₄) in the digamma/log-gamma asymptotics.
const ASYMPTOTIC_TERMS: usize = 7;

/// Bernoulli numbers B₀ … B_max, computed exactly and rounded to binary64.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    exact: Vec<BigRational>,
    values: Vec<f64>,
}

impl BernoulliTable {
    /// Builds B₀ … B_max from Σ_{j=0}^{m} C(m+1, j)·B_j = 0 (m ≥ 1) in exact
    /// rational arithmetic.
    pub fn new(max: usize) -> Self {
        let mut exact: Vec<BigRational> = Vec::with_capacity(max + 1);
        exact.push(BigRational::from_integer(1.into()));
        for m in 1..=max {
            // binom = C(m+1, j), updated in place as j advances.
            let mut binom = BigInt::from(1);
            let mut acc = BigRational::zero();
            for (j, b) in exact.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            // binom is now C(m+1, m) = m + 1.
            exact.push(-acc / BigRational::from_integer(binom));
        }
        let values = exact
            .iter()
            .map(|r| r.to_f64().expect("Bernoulli numbers are finite"))
            .collect();
        BernoulliTable { exact, values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Result<f64> {
        self.values.get(k).copied().ok_or(Error::Index {
            index: k,
            max: self.max_index(),
        })
    }

    /// The exact rational value of B_k.
    pub fn exact(&self, k: usize) -> Option<&BigRational> {
        self.exact.get(k)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// The process-wide table, built on first use.
pub fn bernoulli_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(BERNOULLI_MAX))
}

/// B_k for 0 ≤ k ≤ 32, with the convention B₁ = −1/2.
pub fn bernoulli(k: usize) -> Result<f64> {
    bernoulli_table().get(k)
}

/// B_{2k}/(2k)! for k = 0 … 16, the coefficients that appear in every
/// Euler–Maclaurin tail in this crate.
pub(crate) fn bernoulli_over_factorial() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let table = bernoulli_table();
        let mut fact = BigInt::from(1);
        let mut out = Vec::with_capacity(BERNOULLI_MAX / 2 + 1);
        for k in 0..=BERNOULLI_MAX / 2 {
            if k > 0 {
                fact *= BigInt::from(2 * k - 1) * BigInt::from(2 * k);
            }
            let q = table.exact(2 * k).unwrap() / BigRational::from_integer(fact.clone());
            out.push(q.to_f64().unwrap());
        }
        out
    })
}

fn check_positive(what: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(what, x, "x > 0"))
    }
}

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("x", x)?;
    let b = bernoulli_table().values();
    let mut x = x;
    let mut shift = 0.0;
    while x < ASYMPTOTIC_THRESHOLD {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    for k in 1..=ASYMPTOTIC_TERMS {
        series += b[2 * k] / (2 * k) as f64 * pow;
        pow *= inv2;
    }
    Ok(x.ln() - 0.5 / x - series + shift)
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive("x", x)?;
    let b = bernoulli_table().values();
    let mut x = x;
    let mut prod = 1.0;
    while x < ASYMPTOTIC_THRESHOLD {
        prod *= x;
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = 0.0;
    for k in 1..=ASYMPTOTIC_TERMS {
        series += b[2 * k] / ((2 * k) * (2 * k - 1)) as f64 * pow;
        pow *= inv2;
    }
    let stirling = (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series;
    Ok(stirling - prod.ln())
}

/// Γ(x) for x > 0 (via [`log_gamma`]; overflows past x ≈ 171).
pub fn gamma(x: f64) -> Result<f64> {
    log_gamma(x).map(f64::exp)
}
