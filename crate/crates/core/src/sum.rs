//! Compensated (Neumaier) accumulators.

use num_complex::Complex64;

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
    /// Running Σ|term|, used for roundoff estimates.
    abs: f64,
}

impl KahanSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
        self.abs += term.abs();
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub(crate) fn abs_total(&self) -> f64 {
        self.abs
    }
}

impl Extend<f64> for KahanSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for t in iter {
            self.add(t);
        }
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct ComplexKahanSum {
    re: KahanSum,
    im: KahanSum,
}

impl ComplexKahanSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, term: Complex64) {
        self.re.add(term.re);
        self.im.add(term.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub(crate) fn abs_total(&self) -> f64 {
        self.re.abs_total() + self.im.abs_total()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_lost_by_naive_sum() {
        let mut acc = KahanSum::new();
        acc.extend([1.0, 1e100, 1.0, -1e100]);
        assert_eq!(acc.value(), 2.0);
    }

    #[test]
    fn harmonic_partial_sum_is_exact_to_an_ulp() {
        let mut acc = KahanSum::new();
        acc.extend((1..=10_000).rev().map(|n| 1.0 / n as f64));
        let mut fwd = KahanSum::new();
        fwd.extend((1..=10_000).map(|n| 1.0 / n as f64));
        assert!((acc.value() - fwd.value()).abs() <= 2.0 * f64::EPSILON * acc.value());
    }
}
