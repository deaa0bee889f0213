//! Gauss–Legendre quadrature.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Nodes and weights of the n-point rule on [−1, 1], from Newton iteration
/// on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                dp = legendre_with_derivative(n, z).1;
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, z);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    (p1, n as f64 * (z * p1 - p0) / (z * z - 1.0))
}

fn rule20() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(20))
}

/// 20-point Gauss–Legendre over [a, b].
pub fn integrate<F, E>(f: &F, a: f64, b: f64) -> Result<f64, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let (nodes, weights) = rule20();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (z, w) in nodes.iter().zip(weights) {
        acc += w * f(mid + half * z)?;
    }
    Ok(acc * half)
}

/// Composite 20-point rule over consecutive panels [edges[i], edges[i+1]].
pub fn integrate_panels<F, E>(f: &F, edges: &[f64]) -> Result<f64, E>
where
    F: Fn(f64) -> Result<f64, E>,
{
    let mut acc = 0.0;
    for w in edges.windows(2) {
        acc += integrate(f, w[0], w[1])?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Result<f64, ()> {
        move |x| Ok(f(x))
    }

    #[test]
    fn weights_sum_to_two_and_nodes_are_symmetric() {
        for n in [1, 2, 5, 20, 33] {
            let (x, w) = gauss_legendre(n);
            let total: f64 = w.iter().sum();
            assert!((total - 2.0).abs() < 1e-14, "n = {n}");
            for i in 0..n {
                assert!((x[i] + x[n - 1 - i]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn exact_on_high_degree_polynomials() {
        let v = integrate(&ok(|x| x.powi(39) + x.powi(38)), -1.0, 1.0).unwrap();
        assert!((v - 2.0 / 39.0).abs() < 1e-14);
    }

    #[test]
    fn smooth_integrals() {
        let v = integrate(&ok(f64::exp), 0.0, 1.0).unwrap();
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-15);
        let edges: Vec<f64> = (0..=4).map(|i| i as f64 * PI / 4.0).collect();
        let v = integrate_panels(&ok(f64::sin), &edges).unwrap();
        assert!((v - 2.0).abs() < 1e-14);
    }
}
