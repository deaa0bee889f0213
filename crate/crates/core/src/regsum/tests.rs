use super::*;
use crate::hurwitz::{hurwitz_zeta, HurwitzQuery};
use approx::assert_abs_diff_eq;
use proptest::prelude::*;

const CATALAN: f64 = 0.915_965_594_177_219;

fn limit(x: f64, trig: Trig, weight: Weight, parity: Parity, scale: Scale) -> f64 {
    regularized_limit(
        x,
        trig,
        weight,
        parity,
        scale,
        &ExtrapolationPath::toward(1.0),
    )
    .unwrap()
    .value
}

#[test]
fn catalan_from_the_sine_series() {
    // Σ sin(nπ/2)/n² = Catalan, through the s = −1 member at x = 1/4
    let r = trig_dirichlet_sum(&TrigSeriesSpec::simple(
        0.25,
        Trig::Sine,
        Weight::Unit,
        -1.0,
    ))
    .unwrap();
    assert_abs_diff_eq!(r.value, CATALAN, epsilon = 1e-12);

    // brute force: alternating odd terms, paired to keep the tail tiny
    let brute: f64 = (0..5_000_000u64)
        .map(|k| {
            let a = (4 * k + 1) as f64;
            let b = (4 * k + 3) as f64;
            1.0 / (a * a) - 1.0 / (b * b)
        })
        .rev()
        .sum();
    assert_abs_diff_eq!(brute, CATALAN, epsilon = 1e-13);
}

#[test]
fn sine_vanishes_at_half() {
    for s in [-1.0, 0.0, 0.5, 0.9] {
        let r =
            trig_dirichlet_sum(&TrigSeriesSpec::simple(0.5, Trig::Sine, Weight::Unit, s)).unwrap();
        assert_eq!(r.value, 0.0, "s = {s}");
    }
}

#[test]
fn cosine_at_half_gives_minus_pi_squared_over_twelve() {
    let r = trig_dirichlet_sum(&TrigSeriesSpec::simple(
        0.5,
        Trig::Cosine,
        Weight::Unit,
        -1.0,
    ))
    .unwrap();
    assert_abs_diff_eq!(r.value, -PI * PI / 12.0, epsilon = 1e-12);
}

#[test]
fn basic_limits() {
    let x = 0.3;
    assert_abs_diff_eq!(
        limit(x, Trig::Cosine, Weight::Unit, Parity::AllN, Scale::NPower),
        -0.5,
        epsilon = 1e-8
    );
    assert_abs_diff_eq!(
        limit(x, Trig::Sine, Weight::Unit, Parity::AllN, Scale::NPower),
        0.5 * cot_pi(x),
        epsilon = 1e-8
    );
    assert_abs_diff_eq!(
        limit(
            x,
            Trig::Cosine,
            Weight::Unit,
            Parity::Alternating,
            Scale::NPower
        ),
        0.5,
        epsilon = 1e-8
    );
    // odd sines at x = 1/3: 1/(2 sin(π/3)) = 1/√3, not 2/√3
    let odd = limit(
        1.0 / 3.0,
        Trig::Sine,
        Weight::Unit,
        Parity::OddOnly,
        Scale::NPower,
    );
    assert_abs_diff_eq!(odd, 1.0 / 3f64.sqrt(), epsilon = 1e-8);
    assert!((odd - 2.0 / 3f64.sqrt()).abs() > 0.5);
}

#[test]
fn every_closed_form_is_reached() {
    let cases = [
        (
            ClosedForm::SineUnit,
            Trig::Sine,
            Weight::Unit,
            Parity::AllN,
            Scale::NPower,
        ),
        (
            ClosedForm::SineLog,
            Trig::Sine,
            Weight::LogN,
            Parity::AllN,
            Scale::NPower,
        ),
        (
            ClosedForm::CosineUnit,
            Trig::Cosine,
            Weight::Unit,
            Parity::AllN,
            Scale::NPower,
        ),
        (
            ClosedForm::CosineLog,
            Trig::Cosine,
            Weight::LogN,
            Parity::AllN,
            Scale::TwoPiNPower,
        ),
        (
            ClosedForm::AlternatingSine,
            Trig::Sine,
            Weight::Unit,
            Parity::Alternating,
            Scale::NPower,
        ),
        (
            ClosedForm::AlternatingCosine,
            Trig::Cosine,
            Weight::Unit,
            Parity::Alternating,
            Scale::NPower,
        ),
        (
            ClosedForm::OddSine,
            Trig::Sine,
            Weight::Unit,
            Parity::OddOnly,
            Scale::NPower,
        ),
    ];
    for x in [0.1, 0.25, 0.4, 0.6, 0.85] {
        for (case, trig, weight, parity, scale) in cases {
            let got = limit(x, trig, weight, parity, scale);
            let want = closed_form(x, case).unwrap();
            assert!(
                (got - want).abs() <= 1e-7 * want.abs().max(1.0),
                "{case} at x = {x}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn scale_only_changes_the_limit_by_a_known_shift() {
    // (2π)^(s−1) → 1, so the unit-weight limits agree for both scales
    for x in [0.2, 0.7] {
        let a = limit(x, Trig::Sine, Weight::Unit, Parity::AllN, Scale::NPower);
        let b = limit(
            x,
            Trig::Sine,
            Weight::Unit,
            Parity::AllN,
            Scale::TwoPiNPower,
        );
        assert_abs_diff_eq!(a, b, epsilon = 2e-7);
    }
}

#[test]
fn alternating_splits_into_all_and_even_terms() {
    // Σ(−1)^(n+1) c(n) e^(iπnx) = Σ c(n) e^(iπnx) − 2 Σ c(2n) e^(2iπnx)
    let x = 0.3;
    let s = 0.4;
    let alt = trig_dirichlet_sum(&TrigSeriesSpec::new(
        x,
        Trig::Sine,
        Weight::Unit,
        Parity::Alternating,
        s,
        Scale::NPower,
    ))
    .unwrap()
    .value;
    let all = trig_dirichlet_sum(&TrigSeriesSpec::simple(
        x / 2.0,
        Trig::Sine,
        Weight::Unit,
        s,
    ))
    .unwrap()
    .value;
    let even = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Sine, Weight::Unit, s))
        .unwrap()
        .value;
    assert_abs_diff_eq!(alt, all - 2.0 * 2f64.powf(s - 1.0) * even, epsilon = 1e-8);
}

#[test]
fn complex_limit_matches_the_geometric_series() {
    for x in [0.15, 0.5, 0.8] {
        let (re, im) = regularized_limit_complex(
            x,
            Weight::Unit,
            Parity::AllN,
            Scale::NPower,
            &ExtrapolationPath::toward(1.0),
        )
        .unwrap();
        assert_abs_diff_eq!(
            re.value,
            closed_form(x, ClosedForm::ExponentialRe).unwrap(),
            epsilon = 1e-7
        );
        assert_abs_diff_eq!(
            im.value,
            closed_form(x, ClosedForm::ExponentialIm).unwrap(),
            epsilon = 1e-7
        );
    }
}

#[test]
fn sum_stays_finite_towards_the_boundary() {
    // (1 − s)·S(s, x) → 0 for the unit-weight sine series
    let x = 0.35;
    for s in [0.9, 0.99, 0.999] {
        let v = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Sine, Weight::Unit, s))
            .unwrap()
            .value;
        assert!(((1.0 - s) * v).abs() < 2.0 * (1.0 - s));
    }
}

#[test]
fn finite_s_sine_matches_hurwitz() {
    // Σ sin(2nπx) n^(s−1) = Γ(s)(2π)^(−s) sin(πs/2) [ζ(s, x) − ζ(s, 1−x)]
    for (s, x) in [(0.3, 0.2), (-0.5, 0.45), (0.7, 0.9)] {
        let series = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Sine, Weight::Unit, s))
            .unwrap()
            .value;
        let z = |a: f64| hurwitz_zeta(HurwitzQuery::new(s, a, 0)).unwrap().value;
        // Γ(s) = Γ(s + 1)/s keeps the argument positive
        let g = crate::special::gamma(s + 1.0).unwrap() / s;
        let want = g * (2.0 * PI).powf(-s) * (PI * s / 2.0).sin() * (z(x) - z(1.0 - x));
        assert_abs_diff_eq!(series, want, epsilon = 1e-8);

        let series = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Cosine, Weight::Unit, s))
            .unwrap()
            .value;
        let want = g * (2.0 * PI).powf(-s) * (PI * s / 2.0).cos() * (z(x) + z(1.0 - x));
        assert_abs_diff_eq!(series, want, epsilon = 1e-8);
    }
}

#[test]
fn constants() {
    assert_abs_diff_eq!(
        alternating_log_limit().unwrap().value,
        0.5 * (PI / 2.0).ln(),
        epsilon = 1e-7
    );
}

#[test]
fn convergent_values_at_half() {
    // Σ ln n (−1)ⁿ / n = γ ln 2 − ½ln²2
    let ln2 = 2f64.ln();
    let want = EULER_GAMMA * ln2 - 0.5 * ln2 * ln2;
    assert_abs_diff_eq!(
        deninger_cos_log_sum(0.5).unwrap().value,
        want,
        epsilon = 1e-10
    );
    assert_eq!(log_sine_fourier(0.5).unwrap().value, 0.0);
    assert_eq!(kummer_sine_series(0.5).unwrap().value, 0.0);
}

#[test]
fn rejected_inputs() {
    let bad_x = TrigSeriesSpec::simple(1.0, Trig::Sine, Weight::Unit, 0.0);
    assert!(matches!(
        trig_dirichlet_sum(&bad_x),
        Err(Error::Domain { .. })
    ));
    let bad_s = TrigSeriesSpec::simple(0.3, Trig::Sine, Weight::Unit, 1.0);
    assert!(matches!(
        trig_dirichlet_sum(&bad_s),
        Err(Error::ConvergenceRegion { .. })
    ));
    let p = ExtrapolationPath::toward(1.0);
    assert!(matches!(
        regularized_limit(
            0.005,
            Trig::Sine,
            Weight::Unit,
            Parity::AllN,
            Scale::NPower,
            &p
        ),
        Err(Error::Domain { .. })
    ));
    assert!(ExtrapolationPath::new(1.0, 0.5, 8).validate().is_err());
    assert!(ExtrapolationPath::new(1.0, 0.25, 4).validate().is_err());
    assert!(matches!(
        "EQ9.9".parse::<ClosedForm>(),
        Err(Error::UnknownCase(_))
    ));
    assert_eq!("eq4.8".parse::<ClosedForm>().unwrap(), ClosedForm::SineLog);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sine_is_odd_under_reflection(x in 0.02f64..0.98, s in -1.5f64..0.9) {
        let a = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Sine, Weight::LogN, s)).unwrap().value;
        let b = trig_dirichlet_sum(&TrigSeriesSpec::simple(1.0 - x, Trig::Sine, Weight::LogN, s)).unwrap().value;
        prop_assert!((a + b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn cosine_is_even_under_reflection(x in 0.02f64..0.98, s in -1.5f64..0.9) {
        let a = trig_dirichlet_sum(&TrigSeriesSpec::simple(x, Trig::Cosine, Weight::Unit, s)).unwrap().value;
        let b = trig_dirichlet_sum(&TrigSeriesSpec::simple(1.0 - x, Trig::Cosine, Weight::Unit, s)).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn unit_sine_limit_is_half_cotangent(x in 0.05f64..0.95) {
        let v = limit(x, Trig::Sine, Weight::Unit, Parity::AllN, Scale::NPower);
        let want = 0.5 * cot_pi(x);
        prop_assert!((v - want).abs() <= 1e-7 * want.abs().max(1.0));
    }
}
