use std::f64::consts::PI;

use proptest::prelude::*;
use zetareg::extrapolate::{halving_steps, neville_at_zero};
use zetareg::hurwitz::{hurwitz_hasse, hurwitz_zeta, HurwitzQuery, HASSE_DEFAULT_MAX_TERMS};
use zetareg::identities::{verify_all, DEFAULT_GRID};
use zetareg::regsum::{
    closed_form, deninger_cos_log_sum, kummer_sine_series, log_sine_fourier, regularized_limit,
    trig_dirichlet_sum, ClosedForm, ExtrapolationPath, Parity, Scale, Trig, TrigSeriesSpec, Weight,
};
use zetareg::special::{digamma, log_gamma};
use zetareg::stieltjes::{stieltjes_gamma, StieltjesQuery};

fn zeta(s: f64, x: f64, m: u8) -> f64 {
    hurwitz_zeta(HurwitzQuery::new(s, x, m)).unwrap().value
}

fn gamma1(x: f64) -> f64 {
    stieltjes_gamma(StieltjesQuery::new(1, x)).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hasse_agrees_with_euler_maclaurin(s in -2.0f64..3.0, x in 0.1f64..3.0) {
        prop_assume!((s - 1.0).abs() > 0.05);
        let em = zeta(s, x, 0);
        let h = hurwitz_hasse(s, x, HASSE_DEFAULT_MAX_TERMS).unwrap().value;
        prop_assert!((em - h).abs() <= 1e-9 * em.abs().max(1.0), "{em} vs {h}");
    }

    #[test]
    fn shift_holds_for_every_derivative(s in -3.0f64..4.0, x in 0.05f64..5.0) {
        prop_assume!((s - 1.0).abs() > 0.01);
        let l = x.ln();
        let p = x.powf(-s);
        let expected = [-p, l * p, -l * l * p];
        for m in 0..3u8 {
            let d = zeta(s, 1.0 + x, m) - zeta(s, x, m);
            prop_assert!((d - expected[m as usize]).abs() <= 1e-10 * p.max(1.0) * l.abs().max(1.0).powi(m as i32));
        }
    }

    #[test]
    fn gamma1_recurrence(x in 0.05f64..10.0) {
        let d = gamma1(1.0 + x) - gamma1(x);
        prop_assert!((d + x.ln() / x).abs() <= 1e-10 * (1.0 / x).max(1.0));
    }

    #[test]
    fn lerch(x in 0.05f64..6.0) {
        let lhs = zeta(0.0, x, 1);
        let rhs = log_gamma(x).unwrap() - 0.5 * (2.0 * PI).ln();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0));
    }

    #[test]
    fn kummer_and_log_sine_are_odd_about_half(u in 0.02f64..0.98) {
        let k = kummer_sine_series(u).unwrap().value + kummer_sine_series(1.0 - u).unwrap().value;
        let l = log_sine_fourier(u).unwrap().value + log_sine_fourier(1.0 - u).unwrap().value;
        prop_assert!(k.abs() < 1e-10 && l.abs() < 1e-10);
        let d = deninger_cos_log_sum(u).unwrap().value - deninger_cos_log_sum(1.0 - u).unwrap().value;
        prop_assert!(d.abs() < 1e-10);
    }

    #[test]
    fn log_cosine_limit_reproduces_digamma(x in 0.05f64..0.95) {
        let l = regularized_limit(x, Trig::Cosine, Weight::LogN, Parity::AllN, Scale::TwoPiNPower,
            &ExtrapolationPath::toward(1.0)).unwrap().value;
        let want = closed_form(x, ClosedForm::CosineLog).unwrap();
        prop_assert!((l - want).abs() <= 1e-7 * want.abs().max(1.0));
        let psi = 2.0 * want - 0.5 * PI / (PI * x).tan() - 0.577_215_664_901_532_9 - (2.0 * PI).ln();
        prop_assert!((psi - digamma(x).unwrap()).abs() < 1e-12 * psi.abs().max(1.0));
    }

    #[test]
    fn scale_choice_does_not_change_unit_limits(x in 0.05f64..0.95, cos in any::<bool>()) {
        let trig = if cos { Trig::Cosine } else { Trig::Sine };
        let path = ExtrapolationPath::toward(1.0);
        let a = regularized_limit(x, trig, Weight::Unit, Parity::AllN, Scale::NPower, &path).unwrap().value;
        let b = regularized_limit(x, trig, Weight::Unit, Parity::AllN, Scale::TwoPiNPower, &path).unwrap().value;
        prop_assert!((a - b).abs() <= 2e-7);
    }

    #[test]
    fn neville_is_exact_on_polynomials(c in prop::collection::vec(-5.0f64..5.0, 1..6)) {
        let t = halving_steps(0.25, c.len() + 1);
        let y: Vec<f64> = t.iter().map(|&h| c.iter().rev().fold(0.0, |acc, &k| acc * h + k)).collect();
        let e = neville_at_zero(&t, &y).unwrap();
        prop_assert!((e.value - c[0]).abs() < 1e-9);
    }
}

#[test]
fn alternating_log_path_is_well_behaved() {
    // s = 1/2 member of the path, i.e. 1/2 below the limit point
    let spec = TrigSeriesSpec::new(
        0.5,
        Trig::Cosine,
        Weight::LogN,
        Parity::AllN,
        0.5,
        Scale::TwoPiNPower,
    );
    let r = trig_dirichlet_sum(&spec).unwrap();
    assert!(r.value.is_finite() && r.err_estimate < 1e-9);

    let path = ExtrapolationPath::toward(1.0);
    let ys: Vec<f64> = path
        .offsets()
        .iter()
        .map(|h| {
            let spec = TrigSeriesSpec { s: 1.0 - h, ..spec };
            trig_dirichlet_sum(&spec).unwrap().value
        })
        .collect();
    let e = neville_at_zero(&path.offsets(), &ys).unwrap();
    // monotone down to the roundoff floor
    let c: Vec<f64> = e.corrections.iter().map(|c| c.abs()).collect();
    assert!(
        c[2..].windows(2).all(|w| w[1] <= w[0] || w[1] < 1e-12),
        "{c:?}"
    );
}

#[test]
fn tightened_tolerances_still_pass() {
    let r = verify_all(DEFAULT_GRID, 1e-3).unwrap();
    let failing: Vec<_> = r.cases.iter().filter(|c| !c.pass).map(|c| c.id).collect();
    assert!(failing.is_empty(), "{failing:?}");
}
