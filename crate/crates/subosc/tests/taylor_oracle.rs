//! Cross-checks of the closed-form Taylor machinery against contour-integral
//! and partial-sum oracles that share no code with the implementation.

mod common;

use common::{contour_taylor, exp_partial_sum};
use num_complex::Complex64;
use std::f64::consts::TAU;
use subosc::{
    best_remainder_bound, select_order, taylor_product, SelectConfig, TargetKind,
};

fn product_fn(kind: &TargetKind, carrier_rate: Complex64) -> impl Fn(Complex64) -> Complex64 {
    let kind = kind.clone();
    move |z: Complex64| {
        let s = match &kind {
            TargetKind::Constant { value } => *value,
            TargetKind::ComplexExponential { rate } => (rate * z).exp(),
            TargetKind::Sinusoid { frequency } => (frequency * z).sin(),
            TargetKind::Polynomial { coefficients } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for &c in coefficients.iter().rev() {
                    acc = acc * z + c;
                }
                acc
            }
            TargetKind::Gaussian { width } => (-(z / width) * (z / width)).exp(),
        };
        s * (-carrier_rate * z).exp()
    }
}

#[test]
fn sinusoid_product_coefficients_match_the_contour_oracle() {
    let kind = TargetKind::Sinusoid {
        frequency: std::f64::consts::FRAC_PI_2,
    };
    let t0 = 0.3;
    let rate = Complex64::new(0.0, TAU);
    let p = taylor_product(&kind.at(t0).unwrap(), rate, 10).unwrap();
    let oracle = contour_taylor(product_fn(&kind, rate), t0, 1.0, 256, 10);
    let scale = oracle.iter().map(|c| c.norm()).fold(0.0, f64::max);
    for (n, (got, want)) in p.coefficients().iter().zip(&oracle).enumerate() {
        let err = (got - want).norm();
        assert!(
            err <= 1e-10 * want.norm().max(1e-6 * scale),
            "coefficient {n}: {got} vs oracle {want} (err {err:e})"
        );
    }
}

#[test]
fn every_kind_matches_the_contour_oracle_through_order_eight() {
    let kinds = [
        TargetKind::Constant {
            value: Complex64::new(0.8, -0.3),
        },
        TargetKind::ComplexExponential {
            rate: Complex64::new(0.3, 1.1),
        },
        TargetKind::Sinusoid { frequency: 1.3 },
        TargetKind::Polynomial {
            coefficients: vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, -2.0),
                Complex64::new(0.5, 0.5),
            ],
        },
        TargetKind::Gaussian { width: 1.7 },
    ];
    let rate = Complex64::new(0.0, TAU);
    for kind in &kinds {
        for &t0 in &[0.0, 0.7, -1.2] {
            let p = taylor_product(&kind.at(t0).unwrap(), rate, 8).unwrap();
            let oracle = contour_taylor(product_fn(kind, rate), t0, 0.8, 256, 8);
            let scale = oracle.iter().map(|c| c.norm()).fold(0.0, f64::max);
            for (n, (got, want)) in p.coefficients().iter().zip(&oracle).enumerate() {
                let err = (got - want).norm();
                assert!(
                    err <= 1e-8 * want.norm().max(1e-4 * scale),
                    "{kind:?} at t0={t0}, coefficient {n}: err {err:e}"
                );
            }
        }
    }
}

#[test]
fn selected_order_certifies_the_measured_tail() {
    let kind = TargetKind::Constant {
        value: Complex64::new(1.0, 0.0),
    };
    let target = kind.at(0.0).unwrap();
    let rate = Complex64::new(0.0, TAU);
    let config = SelectConfig::default();
    let eps1 = 5e-3;
    let order = select_order(&target, rate, 1.0, eps1, &config).unwrap();
    assert_eq!(order, 22);
    let bound = best_remainder_bound(&target, rate, order, 1.0, &config).unwrap();
    assert!(bound < eps1);
    let p = taylor_product(&target, rate, order).unwrap();
    let mut measured: f64 = 0.0;
    for i in 0..=800 {
        let t = -1.0 + 2.0 * i as f64 / 800.0;
        let truth = exp_partial_sum(Complex64::new(0.0, -TAU * t));
        measured = measured.max((p.eval(t) - truth).norm());
    }
    assert!(
        measured <= bound,
        "measured tail {measured:e} above certified bound {bound:e}"
    );
}

#[test]
fn bound_driven_order_brackets_the_raw_tail_sum_order() {
    // The certified bound is conservative; against the smallest order whose
    // raw coefficient tail sum beats the budget it may overshoot by a few
    // orders but never undershoots.
    let kind = TargetKind::Constant {
        value: Complex64::new(1.0, 0.0),
    };
    let target = kind.at(0.0).unwrap();
    let rate = Complex64::new(0.0, TAU);
    let config = SelectConfig::default();
    for &eps1 in &[1e-2, 1e-4, 1e-6] {
        let chosen = select_order(&target, rate, 1.0, eps1, &config).unwrap();
        // Tail sum Σ_{n>N} (2π)^n/n! at the window edge, brute force.
        let mut tail_order = None;
        let mut term = 1.0f64;
        let mut partial = 1.0f64;
        let total = TAU.exp();
        for n in 1..=200 {
            term *= TAU / n as f64;
            partial += term;
            if total - partial < eps1 {
                tail_order = Some(n);
                break;
            }
        }
        let tail_order = tail_order.unwrap();
        assert!(
            chosen >= tail_order,
            "eps1={eps1:e}: certified order {chosen} below raw tail order {tail_order}"
        );
        assert!(
            chosen <= tail_order + 4,
            "eps1={eps1:e}: certified order {chosen} too far above raw tail order {tail_order}"
        );
    }
}

#[test]
fn measured_remainder_stays_under_budget_across_kinds() {
    let cases = [
        (
            TargetKind::Sinusoid { frequency: 0.9 },
            0.2,
        ),
        (
            TargetKind::Gaussian { width: 1.5 },
            -0.4,
        ),
        (
            TargetKind::ComplexExponential {
                rate: Complex64::new(0.0, 1.2),
            },
            0.0,
        ),
    ];
    let rate = Complex64::new(0.0, TAU);
    let config = SelectConfig::default();
    let eps1 = 1e-3;
    for (kind, t0) in &cases {
        let target = kind.at(*t0).unwrap();
        let order = select_order(&target, rate, 0.8, eps1, &config).unwrap();
        let p = taylor_product(&target, rate, order).unwrap();
        let g = product_fn(kind, rate);
        let mut measured: f64 = 0.0;
        for i in 0..=500 {
            let t = t0 - 0.8 + 1.6 * i as f64 / 500.0;
            let truth = g(Complex64::new(t, 0.0));
            measured = measured.max((p.eval(t) - truth).norm());
        }
        assert!(
            measured < eps1,
            "{kind:?}: measured {measured:e} at order {order} vs budget {eps1:e}"
        );
    }
}
