//! Canonical ready-made syntheses, shared by the test suite and the CLI.

use num_complex::Complex64;

use crate::envelope::Envelope;
use crate::synthesis::{
    flatness_bound, Interval, PlanDiagnostics, SplitMode, SynthesisPlan,
};
use crate::targets::{best_remainder_bound, taylor_product, SelectConfig, TargetKind};

/// A named target/plan/mode triple.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub kind: TargetKind,
    pub plan: SynthesisPlan,
    pub mode: SplitMode,
}

/// The canonical demonstration: hold the value 1 over `(-1, 1)` with a
/// function whose band is `2π ± π/4`, using a degree-19 polynomial and
/// dilation 4. Its sup error over the window measures near `8.6e-3`, it
/// completes 1.75 periods of the lowest band frequency there, and its peak
/// within `|t| ≤ 500` sits about 24.6 orders of magnitude above the window.
///
/// The plan's budget fields carry the certified bounds at this fixed order
/// (the tail bound is a conservative `~6e-2`; the measured error is an order
/// tighter).
pub fn flat_top() -> Preset {
    let kind = TargetKind::Constant {
        value: Complex64::new(1.0, 0.0),
    };
    let omega = std::f64::consts::TAU;
    let order = 19;
    let dilation = 4.0;
    let interval = Interval::new(-1.0, 1.0).unwrap();
    let target = kind.at(0.0).unwrap();
    let rate = Complex64::new(0.0, omega);
    let config = SelectConfig::default();
    let eps1 = best_remainder_bound(&target, rate, order, interval.half_width(), &config)
        .expect("canonical parameters are admissible");
    let poly = taylor_product(&target, rate, order).expect("canonical parameters are admissible");
    let envelope = Envelope::new(order + 1, dilation).unwrap();
    let eps2 = flatness_bound(&poly, &envelope, interval);
    let feas = crate::synthesis::check_feasibility(omega, dilation, order, interval);
    let plan = SynthesisPlan {
        omega,
        order,
        dilation,
        interval,
        eps1,
        eps2,
        feasible: feas.holds,
        diagnostics: PlanDiagnostics {
            truncation_bound: eps1,
            flatness: eps2,
            min_half_width: feas.min_half_width,
            max_half_width: feas.max_half_width,
            dilation_doublings: 0,
            notes: vec!["order fixed by the preset, not chosen from a budget".into()],
        },
    };
    Preset {
        name: "flat-top",
        kind,
        plan,
        mode: SplitMode::OneSided,
    }
}

/// Real-valued variant of [`flat_top`]: same parameters, conjugate split
/// over the bands `±2π ± π/4`.
pub fn flat_top_real() -> Preset {
    let mut p = flat_top();
    p.name = "flat-top-real";
    p.mode = SplitMode::TwoSidedConjugate;
    p
}

pub fn by_name(name: &str) -> Option<Preset> {
    match name {
        "flat-top" => Some(flat_top()),
        "flat-top-real" => Some(flat_top_real()),
        _ => None,
    }
}

pub fn names() -> &'static [&'static str] {
    &["flat-top", "flat-top-real"]
}
