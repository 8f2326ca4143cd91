//! Feasibility planning and assembly of bandpass functions.
//!
//! A synthesized function is `p(t)·e(t-t₀)·e^{iΩt}` (or a two-sided variant):
//! `p` is the truncated Taylor expansion of `target·e^{-iΩt}` about the
//! window midpoint, `e` the sinc-power envelope. On the window the distance
//! to `target·e^{iΩt}` splits into the Taylor tail (`ε₁`, certified by
//! [`remainder_bound`](crate::targets::remainder_bound)) plus the envelope
//! sag `|p|·(1-e)` (`ε₂`, bounded by [`flatness_bound`]). Planning picks the
//! truncation order for `ε₁`, then doubles the dilation until the sag fits
//! `ε₂` and the window obeys the width constraints of a genuine bandpass
//! function.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::envelope::Envelope;
use crate::error::{Error, Result};
use crate::targets::{
    select_order, taylor_product, ComplexPolynomial, SelectConfig, TargetKind,
};

/// Closed working interval `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "(f64, f64)", try_from = "(f64, f64)")]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a <= b) {
            return Err(Error::Domain(format!(
                "interval endpoints must be finite with a <= b, got [{a}, {b}]"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.b - self.a)
    }

    pub fn contains(&self, t: f64) -> bool {
        self.a <= t && t <= self.b
    }
}

impl From<Interval> for (f64, f64) {
    fn from(i: Interval) -> Self {
        (i.a, i.b)
    }
}

impl TryFrom<(f64, f64)> for Interval {
    type Error = Error;
    fn try_from(v: (f64, f64)) -> Result<Self> {
        Interval::new(v.0, v.1)
    }
}

/// How the real and negative-frequency halves of the output are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitMode {
    /// Single analytic part on the positive band. Complex-valued output.
    OneSided,
    /// Half weight on each of the `±Ω` carriers, each with its own
    /// expansion. Real-valued when the target is real-valued.
    TwoSidedHalf,
    /// Negative-frequency part forced to be the exact conjugate of the
    /// positive one. Rejects targets that are not real-valued on the line;
    /// output is real to rounding.
    TwoSidedConjugate,
}

/// Width constraints a bandpass window must satisfy: at least one period of
/// the lowest in-band frequency, at most a tenth of `(order+1)·dilation`
/// (beyond which the envelope no longer holds the polynomial down).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibilityReport {
    /// `π/(Ω - π/δ)`; infinite when the band reaches down to zero.
    pub min_half_width: f64,
    /// `(order+1)·δ/10`.
    pub max_half_width: f64,
    pub holds: bool,
}

pub fn check_feasibility(
    omega: f64,
    dilation: f64,
    order: usize,
    interval: Interval,
) -> FeasibilityReport {
    let hw = interval.half_width();
    let band_low = omega - std::f64::consts::PI / dilation;
    let min_half_width = if band_low > 0.0 {
        std::f64::consts::PI / band_low
    } else {
        f64::INFINITY
    };
    let max_half_width = (order + 1) as f64 * dilation / 10.0;
    FeasibilityReport {
        min_half_width,
        max_half_width,
        holds: min_half_width <= hw && hw <= max_half_width,
    }
}

/// Certified bound on `sup_interval |p(t)|·(1 - e(t - t₀))`, the price of
/// flattening the envelope over the window. Uses `1 - sinc^m(x) ≤ m(πx)²/6`
/// (valid through the first zero of sinc) with a dense-grid maximum of `|p|`.
pub fn flatness_bound(poly: &ComplexPolynomial, envelope: &Envelope, interval: Interval) -> f64 {
    let hw = interval.half_width();
    if hw == 0.0 {
        return 0.0;
    }
    let n = 512;
    let mut max_p: f64 = 0.0;
    for i in 0..=n {
        let t = interval.a() + (interval.b() - interval.a()) * i as f64 / n as f64;
        max_p = max_p.max(poly.eval(t).norm());
    }
    let u = std::f64::consts::PI * hw / envelope.time_scale();
    let sag = if u <= std::f64::consts::PI {
        (envelope.power() as f64 * u * u / 6.0).min(2.0)
    } else {
        // Window wider than the envelope's first zero: |1 - e| ≤ 2 is all
        // that survives. Planning never accepts this regime.
        2.0
    };
    max_p * sag
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanDiagnostics {
    /// Certified Taylor-tail bound at the selected order.
    pub truncation_bound: f64,
    /// Envelope-sag bound at the final dilation.
    pub flatness: f64,
    pub min_half_width: f64,
    pub max_half_width: f64,
    /// How many times the dilation was doubled from the requested value.
    pub dilation_doublings: u32,
    pub notes: Vec<String>,
}

/// A synthesis recipe: everything [`assemble`] needs besides the target
/// itself. `feasible` records whether the error budget and width constraints
/// were all met; an infeasible plan still carries its diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisPlan {
    pub omega: f64,
    pub order: usize,
    pub dilation: f64,
    pub interval: Interval,
    pub eps1: f64,
    pub eps2: f64,
    pub feasible: bool,
    pub diagnostics: PlanDiagnostics,
}

/// Plans a synthesis meeting `|f - target·e^{iΩt}| ≤ epsilon` on the window.
///
/// Splits the budget evenly, selects the truncation order for the first
/// half, then doubles the dilation from `dilation0` until the envelope sag
/// fits the second half and the window widths are admissible. Returns an
/// infeasible plan (with notes) rather than an error when no dilation works;
/// errors are reserved for invalid inputs and order-selection failure.
pub fn plan_synthesis(
    kind: &TargetKind,
    interval: Interval,
    epsilon: f64,
    omega: f64,
    dilation0: f64,
    config: &SelectConfig,
) -> Result<SynthesisPlan> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::Domain(format!(
            "error budget must be positive, got {epsilon}"
        )));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!(
            "carrier frequency must be positive for a bandpass synthesis, got {omega}"
        )));
    }
    if interval.half_width() == 0.0 {
        return Err(Error::Domain(
            "planning needs a window of positive length".into(),
        ));
    }
    let eps1 = epsilon / 2.0;
    let eps2 = epsilon / 2.0;
    let target = kind.at(interval.midpoint())?;
    let rate = Complex64::new(0.0, omega);
    let hw = interval.half_width();
    let order = select_order(&target, rate, hw, eps1, config)?;
    let truncation_bound =
        crate::targets::best_remainder_bound(&target, rate, order, hw, config)?;
    let poly = taylor_product(&target, rate, order)?;

    let mut notes = Vec::new();
    let limit_width = std::f64::consts::PI / omega;
    if limit_width > hw {
        notes.push(format!(
            "window half-width {hw} is below one carrier half-period {limit_width}; no dilation can make this a bandpass window"
        ));
    }

    let mut dilation = dilation0;
    let mut doublings = 0u32;
    let max_doublings = 60;
    loop {
        let envelope = Envelope::new(order + 1, dilation)?;
        let flatness = flatness_bound(&poly, &envelope, interval);
        let feas = check_feasibility(omega, dilation, order, interval);
        let feasible = flatness <= eps2 && feas.holds;
        if feasible || doublings >= max_doublings || !notes.is_empty() {
            if !feasible && doublings >= max_doublings {
                notes.push(format!(
                    "stopped after {doublings} dilation doublings with sag {flatness:e} against budget {eps2:e}"
                ));
            }
            return Ok(SynthesisPlan {
                omega,
                order,
                dilation,
                interval,
                eps1,
                eps2,
                feasible,
                diagnostics: PlanDiagnostics {
                    truncation_bound,
                    flatness,
                    min_half_width: feas.min_half_width,
                    max_half_width: feas.max_half_width,
                    dilation_doublings: doublings,
                    notes,
                },
            });
        }
        dilation *= 2.0;
        doublings += 1;
    }
}

/// A synthesized bandpass function: a common envelope times one or two
/// rotating polynomial parts.
#[derive(Debug, Clone)]
pub struct BandpassFunction {
    envelope: Envelope,
    center: f64,
    parts: Vec<(ComplexPolynomial, f64)>,
}

impl BandpassFunction {
    pub fn envelope(&self) -> &Envelope {
        &self.envelope
    }

    /// Window midpoint: expansion point of the parts and center of the
    /// envelope.
    pub fn center(&self) -> f64 {
        self.center
    }

    /// Polynomial parts with their carrier rotation frequencies.
    pub fn parts(&self) -> &[(ComplexPolynomial, f64)] {
        &self.parts
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let env = self.envelope.eval(t - self.center);
        let mut acc = Complex64::new(0.0, 0.0);
        for (poly, rotation) in &self.parts {
            let carrier = Complex64::new(0.0, rotation * t).exp();
            acc += poly.eval(t) * carrier;
        }
        acc * env
    }

    /// Largest carrier magnitude, the top of the occupied band together with
    /// the envelope half-width.
    pub fn max_rotation(&self) -> f64 {
        self.parts
            .iter()
            .map(|(_, r)| r.abs())
            .fold(0.0, f64::max)
    }
}

/// Builds the function a plan describes. Infeasible plans are rejected
/// unless `force` is set (useful for inspecting failed budgets).
pub fn assemble(
    plan: &SynthesisPlan,
    kind: &TargetKind,
    mode: SplitMode,
    force: bool,
) -> Result<BandpassFunction> {
    if !plan.feasible && !force {
        return Err(Error::Plan(format!(
            "plan is infeasible (sag {:e} vs budget {:e}); pass force to assemble anyway",
            plan.diagnostics.flatness, plan.eps2
        )));
    }
    let center = plan.interval.midpoint();
    let target = kind.at(center)?;
    let envelope = Envelope::new(plan.order + 1, plan.dilation)?;
    let rate = Complex64::new(0.0, plan.omega);
    let parts = match mode {
        SplitMode::OneSided => {
            vec![(taylor_product(&target, rate, plan.order)?, plan.omega)]
        }
        SplitMode::TwoSidedHalf => {
            let plus = taylor_product(&target, rate, plan.order)?.scaled(Complex64::new(0.5, 0.0));
            let minus = taylor_product(&target, -rate, plan.order)?.scaled(Complex64::new(0.5, 0.0));
            vec![(plus, plan.omega), (minus, -plan.omega)]
        }
        SplitMode::TwoSidedConjugate => {
            if !target.is_real_valued() {
                return Err(Error::Domain(
                    "conjugate splitting requires a real-valued target; use the half split for complex targets"
                        .into(),
                ));
            }
            let plus = taylor_product(&target, rate, plan.order)?.scaled(Complex64::new(0.5, 0.0));
            let minus = plus.conjugated();
            vec![(plus, plan.omega), (minus, -plan.omega)]
        }
    };
    Ok(BandpassFunction {
        envelope,
        center,
        parts,
    })
}

/// Carrier and time scaling that place a synthesis band exactly onto a
/// requested physical band `[w1, w2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BandMapping {
    /// Carrier frequency in scaled time.
    pub omega: f64,
    pub dilation: f64,
    /// `α`: physical time is `τ/α` for scaled time `τ`; frequencies scale by
    /// `α` the other way.
    pub time_scale: f64,
}

impl BandMapping {
    /// The physical band this mapping occupies.
    pub fn band(&self) -> (f64, f64) {
        let half = std::f64::consts::PI / self.dilation;
        (
            self.time_scale * (self.omega - half),
            self.time_scale * (self.omega + half),
        )
    }
}

/// Band placement intent: a strict bandpass band must not contain zero; a
/// superoscillation band may.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BandIntent {
    Bandpass,
    Superoscillation,
}

/// Maps a physical band to synthesis parameters at a chosen dilation:
/// `α = (w2-w1)·δ/2π` so the scaled band has width `2π/δ`, and the scaled
/// carrier sits at the scaled band center.
pub fn band_mapping(band: (f64, f64), intent: BandIntent, dilation: f64) -> Result<BandMapping> {
    let (w1, w2) = band;
    if !(w1.is_finite() && w2.is_finite() && w1 < w2) {
        return Err(Error::Domain(format!(
            "band edges must be finite with w1 < w2, got [{w1}, {w2}]"
        )));
    }
    if intent == BandIntent::Bandpass && w1 * w2 <= 0.0 {
        return Err(Error::Domain(format!(
            "a bandpass band must exclude zero, got [{w1}, {w2}]"
        )));
    }
    if !(dilation.is_finite() && dilation >= 1.0) {
        return Err(Error::Domain(format!(
            "dilation must be at least 1, got {dilation}"
        )));
    }
    let time_scale = (w2 - w1) * dilation / std::f64::consts::TAU;
    let omega = 0.5 * (w1 + w2) / time_scale;
    Ok(BandMapping {
        omega,
        dilation,
        time_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::{PI, TAU};

    fn constant_one() -> TargetKind {
        TargetKind::Constant {
            value: Complex64::new(1.0, 0.0),
        }
    }

    fn hand_plan(order: usize, dilation: f64, omega: f64, interval: Interval) -> SynthesisPlan {
        SynthesisPlan {
            omega,
            order,
            dilation,
            interval,
            eps1: 5e-3,
            eps2: 5e-3,
            feasible: true,
            diagnostics: PlanDiagnostics {
                truncation_bound: 0.0,
                flatness: 0.0,
                min_half_width: 0.0,
                max_half_width: f64::INFINITY,
                dilation_doublings: 0,
                notes: vec![],
            },
        }
    }

    #[test]
    fn interval_validation_and_geometry() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 0.0).is_err());
        let i = Interval::new(-1.0, 3.0).unwrap();
        assert_eq!(i.midpoint(), 1.0);
        assert_eq!(i.half_width(), 2.0);
        assert!(i.contains(3.0) && !i.contains(3.1));
    }

    #[test]
    fn flatness_bound_dominates_measured_sag() {
        let poly =
            ComplexPolynomial::new(vec![Complex64::new(1.0, 0.0)], 0.0).unwrap();
        let env = Envelope::new(1, 1.0).unwrap();
        let interval = Interval::new(-0.1, 0.1).unwrap();
        let bound = flatness_bound(&poly, &env, interval);
        let measured = 1.0 - env.eval(0.1);
        assert!(bound >= measured, "bound {bound} under measured {measured}");
        assert_relative_eq!(bound, PI * PI * 0.01 / 6.0, max_relative = 1e-12);
        assert!(bound < measured * 1.01);
    }

    #[test]
    fn flatness_of_a_point_window_is_zero() {
        let poly =
            ComplexPolynomial::new(vec![Complex64::new(2.0, 1.0)], 0.5).unwrap();
        let env = Envelope::new(3, 2.0).unwrap();
        let interval = Interval::new(0.5, 0.5).unwrap();
        assert_eq!(flatness_bound(&poly, &env, interval), 0.0);
    }

    #[test]
    fn plan_for_flat_target_is_feasible_without_widening() {
        let plan = plan_synthesis(
            &constant_one(),
            Interval::new(-1.0, 1.0).unwrap(),
            1e-2,
            TAU,
            4.0,
            &SelectConfig::default(),
        )
        .unwrap();
        assert!(plan.feasible);
        assert_eq!(plan.order, 22);
        assert_eq!(plan.dilation, 4.0);
        assert_eq!(plan.eps1, 5e-3);
        assert!(plan.diagnostics.truncation_bound <= plan.eps1);
        assert!(plan.diagnostics.flatness <= plan.eps2);
        assert_eq!(plan.diagnostics.dilation_doublings, 0);
    }

    #[test]
    fn plan_widens_dilation_when_budget_is_tight() {
        // A tighter overall budget raises the order a little and forces the
        // sag budget down; doubling the dilation once must fix it.
        let plan = plan_synthesis(
            &constant_one(),
            Interval::new(-1.0, 1.0).unwrap(),
            1e-3,
            TAU,
            4.0,
            &SelectConfig::default(),
        )
        .unwrap();
        assert!(plan.feasible);
        assert!(plan.dilation > 4.0);
        assert!(plan.diagnostics.dilation_doublings >= 1);
        assert!(plan.diagnostics.flatness <= plan.eps2);
    }

    #[test]
    fn short_window_is_reported_infeasible_not_an_error() {
        let plan = plan_synthesis(
            &constant_one(),
            Interval::new(-0.1, 0.1).unwrap(),
            1e-2,
            TAU,
            4.0,
            &SelectConfig::default(),
        )
        .unwrap();
        assert!(!plan.feasible);
        assert!(!plan.diagnostics.notes.is_empty());
        assert!(plan.diagnostics.min_half_width > 0.1);
    }

    #[test]
    fn assembled_function_matches_direct_formula() {
        let plan = hand_plan(19, 4.0, TAU, Interval::new(-1.0, 1.0).unwrap());
        let f = assemble(&plan, &constant_one(), SplitMode::OneSided, false).unwrap();
        for &t in &[-1.0, -0.5, 0.0, 0.3, 1.0, 7.75] {
            // Direct: truncated exponential series times envelope and carrier.
            let z = Complex64::new(0.0, -TAU * t);
            let mut term = Complex64::new(1.0, 0.0);
            let mut sum = term;
            for n in 1..=19 {
                term = term * z / n as f64;
                sum += term;
            }
            let direct = sum
                * f.envelope().eval(t)
                * Complex64::new(0.0, TAU * t).exp();
            let got = f.eval(t);
            assert!(
                (got - direct).norm() <= 1e-12 * direct.norm().max(1e-300),
                "t={t}: {got} vs {direct}"
            );
        }
    }

    #[test]
    fn conjugate_split_produces_real_output() {
        let plan = hand_plan(12, 4.0, TAU, Interval::new(-1.0, 1.0).unwrap());
        let f = assemble(&plan, &constant_one(), SplitMode::TwoSidedConjugate, false).unwrap();
        let g = assemble(&plan, &constant_one(), SplitMode::TwoSidedHalf, false).unwrap();
        let mut max_re: f64 = 0.0;
        for i in 0..1000 {
            let t = -50.0 + 100.0 * i as f64 / 999.0;
            max_re = max_re.max(f.eval(t).re.abs());
        }
        for i in 0..1000 {
            let t = -50.0 + 100.0 * i as f64 / 999.0;
            let v = f.eval(t);
            assert!(v.im.abs() <= 1e-12 * max_re, "imaginary leak at t={t}: {}", v.im);
            let w = g.eval(t);
            assert!((v - w).norm() <= 1e-12 * max_re.max(w.norm()));
        }
    }

    #[test]
    fn conjugate_split_rejects_complex_targets() {
        let plan = hand_plan(8, 4.0, TAU, Interval::new(-1.0, 1.0).unwrap());
        let kind = TargetKind::ComplexExponential {
            rate: Complex64::new(0.0, 0.6),
        };
        let err = assemble(&plan, &kind, SplitMode::TwoSidedConjugate, false).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(assemble(&plan, &kind, SplitMode::TwoSidedHalf, false).is_ok());
    }

    #[test]
    fn infeasible_plans_need_force() {
        let mut plan = hand_plan(8, 4.0, TAU, Interval::new(-1.0, 1.0).unwrap());
        plan.feasible = false;
        assert!(matches!(
            assemble(&plan, &constant_one(), SplitMode::OneSided, false),
            Err(Error::Plan(_))
        ));
        assert!(assemble(&plan, &constant_one(), SplitMode::OneSided, true).is_ok());
    }

    #[test]
    fn two_sided_half_averages_the_one_sided_carriers() {
        let plan = hand_plan(10, 4.0, TAU, Interval::new(-1.0, 1.0).unwrap());
        let kind = TargetKind::Sinusoid { frequency: 0.5 };
        let half = assemble(&plan, &kind, SplitMode::TwoSidedHalf, false).unwrap();
        let plus = assemble(&plan, &kind, SplitMode::OneSided, false).unwrap();
        // Mirror part: same target against the opposite carrier.
        let mut mirror_plan = plan.clone();
        mirror_plan.omega = -plan.omega;
        for &t in &[-0.9, -0.2, 0.0, 0.4, 1.0, 3.0] {
            let target = kind.at(0.0).unwrap();
            let minus_poly = taylor_product(&target, Complex64::new(0.0, -TAU), 10).unwrap();
            let minus = minus_poly.eval(t)
                * Complex64::new(0.0, -TAU * t).exp()
                * half.envelope().eval(t);
            let avg = 0.5 * (plus.eval(t) + minus);
            let got = half.eval(t);
            assert!((got - avg).norm() <= 1e-14 * avg.norm().max(1.0));
        }
        let _ = mirror_plan;
    }

    #[test]
    fn band_mapping_examples_and_round_trip() {
        let m = band_mapping((7.0 * PI / 4.0, 9.0 * PI / 4.0), BandIntent::Bandpass, 4.0).unwrap();
        assert_relative_eq!(m.omega, TAU, max_relative = 1e-14);
        assert_relative_eq!(m.time_scale, 1.0, max_relative = 1e-14);
        let (w1, w2) = m.band();
        assert_relative_eq!(w1, 7.0 * PI / 4.0, max_relative = 1e-14);
        assert_relative_eq!(w2, 9.0 * PI / 4.0, max_relative = 1e-14);

        let m2 = band_mapping((3.0, 5.0), BandIntent::Bandpass, 1.0).unwrap();
        assert_relative_eq!(m2.time_scale, 1.0 / PI, max_relative = 1e-14);
        assert_relative_eq!(m2.omega, 4.0 * PI, max_relative = 1e-14);
        let (v1, v2) = m2.band();
        assert_relative_eq!(v1, 3.0, max_relative = 1e-14);
        assert_relative_eq!(v2, 5.0, max_relative = 1e-14);
    }

    #[test]
    fn band_intent_gates_zero_crossing() {
        assert!(band_mapping((-1.0, 5.0), BandIntent::Bandpass, 2.0).is_err());
        assert!(band_mapping((-1.0, 5.0), BandIntent::Superoscillation, 2.0).is_ok());
        assert!(band_mapping((5.0, 3.0), BandIntent::Superoscillation, 2.0).is_err());
    }

    #[test]
    fn feasible_plans_meet_their_budget_end_to_end() {
        // The two bound halves are certified, so the measured deviation from
        // the target must sit inside the total budget, not just near it.
        let cases: [(TargetKind, f64, f64); 5] = [
            (constant_one(), -1.0, 1.0),
            (TargetKind::Sinusoid { frequency: 0.7 }, -1.2, 0.8),
            (TargetKind::Gaussian { width: 2.0 }, -0.9, 1.1),
            (
                TargetKind::Polynomial {
                    coefficients: vec![
                        Complex64::new(0.3, 0.0),
                        Complex64::new(-0.2, 0.1),
                        Complex64::new(0.05, 0.0),
                    ],
                },
                -1.0,
                0.6,
            ),
            (
                TargetKind::ComplexExponential {
                    rate: Complex64::new(0.0, 0.9),
                },
                -0.8,
                0.8,
            ),
        ];
        for (kind, a, b) in cases {
            let interval = Interval::new(a, b).unwrap();
            let epsilon = 1e-2;
            let plan = plan_synthesis(&kind, interval, epsilon, TAU, 4.0, &SelectConfig::default())
                .unwrap();
            assert!(plan.feasible, "expected feasibility for {kind:?}");
            let f = assemble(&plan, &kind, SplitMode::OneSided, false).unwrap();
            let target = kind.at(interval.midpoint()).unwrap();
            let mut worst: f64 = 0.0;
            for i in 0..=400 {
                let t = a + (b - a) * i as f64 / 400.0;
                worst = worst.max((f.eval(t) - target.eval(t)).norm());
            }
            assert!(
                worst <= epsilon,
                "budget violated for {kind:?}: measured {worst} > {epsilon}"
            );
        }
    }

    #[test]
    fn plan_json_shape_is_stable() {
        let plan = plan_synthesis(
            &constant_one(),
            Interval::new(-1.0, 1.0).unwrap(),
            1e-2,
            TAU,
            4.0,
            &SelectConfig::default(),
        )
        .unwrap();
        let v = serde_json::to_value(&plan).unwrap();
        for key in ["omega", "order", "dilation", "interval", "eps1", "eps2", "feasible", "diagnostics"] {
            assert!(v.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(v["interval"].as_array().unwrap().len(), 2);
        let round: SynthesisPlan = serde_json::from_value(v).unwrap();
        assert_eq!(round, plan);
        assert_abs_diff_eq!(round.interval.a(), -1.0);
    }
}
