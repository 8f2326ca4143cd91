//! Empirical verification: measured window error, oscillation count,
//! dynamic range, and the sub/super classification of a synthesis.
//!
//! These measurements live on grids dense against the fastest frequency a
//! function can contain (carrier plus band half-width), so no oscillation
//! falls between samples. They complement the certified bounds: the bound
//! says the error cannot exceed the budget, the measurement says what it is.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::synthesis::{BandpassFunction, Interval, SplitMode, SynthesisPlan};
use crate::targets::TargetKind;

/// Floor on grid density: samples per period of the fastest content.
pub const MIN_SAMPLES_PER_PERIOD: f64 = 50.0;

/// Sup-norm distance between the synthesis and its target over a window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorMeasurement {
    pub sup_error: f64,
    /// Grid point where the supremum was attained.
    pub at: f64,
    pub grid_spacing: f64,
    pub samples_per_period: f64,
}

/// Measures `sup |f(t) - target(t)|` over the window on a uniform grid that
/// includes both endpoints and places at least `samples_per_period` points
/// per period of the fastest frequency in `f` (floored at
/// [`MIN_SAMPLES_PER_PERIOD`]).
pub fn measure_error(
    f: &BandpassFunction,
    kind: &TargetKind,
    interval: Interval,
    samples_per_period: f64,
) -> Result<ErrorMeasurement> {
    let density = samples_per_period.max(MIN_SAMPLES_PER_PERIOD);
    let target = kind.at(f.center())?;
    let fastest = fastest_frequency(f);
    let period = std::f64::consts::TAU / fastest;
    let width = interval.b() - interval.a();
    let n = ((width / (period / density)).ceil() as usize).max(2);
    let mut sup = ErrorMeasurement {
        sup_error: 0.0,
        at: interval.a(),
        grid_spacing: width / n as f64,
        samples_per_period: period / (width / n as f64),
    };
    for i in 0..=n {
        let t = interval.a() + width * i as f64 / n as f64;
        let err = (f.eval(t) - target.eval(t)).norm();
        if err > sup.sup_error {
            sup.sup_error = err;
            sup.at = t;
        }
    }
    Ok(sup)
}

fn fastest_frequency(f: &BandpassFunction) -> f64 {
    let band_half = std::f64::consts::PI / f.envelope().dilation();
    (f.max_rotation() + band_half).max(1e-9)
}

/// Orders of magnitude between the function's global peak over
/// `|t - center| ≤ survey_half_width` and its peak inside the window:
/// `log10(sup_survey |f| / sup_window |f|)`. Degenerate (identically zero
/// over the window) functions are a domain error.
pub fn measure_dynamic_range(
    f: &BandpassFunction,
    interval: Interval,
    survey_half_width: f64,
) -> Result<f64> {
    if !(survey_half_width.is_finite() && survey_half_width > 0.0) {
        return Err(Error::Domain("survey half-width must be positive".into()));
    }
    let fastest = fastest_frequency(f);
    let spacing = std::f64::consts::TAU / fastest / MIN_SAMPLES_PER_PERIOD;
    let peak_over = |a: f64, b: f64| -> f64 {
        let n = (((b - a) / spacing).ceil() as usize).max(2);
        let mut peak: f64 = 0.0;
        for i in 0..=n {
            let t = a + (b - a) * i as f64 / n as f64;
            peak = peak.max(f.eval(t).norm());
        }
        peak
    };
    let inside = peak_over(interval.a(), interval.b());
    if inside == 0.0 {
        return Err(Error::Domain(
            "function vanishes on the whole window; dynamic range is undefined".into(),
        ));
    }
    let survey = peak_over(
        f.center() - survey_half_width,
        f.center() + survey_half_width,
    );
    Ok((survey / inside).log10())
}

/// How many periods of the lowest in-band frequency fit in the window. A
/// value below 1 means the window is too short to call the behavior slower
/// than the band.
pub fn periods_in_window(interval: Interval, band_low: f64) -> f64 {
    (interval.b() - interval.a()) * band_low / std::f64::consts::TAU
}

/// Relation between a target's local oscillation rate and a band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Band excludes zero and the target oscillates slower than its bottom.
    Suboscillatory,
    /// Band contains zero and the target oscillates faster than its edges.
    Superoscillatory,
    /// Local rate falls inside what the band supports.
    Neither,
}

/// Classifies a target against a band `(w1, w2)` by its local frequency at
/// the expansion point.
pub fn classify(kind: &TargetKind, expansion_point: f64, band: (f64, f64)) -> Result<Classification> {
    let (w1, w2) = band;
    if !(w1.is_finite() && w2.is_finite() && w1 < w2) {
        return Err(Error::Domain(format!(
            "band edges must be finite with w1 < w2, got [{w1}, {w2}]"
        )));
    }
    let local = kind.at(expansion_point)?.local_frequency().abs();
    let c = if w1 * w2 > 0.0 && local < w1.abs().min(w2.abs()) {
        Classification::Suboscillatory
    } else if w1 * w2 < 0.0 && local > w1.abs().max(w2.abs()) {
        Classification::Superoscillatory
    } else {
        Classification::Neither
    };
    Ok(c)
}

/// Everything the empirical checks say about one synthesis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub sup_error: f64,
    pub error_at: f64,
    pub periods_in_window: f64,
    pub dynamic_range_orders: f64,
    pub classification: Classification,
    pub grid_spacing: f64,
    pub samples_per_period: f64,
    pub window: (f64, f64),
    pub survey_half_width: f64,
}

/// Runs the full measurement suite for an assembled plan.
pub fn verify(
    f: &BandpassFunction,
    kind: &TargetKind,
    plan: &SynthesisPlan,
    mode: SplitMode,
    survey_half_width: f64,
    samples_per_period: f64,
) -> Result<VerificationReport> {
    let err = measure_error(f, kind, plan.interval, samples_per_period)?;
    let dr = measure_dynamic_range(f, plan.interval, survey_half_width)?;
    let band_half = std::f64::consts::PI / plan.dilation;
    let band = match mode {
        SplitMode::OneSided => (plan.omega - band_half, plan.omega + band_half),
        // Two-sided syntheses occupy ±Ω; classification and period counting
        // use the positive half, which carries the same information.
        SplitMode::TwoSidedHalf | SplitMode::TwoSidedConjugate => {
            (plan.omega - band_half, plan.omega + band_half)
        }
    };
    Ok(VerificationReport {
        sup_error: err.sup_error,
        error_at: err.at,
        periods_in_window: periods_in_window(plan.interval, band.0),
        dynamic_range_orders: dr,
        classification: classify(kind, plan.interval.midpoint(), band)?,
        grid_spacing: err.grid_spacing,
        samples_per_period: err.samples_per_period,
        window: (plan.interval.a(), plan.interval.b()),
        survey_half_width,
    })
}
