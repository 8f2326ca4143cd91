//! Synthesis and verification of bandpass functions whose oscillation rate
//! inside a chosen window sits outside their own spectral band.
//!
//! A band-limited signal can locally oscillate slower than the bottom of its
//! band or faster than the top, at the cost of dynamic range. This crate
//! constructs such functions explicitly: a truncated Taylor polynomial of a
//! slow (or fast) target, multiplied by a flat-top sinc-power envelope and a
//! carrier. The polynomial matches the target on the working interval, the
//! envelope confines the spectrum, and the two error terms add:
//!
//! `|f - target·carrier| ≤ ε₁ (truncation) + ε₂ (envelope sag)`.
//!
//! The pieces:
//!
//! - [`targets`]: analytic targets, Taylor machinery, certified remainder
//!   bounds, and truncation-order selection.
//! - [`envelope`]: sinc-power envelopes and their exact B-spline spectra.
//! - [`synthesis`]: feasibility planning and assembly of the final function.
//! - [`spectral`]: exact spectra of synthesized functions, numerical
//!   transforms, and band-support checks.
//! - [`verify`]: empirical error, period, and dynamic-range measurements.
//! - [`presets`]: ready-made configurations used across tests and the CLI.

pub mod envelope;
pub mod error;
pub mod piecewise;
pub mod presets;
pub mod spectral;
pub mod synthesis;
pub mod targets;
pub mod verify;

pub use envelope::{envelope_spectrum, spectrum_derivative, BSplineSpectrum, Envelope};
pub use error::{Error, Result};
pub use piecewise::PiecewisePoly;
pub use spectral::{
    analytic_spectrum, band_support_check, function_spectrum, numerical_transform, transform_of,
    PiecewiseSpectrum, SpectrumJump, SpectrumSet, SupportReport,
};
pub use synthesis::{
    assemble, band_mapping, check_feasibility, flatness_bound, plan_synthesis, BandIntent,
    BandMapping, BandpassFunction, FeasibilityReport, Interval, PlanDiagnostics, SplitMode,
    SynthesisPlan,
};
pub use targets::{
    best_remainder_bound, remainder_bound, select_order, taylor_product, AnalyticTarget,
    ComplexPolynomial, RemainderBound, SelectConfig, TargetKind,
};
pub use verify::{
    classify, measure_dynamic_range, measure_error, periods_in_window, verify, Classification,
    ErrorMeasurement, VerificationReport,
};
