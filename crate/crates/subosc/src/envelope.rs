//! Flat-top sinc-power envelopes and their exact piecewise-polynomial
//! spectra.
//!
//! The envelope `e(t) = sinc^m(t/(m·δ))` is 1 at the origin, even, bounded
//! by 1, and decays like `|t|^{-m}`. Raising the power while widening the
//! argument keeps the spectral support fixed at `[-π/δ, π/δ]`: the transform
//! is the m-fold self-convolution of a rectangle, i.e. a dilated cardinal
//! B-spline with `m+1` uniformly spaced knots.
//!
//! The spectrum is built by the integrate-and-difference recursion
//! (convolving with a rectangle is a running average, which is exact
//! antiderivative arithmetic on the pieces). The closed form with
//! alternating truncated powers is never used; it cancels catastrophically
//! at these orders.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::piecewise::{antiderivative_coeffs, horner, PiecewisePoly};

/// Sinc-power envelope `sinc^power(t / (power·dilation))`.
///
/// `power` is written `m` throughout; synthesis pairs a degree-`N`
/// polynomial with `m = N + 1`. `dilation ≥ 1` trades flatness over the
/// working interval against spectral width `2π/dilation`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Envelope {
    power: usize,
    dilation: f64,
}

impl Envelope {
    pub fn new(power: usize, dilation: f64) -> Result<Self> {
        if power == 0 {
            return Err(Error::Domain("envelope power must be at least 1".into()));
        }
        if !(dilation.is_finite() && dilation >= 1.0) {
            return Err(Error::Domain(format!(
                "envelope dilation must be finite and at least 1, got {dilation}"
            )));
        }
        Ok(Self { power, dilation })
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn dilation(&self) -> f64 {
        self.dilation
    }

    /// Argument scale `m·δ`: the envelope's first zero sits at `t = m·δ`.
    pub fn time_scale(&self) -> f64 {
        self.power as f64 * self.dilation
    }

    /// Evaluates the envelope. Results stay in `[-1, 1]`; far tails underflow
    /// to zero, which downstream consumers accept. Near the origin each sinc
    /// factor switches to its even series to avoid the 0/0 form.
    pub fn eval(&self, t: f64) -> f64 {
        let x = t / self.time_scale();
        let px = std::f64::consts::PI * x;
        let factor = if x.abs() < 1e-4 {
            let p2 = px * px;
            1.0 - p2 / 6.0 + p2 * p2 / 120.0
        } else {
            px.sin() / px
        };
        factor.powi(self.power as i32)
    }
}

/// Exact spectrum of an [`Envelope`]: a dilated cardinal B-spline supported
/// on `[-π/δ, π/δ]` with `power + 1` knots, piece degree `power - 1`, and
/// total mass `∫E dω = 2π`.
#[derive(Debug, Clone, PartialEq)]
pub struct BSplineSpectrum {
    power: usize,
    dilation: f64,
    poly: PiecewisePoly,
}

impl BSplineSpectrum {
    pub fn power(&self) -> usize {
        self.power
    }

    pub fn dilation(&self) -> f64 {
        self.dilation
    }

    /// Knot spacing `2π/(m·δ)`.
    pub fn knot_spacing(&self) -> f64 {
        std::f64::consts::TAU / (self.power as f64 * self.dilation)
    }

    pub fn poly(&self) -> &PiecewisePoly {
        &self.poly
    }

    pub fn eval(&self, omega: f64) -> f64 {
        self.poly.eval(omega)
    }

    pub fn support(&self) -> (f64, f64) {
        self.poly.support()
    }
}

// Export schema: { power, dilation, knots, pieces }, pieces in the local
// variable u = ω - left knot, ascending degree.
impl Serialize for BSplineSpectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BSplineSpectrum", 4)?;
        s.serialize_field("power", &self.power)?;
        s.serialize_field("dilation", &self.dilation)?;
        s.serialize_field("knots", &self.poly.knots())?;
        s.serialize_field("pieces", &self.poly.pieces())?;
        s.end()
    }
}

/// Builds the exact spectrum of `env` by repeated rectangle convolution.
///
/// Start from the rectangle of height `m·δ` on `[-w/2, w/2]`, `w = 2π/(m·δ)`;
/// each further factor of sinc multiplies the spectrum by a width-`w` running
/// average, performed exactly on the piece coefficients.
pub fn envelope_spectrum(env: &Envelope) -> BSplineSpectrum {
    let m = env.power();
    let w = std::f64::consts::TAU / env.time_scale();
    let height = env.time_scale();
    let mut pieces: Vec<Vec<f64>> = vec![vec![height]];
    for _ in 1..m {
        pieces = running_average_step(&pieces, w);
    }
    // Knot j of the final spline sits at (2j - m)·(π/(m·δ)); this form keeps
    // the grid exactly antisymmetric.
    let half_spacing = std::f64::consts::PI / env.time_scale();
    let knots: Vec<f64> = (0..=m).map(|j| (2 * j as i64 - m as i64) as f64 * half_spacing).collect();
    let poly = PiecewisePoly::new(knots, pieces).expect("spline construction is well-formed");
    BSplineSpectrum {
        power: m,
        dilation: env.dilation(),
        poly,
    }
}

/// One running-average step `(1/w)∫_{x-w/2}^{x+w/2}` on uniform-width pieces:
/// integrate each piece, accumulate knot-to-knot masses, and difference the
/// shifted antiderivatives. Adds one piece and one degree.
fn running_average_step(pieces: &[Vec<f64>], w: f64) -> Vec<Vec<f64>> {
    let k = pieces.len();
    let ints: Vec<Vec<f64>> = pieces.iter().map(|p| antiderivative_coeffs(p)).collect();
    let mut cum = vec![0.0; k + 1];
    for j in 0..k {
        cum[j + 1] = cum[j] + horner(&ints[j], w);
    }
    let total = cum[k];
    let mut out = Vec::with_capacity(k + 1);
    for j in 0..=k {
        // Antiderivative evaluated at x + w/2 lands in old piece j (or past
        // the support), at x - w/2 in old piece j-1 (or before it).
        let upper: Vec<f64> = if j < k {
            let mut v = ints[j].clone();
            v[0] += cum[j];
            v
        } else {
            vec![total]
        };
        let lower: Vec<f64> = if j >= 1 {
            let mut v = ints[j - 1].clone();
            v[0] += cum[j - 1];
            v
        } else {
            vec![0.0]
        };
        let len = upper.len().max(lower.len());
        let mut g = vec![0.0; len];
        for (i, slot) in g.iter_mut().enumerate() {
            let hi = upper.get(i).copied().unwrap_or(0.0);
            let lo = lower.get(i).copied().unwrap_or(0.0);
            *slot = (hi - lo) / w;
        }
        out.push(g);
    }
    out
}

/// `k`-th derivative of the spectrum as a piecewise polynomial on the same
/// knots. Defined for `k ≤ power - 1`; the `(power-1)`-th derivative is
/// piecewise constant with genuine knot jumps, and beyond that the function
/// is no longer pointwise differentiable at the knots.
pub fn spectrum_derivative(spectrum: &BSplineSpectrum, k: usize) -> Result<PiecewisePoly> {
    if k >= spectrum.power {
        return Err(Error::Domain(format!(
            "derivative order {k} exceeds the piecewise degree; the spectrum of a power-{} envelope has {} classical derivatives",
            spectrum.power,
            spectrum.power - 1
        )));
    }
    Ok(spectrum.poly.derivative_n(k))
}
