//! Piecewise polynomials on a knot grid, used for exact spectral algebra.
//!
//! A `PiecewisePoly` is zero outside its knot span. Each piece stores plain
//! monomial coefficients in the local variable `u = x - knots[j]`, ascending
//! by degree, so evaluation is a Horner pass and calculus is coefficient
//! arithmetic. Nothing here samples or approximates; quadrature enters only
//! in [`PiecewisePoly::integrate_against_exp`], which is oscillation-aware.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) fn horner(coeffs: &[f64], u: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * u + c;
    }
    acc
}

pub(crate) fn horner_complex(coeffs: &[Complex64], u: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * u + c;
    }
    acc
}

/// Coefficients of the derivative of `coeffs`.
pub(crate) fn diff_coeffs(coeffs: &[f64]) -> Vec<f64> {
    if coeffs.len() <= 1 {
        return vec![0.0];
    }
    coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (i + 1) as f64)
        .collect()
}

/// Coefficients of the antiderivative of `coeffs` with zero constant term.
pub(crate) fn antiderivative_coeffs(coeffs: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(coeffs.len() + 1);
    out.push(0.0);
    for (i, &c) in coeffs.iter().enumerate() {
        out.push(c / (i + 1) as f64);
    }
    out
}

/// Real piecewise polynomial, identically zero outside `[knots[0], knots[K]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePoly {
    knots: Vec<f64>,
    pieces: Vec<Vec<f64>>,
}

impl PiecewisePoly {
    /// Builds a piecewise polynomial; `knots` must be strictly increasing and
    /// bound exactly `knots.len() - 1` coefficient lists.
    pub fn new(knots: Vec<f64>, pieces: Vec<Vec<f64>>) -> Result<Self> {
        if knots.len() < 2 || pieces.len() + 1 != knots.len() {
            return Err(Error::Domain(format!(
                "piecewise polynomial needs pieces.len()+1 knots, got {} knots and {} pieces",
                knots.len(),
                pieces.len()
            )));
        }
        if knots.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Domain("knots must be strictly increasing".into()));
        }
        if pieces.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::Numeric("non-finite piece coefficient".into()));
        }
        Ok(Self { knots, pieces })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn pieces(&self) -> &[Vec<f64>] {
        &self.pieces
    }

    pub fn support(&self) -> (f64, f64) {
        (self.knots[0], *self.knots.last().unwrap())
    }

    /// Evaluates at `x`; points outside the knot span give 0. Interior knots
    /// evaluate through the piece on their right, the last knot through the
    /// piece on its left.
    pub fn eval(&self, x: f64) -> f64 {
        let (lo, hi) = self.support();
        if x < lo || x > hi {
            return 0.0;
        }
        let j = self.piece_index(x);
        horner(&self.pieces[j], x - self.knots[j])
    }

    fn piece_index(&self, x: f64) -> usize {
        let k = self.knots.partition_point(|&k| k <= x);
        k.saturating_sub(1).min(self.pieces.len() - 1)
    }

    /// Per-piece derivative. Jump discontinuities at knots are not modeled;
    /// callers that care about them compare one-sided values.
    pub fn derivative(&self) -> PiecewisePoly {
        PiecewisePoly {
            knots: self.knots.clone(),
            pieces: self.pieces.iter().map(|p| diff_coeffs(p)).collect(),
        }
    }

    pub fn derivative_n(&self, k: usize) -> PiecewisePoly {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.derivative();
        }
        out
    }

    /// Limit from the left at `knots[j]` (zero left of the support).
    pub fn value_left(&self, j: usize) -> f64 {
        if j == 0 {
            return 0.0;
        }
        let width = self.knots[j] - self.knots[j - 1];
        horner(&self.pieces[j - 1], width)
    }

    /// Limit from the right at `knots[j]` (zero right of the support).
    pub fn value_right(&self, j: usize) -> f64 {
        if j == self.pieces.len() {
            return 0.0;
        }
        self.pieces[j][0]
    }

    /// Exact integral over the support.
    pub fn integral(&self) -> f64 {
        self.pieces
            .iter()
            .zip(self.knots.windows(2))
            .map(|(p, kn)| horner(&antiderivative_coeffs(p), kn[1] - kn[0]))
            .sum()
    }

    /// `max |P(x)|` over an `n`-point uniform grid spanning the support,
    /// knot values included.
    pub fn max_abs_on_grid(&self, n: usize) -> f64 {
        let (lo, hi) = self.support();
        let n = n.max(2);
        let mut m: f64 = 0.0;
        for i in 0..n {
            let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            m = m.max(self.eval(x).abs());
        }
        for &k in &self.knots {
            m = m.max(self.eval(k).abs());
        }
        m
    }

    /// `∫ P(ω) e^{iωt} dω` over the support by composite Gauss-Legendre,
    /// subdividing each piece so no panel spans more than about two
    /// oscillations of the exponential.
    pub fn integrate_against_exp(&self, t: f64) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for (p, kn) in self.pieces.iter().zip(self.knots.windows(2)) {
            let width = kn[1] - kn[0];
            let oscillations = width * t.abs() / std::f64::consts::TAU;
            let panels = ((oscillations / 2.0).ceil() as usize).max(1);
            let h = width / panels as f64;
            for i in 0..panels {
                let a = kn[0] + h * i as f64;
                let mid = a + h / 2.0;
                let half = h / 2.0;
                for (&x, &w) in GL12_NODES.iter().zip(GL12_WEIGHTS.iter()) {
                    let omega = mid + half * x;
                    let val = horner(p, omega - kn[0]);
                    total += Complex64::from_polar(val, omega * t) * (w * half);
                }
            }
        }
        total
    }
}

// 12-point Gauss-Legendre rule on [-1, 1].
const GL12_NODES: [f64; 12] = [
    -0.9815606342467192,
    -0.9041172563704749,
    -0.7699026741943047,
    -0.5873179542866175,
    -0.3678314989981802,
    -0.1252334085114689,
    0.1252334085114689,
    0.3678314989981802,
    0.5873179542866175,
    0.7699026741943047,
    0.9041172563704749,
    0.9815606342467192,
];
const GL12_WEIGHTS: [f64; 12] = [
    0.0471753363865118,
    0.1069393259953184,
    0.1600783285433462,
    0.2031674267230659,
    0.2334925365383548,
    0.2491470458134028,
    0.2491470458134028,
    0.2334925365383548,
    0.2031674267230659,
    0.1600783285433462,
    0.1069393259953184,
    0.0471753363865118,
];
