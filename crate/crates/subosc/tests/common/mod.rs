//! Oracles shared by the integration suites. Everything here recomputes
//! expected values by algorithms unrelated to the library's own: contour
//! integrals for Taylor coefficients, long partial sums for exponentials,
//! and grid self-convolution for envelope spectra.

#![allow(dead_code)]

use num_complex::Complex64;

/// Taylor coefficients of an analytic `g` about `t0` by the trapezoidal
/// Cauchy integral on a circle of radius `r`:
/// `c_n = (1/M r^n) Σ_k g(t0 + r e^{iθ_k}) e^{-i n θ_k}`.
///
/// The trapezoid rule is spectrally accurate on periodic integrands, so with
/// a few hundred nodes this reaches rounding level; accuracy is limited by
/// `max|g| / (|c_n| rⁿ)`, which the caller controls through `r`.
pub fn contour_taylor(
    g: impl Fn(Complex64) -> Complex64,
    t0: f64,
    r: f64,
    nodes: usize,
    upto: usize,
) -> Vec<Complex64> {
    let mut samples = Vec::with_capacity(nodes);
    for k in 0..nodes {
        let theta = std::f64::consts::TAU * k as f64 / nodes as f64;
        let z = Complex64::new(t0 + r * theta.cos(), r * theta.sin());
        samples.push((g(z), theta));
    }
    (0..=upto)
        .map(|n| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(v, theta) in &samples {
                acc += v * Complex64::new(0.0, -(n as f64) * theta).exp();
            }
            acc / (nodes as f64 * r.powi(n as i32))
        })
        .collect()
}

/// `e^z` by its raw partial sum of 120 terms: converged past double
/// precision for `|z| ≤ 2π` and independent of the platform `exp`.
pub fn exp_partial_sum(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 1..=120 {
        term = term * z / n as f64;
        sum += term;
    }
    sum
}

/// Envelope spectrum by brute force: `m`-fold self-convolution of the
/// rectangle of height `m·δ` and width `w = 2π/(m·δ)` (normalized by `1/w`
/// per step) on a uniform grid of `m·cells_per_knot` cells spanning the full
/// support. Returns cell centers and values.
///
/// `cells_per_knot` must be odd and `m` even: then every averaging window
/// spans whole cells exactly, the first steps are exact (piecewise-linear
/// pieces aligned to cells), and the residual midpoint error stays a couple
/// of orders below `1e-6` of the peak at ~1600 cells per knot.
pub fn rect_self_convolution(
    m: usize,
    delta: f64,
    cells_per_knot: usize,
) -> (Vec<f64>, Vec<f64>) {
    assert!(cells_per_knot % 2 == 1, "cells_per_knot must be odd");
    assert!(m % 2 == 0, "m must be even for edge-cell alignment");
    let c = cells_per_knot;
    let w = std::f64::consts::TAU / (m as f64 * delta);
    let h = w / c as f64;
    let n = m * c;
    let lo = -(m as f64) * w / 2.0;
    let mut v = vec![0.0f64; n];
    // Rectangle edges ±w/2 land exactly on the centers of two cells; the
    // midpoint convention (half height there) keeps the first average exact.
    let left_edge = ((m - 1) * c - 1) / 2;
    let right_edge = ((m + 1) * c - 1) / 2;
    let height = m as f64 * delta;
    v[left_edge] = height / 2.0;
    v[right_edge] = height / 2.0;
    for cell in v.iter_mut().take(right_edge).skip(left_edge + 1) {
        *cell = height;
    }
    let half = (c - 1) / 2;
    for _ in 1..m {
        let mut prefix = vec![0.0f64; n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i] + v[i];
        }
        let mut next = vec![0.0f64; n];
        for (i, slot) in next.iter_mut().enumerate() {
            let a = i.saturating_sub(half);
            let b = (i + half + 1).min(n);
            *slot = (prefix[b] - prefix[a]) / c as f64;
        }
        v = next;
    }
    let centers = (0..n).map(|i| lo + (i as f64 + 0.5) * h).collect();
    (centers, v)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn contour_recovers_exponential_series() {
        let c = contour_taylor(|z| z.exp(), 0.0, 1.0, 128, 8);
        let mut fact = 1.0;
        for (n, got) in c.iter().enumerate() {
            if n > 0 {
                fact *= n as f64;
            }
            let want = 1.0 / fact;
            // Conditioning: the n-th coefficient is max|g|/ (|c_n| rⁿ) times
            // the unit roundoff away from exact; n=8 leaves ~1e-11 relative.
            assert!((got - Complex64::new(want, 0.0)).norm() <= 1e-10 * want);
        }
    }

    #[test]
    fn partial_sum_agrees_with_platform_exp() {
        for &(re, im) in &[(0.0, 6.0), (-1.0, 3.0), (0.5, -6.28)] {
            let z = Complex64::new(re, im);
            let diff = (exp_partial_sum(z) - z.exp()).norm();
            assert!(diff <= 1e-14 * z.exp().norm());
        }
    }

    #[test]
    fn two_fold_convolution_is_the_triangle() {
        let (xs, vs) = rect_self_convolution(2, 1.0, 101);
        let w = std::f64::consts::PI;
        for (x, v) in xs.iter().zip(&vs) {
            let want = 2.0 * (1.0 - x.abs() / w).max(0.0);
            assert!((v - want).abs() <= 1e-12 * 2.0, "x={x}: {v} vs {want}");
        }
    }
}
