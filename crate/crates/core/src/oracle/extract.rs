//! Incident/reflected phase difference by least-squares fitting of sampled
//! wavefunctions to a pair of reference waves.

use super::integrate::WavefunctionSample;
use crate::error::{Error, Result};
use crate::phases::airy_reflected_wave;
use crate::potentials::ScatteringState;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Largest accepted relative RMS residual of a fit.
pub const FIT_RESIDUAL_LIMIT: f64 = 1e-6;
/// Fewest oscillation periods a fitting window must span.
pub const MIN_PERIODS: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractedPhase {
    /// `arg(reflected) - arg(incident)` at the probe point, principal value.
    pub delta_theta: f64,
    /// Relative RMS of the fit residual over the window.
    pub fit_residual: f64,
}

impl ExtractedPhase {
    /// `delta_theta` moved by a multiple of `2 pi` to sit closest to `reference`.
    pub fn branch_near(&self, reference: f64) -> f64 {
        nearest_branch(self.delta_theta, reference)
    }
}

/// `value + 2 pi n` closest to `reference`.
pub fn nearest_branch(value: f64, reference: f64) -> f64 {
    value + 2.0 * PI * ((reference - value) / (2.0 * PI)).round()
}

/// Basis the sampled wavefunction is decomposed into.
pub trait ReferenceWaves {
    fn incident(&self, x: f64) -> Complex64;
    fn reflected(&self, x: f64) -> Complex64;
    /// Accumulated oscillation phase between two points, used for the window check.
    fn phase_span(&self, x0: f64, x1: f64) -> f64;
}

/// `e^{ikx}` incident, `e^{-ikx}` reflected.
#[derive(Debug, Clone, Copy)]
pub struct PlaneWaves {
    pub k: f64,
}

impl ReferenceWaves for PlaneWaves {
    fn incident(&self, x: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.k * x)
    }

    fn reflected(&self, x: f64) -> Complex64 {
        Complex64::from_polar(1.0, -self.k * x)
    }

    fn phase_span(&self, x0: f64, x1: f64) -> f64 {
        self.k * (x1 - x0).abs()
    }
}

/// Travelling parts of `Ai(-z)`, `z = (b - x)/a`: reflected
/// `(Ai - i Bi)/2`, incident its conjugate.
#[derive(Debug, Clone, Copy)]
pub struct AiryWaves {
    pub a: f64,
    pub b: f64,
}

impl AiryWaves {
    fn z(&self, x: f64) -> f64 {
        (self.b - x) / self.a
    }
}

impl ReferenceWaves for AiryWaves {
    fn incident(&self, x: f64) -> Complex64 {
        airy_reflected_wave(self.z(x)).conj()
    }

    fn reflected(&self, x: f64) -> Complex64 {
        airy_reflected_wave(self.z(x))
    }

    fn phase_span(&self, x0: f64, x1: f64) -> f64 {
        let zeta = |x: f64| 2.0 / 3.0 * self.z(x).max(0.0).powf(1.5);
        (zeta(x1) - zeta(x0)).abs()
    }
}

/// Fits `u = c_i inc + c_r ref` over `window` and reports the phase
/// difference `arg(c_r ref(probe)) - arg(c_i inc(probe))`.
pub fn extract_phase_with(
    samples: &[WavefunctionSample],
    refs: &impl ReferenceWaves,
    window: (f64, f64),
    probe: f64,
) -> Result<ExtractedPhase> {
    let (lo, hi) = window;
    if !(lo < hi) {
        return Err(Error::Domain(format!("empty fitting window [{lo}, {hi}]")));
    }
    let periods = refs.phase_span(lo, hi) / (2.0 * PI);
    if periods < MIN_PERIODS {
        return Err(Error::Domain(format!("fitting window spans {periods:.2} periods, need {MIN_PERIODS}")));
    }
    let pts: Vec<&WavefunctionSample> = samples.iter().filter(|s| s.x >= lo && s.x <= hi).collect();
    if pts.len() < 16 {
        return Err(Error::Domain(format!("only {} samples inside the fitting window", pts.len())));
    }
    // normal equations for two complex unknowns
    let (mut g11, mut g12, mut g22) = (0.0, Complex64::new(0.0, 0.0), 0.0);
    let (mut r1, mut r2) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for s in &pts {
        let p = refs.incident(s.x);
        let q = refs.reflected(s.x);
        g11 += p.norm_sqr();
        g22 += q.norm_sqr();
        g12 += p.conj() * q;
        r1 += p.conj() * s.value;
        r2 += q.conj() * s.value;
    }
    let det = g11 * g22 - g12.norm_sqr();
    if !(det > 1e-12 * g11 * g22) {
        return Err(Error::Domain("reference waves are degenerate over the window".into()));
    }
    let ci = (r1 * g22 - g12 * r2) / det;
    let cr = (r2 * g11 - g12.conj() * r1) / det;

    let (mut res, mut norm) = (0.0, 0.0);
    for s in &pts {
        let fit = ci * refs.incident(s.x) + cr * refs.reflected(s.x);
        res += (s.value - fit).norm_sqr();
        norm += s.value.norm_sqr();
    }
    let fit_residual = (res / norm).sqrt();
    if !(fit_residual < FIT_RESIDUAL_LIMIT) {
        return Err(Error::FitResidual { residual: fit_residual, threshold: FIT_RESIDUAL_LIMIT });
    }
    let d = (cr * refs.reflected(probe)).arg() - (ci * refs.incident(probe)).arg();
    let delta_theta = d - 2.0 * PI * ((d + PI) / (2.0 * PI)).floor();
    Ok(ExtractedPhase { delta_theta, fit_residual })
}

/// Plane-wave fit with the state's wavenumber.
pub fn extract_phase(
    samples: &[WavefunctionSample],
    state: &ScatteringState,
    window: (f64, f64),
    probe: f64,
) -> Result<ExtractedPhase> {
    extract_phase_with(samples, &PlaneWaves { k: state.k }, window, probe)
}

/// Zeros of the real part, located by cubic Hermite interpolation between
/// samples and polished with Newton steps on the interpolant.
pub fn zero_crossings(samples: &[WavefunctionSample]) -> Vec<f64> {
    let mut out = Vec::new();
    for w in samples.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let (f0, f1) = (a.value.re, b.value.re);
        if f0 == 0.0 {
            out.push(a.x);
            continue;
        }
        if f0 * f1 >= 0.0 {
            continue;
        }
        let h = b.x - a.x;
        let (d0, d1) = (a.derivative.re * h, b.derivative.re * h);
        let herm = |t: f64| {
            let t2 = t * t;
            let t3 = t2 * t;
            (2.0 * t3 - 3.0 * t2 + 1.0) * f0 + (t3 - 2.0 * t2 + t) * d0 + (-2.0 * t3 + 3.0 * t2) * f1 + (t3 - t2) * d1
        };
        let dherm = |t: f64| {
            let t2 = t * t;
            (6.0 * t2 - 6.0 * t) * f0 + (3.0 * t2 - 4.0 * t + 1.0) * d0 + (-6.0 * t2 + 6.0 * t) * f1 + (3.0 * t2 - 2.0 * t) * d1
        };
        let mut t = f0 / (f0 - f1);
        for _ in 0..8 {
            let step = herm(t) / dherm(t);
            t = (t - step).clamp(0.0, 1.0);
            if step.abs() < 1e-15 {
                break;
            }
        }
        out.push(a.x + t * h);
    }
    out
}
