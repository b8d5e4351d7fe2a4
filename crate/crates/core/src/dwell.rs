//! Dwell time in the classically forbidden region above the turning point.
//!
//! With `u = N Ai(-z)`, the probability above the turning point per `|N|^2`
//! is `(a / (3 pi^2)) I`, where `I = int_0^inf z K_{1/3}^2((2/3) z^{3/2}) dz`,
//! and the incident flux per `|N|^2` is `hbar / (4 pi a m_i)`. Their ratio is
//! `kappa (hbar m_i / (m_g^2 g^2))^{1/3}` with
//! `kappa = (1/pi) (3/4)^{1/3} Gamma(2/3)^2`, about 0.530.

use crate::clock::gravity_time_scale;
use crate::error::{Error, Result};
use crate::oracle::quadrature::{gauss_kronrod_adaptive, QuadOptions};
use crate::phases::{airy_incident_wave, current_density};
use crate::potentials::ScatteringState;
use crate::specfun::{bessel_k_third, gamma};
use crate::units::GravityScales;
use std::f64::consts::PI;

/// Depths at which the incident flux is sampled; they must agree.
const FLUX_DEPTHS: [f64; 2] = [20.0, 40.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbabilityMethod {
    ClosedForm,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DwellResult {
    /// Probability above the turning point per `|N|^2`.
    pub probability: f64,
    /// Incident probability current per `|N|^2`.
    pub flux: f64,
    pub dwell_time: f64,
    /// `dwell_time / (hbar m_i / (m_g^2 g^2))^{1/3}`.
    pub kappa: f64,
}

/// `3^{4/3} Gamma(2/3)^2 / 4 = 1.98341989...`
pub fn forbidden_integral_closed_form() -> f64 {
    3f64.powf(4.0 / 3.0) * gamma(2.0 / 3.0).powi(2) / 4.0
}

/// `int_0^inf z K_{1/3}^2(zeta) dz` by adaptive quadrature on `[0, 30]`;
/// the integrand is below `1e-40` beyond.
pub fn forbidden_integral_quadrature() -> Result<f64> {
    let f = |z: f64| {
        if z <= 0.0 {
            // z K^2 ~ z^{1/2} near 0
            return 0.0;
        }
        let k = bessel_k_third(2.0 / 3.0 * z.powf(1.5)).unwrap_or(0.0);
        z * k * k
    };
    let opts = QuadOptions { abs_tol: 1e-13, rel_tol: 1e-13, max_intervals: 4000 };
    let head = gauss_kronrod_adaptive(f, 0.0, 1.0, &opts)?;
    let tail = gauss_kronrod_adaptive(f, 1.0, 30.0, &opts)?;
    Ok(head.value + tail.value)
}

/// `(1/pi) (3/4)^{1/3} Gamma(2/3)^2`.
pub fn kappa_closed_form() -> f64 {
    (0.75f64).cbrt() * gamma(2.0 / 3.0).powi(2) / PI
}

/// Probability above the turning point per `|N|^2`.
pub fn forbidden_probability(scales: &GravityScales, method: ProbabilityMethod) -> Result<f64> {
    let integral = match method {
        ProbabilityMethod::ClosedForm => forbidden_integral_closed_form(),
        ProbabilityMethod::Quadrature => forbidden_integral_quadrature()?,
    };
    Ok(scales.a / (3.0 * PI * PI) * integral)
}

/// Incident probability current per `|N|^2`, from the up-moving part of
/// `Ai(-z)` evaluated deep in the allowed region.
pub fn incident_flux(scales: &GravityScales, state: &ScatteringState) -> Result<f64> {
    let mut values = FLUX_DEPTHS.iter().map(|&z| {
        let (u, du) = airy_incident_wave(z, scales.a);
        current_density(u, du, state)
    });
    let first = values.next().unwrap_or(f64::NAN);
    for other in values {
        if (other - first).abs() > 1e-9 * first.abs() {
            return Err(Error::Inconsistent(format!("incident flux varies with depth: {first:e} vs {other:e}")));
        }
    }
    Ok(first)
}

/// Dwell time `P / j` above the turning point.
pub fn dwell_time(scales: &GravityScales, state: &ScatteringState, g: f64, method: ProbabilityMethod) -> Result<DwellResult> {
    let probability = forbidden_probability(scales, method)?;
    let flux = incident_flux(scales, state)?;
    let dwell = probability / flux;
    let kappa = dwell / gravity_time_scale(state.units, state.particle, g)?;
    Ok(DwellResult { probability, flux, dwell_time: dwell, kappa })
}
