//! Clock readings `dT = hbar d(dtheta)/dE`.
//!
//! Closed forms are given for every regime; [`peres_dt`] differentiates any
//! phase function numerically and is what the closed forms are tested against.

use crate::error::{Error, Result};
use crate::phases::{self, exp_reflection_phi, FAR_FIELD_MIN_Z};
use crate::potentials::{Potential, ScatteringState};
use crate::specfun::{digamma_complex, gamma, EULER_GAMMA};
use crate::units::{GravityScales, ParticleSpec, UnitSystem};
use num_complex::Complex64;

/// Relative energy step of the central difference in [`peres_dt`].
pub const FD_RELATIVE_STEP: f64 = 1e-6;
/// Largest accepted relative gap between the two Richardson levels.
pub const FD_STABILITY_TOLERANCE: f64 = 1e-4;
/// Upper end of the depth range accepted by [`gravity_clock_near`].
pub const NEAR_TURNING_MAX_Z: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClockMethod {
    Analytic,
    FiniteDifference,
}

impl ClockMethod {
    pub fn name(self) -> &'static str {
        match self {
            ClockMethod::Analytic => "analytic",
            ClockMethod::FiniteDifference => "finite_difference",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClockResult {
    pub dt_total: f64,
    /// Part coming from the propagation phase. `None` for numerical derivatives.
    pub dt_classical: Option<f64>,
    pub dt_quantum: Option<f64>,
    pub method: ClockMethod,
}

impl ClockResult {
    fn analytic(classical: f64, quantum: f64) -> Self {
        Self {
            dt_total: classical + quantum,
            dt_classical: Some(classical),
            dt_quantum: Some(quantum),
            method: ClockMethod::Analytic,
        }
    }

    fn numerical(total: f64) -> Self {
        Self { dt_total: total, dt_classical: None, dt_quantum: None, method: ClockMethod::FiniteDifference }
    }
}

/// `hbar dtheta/dE` by Richardson-extrapolated central differences with
/// steps `h = 1e-6 E` and `h/2`.
///
/// Fails with [`Error::DerivativeInstability`] when the two difference levels
/// disagree by more than `1e-4` relative, which flags a branch jump or a
/// phase too noisy to differentiate.
pub fn peres_dt(phase: impl Fn(f64) -> Result<f64>, energy: f64, hbar: f64) -> Result<ClockResult> {
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::Domain(format!("energy must be positive, got {energy}")));
    }
    let h = FD_RELATIVE_STEP * energy;
    let central = |h: f64| -> Result<f64> { Ok((phase(energy + h)? - phase(energy - h)?) / (2.0 * h)) };
    let coarse = central(h)?;
    let fine = central(h / 2.0)?;
    let scale = coarse.abs().max(fine.abs());
    let relative = if scale > 0.0 { (coarse - fine).abs() / scale } else { 0.0 };
    if !(relative <= FD_STABILITY_TOLERANCE) {
        return Err(Error::DerivativeInstability { coarse, fine, relative });
    }
    Ok(ClockResult::numerical(hbar * (4.0 * fine - coarse) / 3.0))
}

/// Step: `2d/v` plus the delay `hbar / sqrt(E (V0 - E))`.
pub fn step_clock(state: &ScatteringState, v0: f64, d: f64) -> Result<ClockResult> {
    phases::step_phase(state, v0, d)?;
    let e = state.energy;
    Ok(ClockResult::analytic(2.0 * d / state.v, state.hbar() / (e * (v0 - e)).sqrt()))
}

/// Exponential wall, exact in `beta`:
/// `2X/v - (2/(beta v)) ln(2 m alpha/(hbar^2 beta^2)) + (4/(beta v)) Re psi(i nu)`,
/// `nu = 2k/beta`. Split into the classical `2X/v + (2/(beta v)) ln(4E/alpha)`
/// and the quantum remainder `(4/(beta v)) (Re psi(i nu) - ln nu)`.
pub fn exp_clock(state: &ScatteringState, alpha: f64, beta: f64, x_probe: f64) -> Result<ClockResult> {
    phases::exp_phase(state, alpha, beta, x_probe)?;
    let v = state.v;
    let nu = 2.0 * state.k / beta;
    let classical = 2.0 * x_probe / v + 2.0 / (beta * v) * (4.0 * state.energy / alpha).ln();
    let psi = digamma_complex(Complex64::new(0.0, nu)).re;
    Ok(ClockResult::analytic(classical, 4.0 / (beta * v) * (psi - nu.ln())))
}

/// Large-`beta` form of the exponential quantum delay,
/// `(4/(beta v)) (-ln nu - C/(1 + C^2 nu^2))` with `C` the Euler–Mascheroni
/// constant. Accurate to `O(nu^2)` relative to the exact digamma form.
pub fn exp_quantum_delay_large_beta(state: &ScatteringState, beta: f64) -> Result<f64> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let nu = 2.0 * state.k / beta;
    let c = EULER_GAMMA;
    Ok(4.0 / (beta * state.v) * (-nu.ln() - c / (1.0 + c * c * nu * nu)))
}

/// `hbar d(-2 phi)/dE` by numerical differentiation: the part of the
/// exponential clock carried by the argument of `1/Gamma(2ik/beta)`, equal to
/// `(4/(beta v)) Re psi(i nu)`.
pub fn exp_reflection_delay_from_phi(state: &ScatteringState, beta: f64) -> Result<f64> {
    let hbar = state.hbar();
    let shift = |e: f64| -> Result<f64> {
        let s = state.with_energy(e)?;
        Ok(-2.0 * exp_reflection_phi(2.0 * s.k / beta))
    };
    Ok(peres_dt(shift, state.energy, hbar)?.dt_total)
}

fn far_time(scales: &GravityScales, state: &ScatteringState, g: f64, z: f64) -> f64 {
    2.0 * state.hbar() / (state.particle.m_grav() * g * scales.a) * z.sqrt()
}

/// Far-field gravity clock `(2 hbar / (m_g g a)) sqrt(z)` with no regime
/// check. All of it is propagation; the quantum part vanishes identically.
pub fn gravity_clock_far_formula(scales: &GravityScales, state: &ScatteringState, g: f64, x_probe: f64) -> Result<ClockResult> {
    phases::gravity_phase_far_formula(scales, x_probe)?;
    Ok(ClockResult::analytic(far_time(scales, state, g, scales.depth(x_probe)), 0.0))
}

/// Far-field gravity clock; requires `z >= 10`.
pub fn gravity_clock_far(scales: &GravityScales, state: &ScatteringState, g: f64, x_probe: f64) -> Result<ClockResult> {
    phases::gravity_phase_far(scales, x_probe)?;
    gravity_clock_far_formula(scales, state, g, x_probe)
}

/// `4 * 3^{-1/6} Gamma(2/3) / (13 Gamma(4/3))`, the slope of the near-turning
/// phase at `z = 0`.
pub fn near_turning_slope() -> f64 {
    4.0 * 3f64.powf(-1.0 / 6.0) * gamma(2.0 / 3.0) / (13.0 * gamma(4.0 / 3.0))
}

/// Turning-point clock in units of `(hbar m_i / (m_g^2 g^2))^{1/3}`:
/// `2^{1/3}` times [`near_turning_slope`], about 0.4895.
pub fn near_turning_coefficient() -> f64 {
    2f64.cbrt() * near_turning_slope()
}

/// `(hbar m_i / (m_g^2 g^2))^{1/3}`, the natural gravitational time scale.
pub fn gravity_time_scale(units: UnitSystem, particle: ParticleSpec, g: f64) -> Result<f64> {
    if !(g.is_finite() && g > 0.0) {
        return Err(Error::Domain(format!("gravitational acceleration must be positive, got {g}")));
    }
    Ok((units.hbar() * particle.m_inertial() / (particle.m_grav() * g).powi(2)).cbrt())
}

/// Clock probed close to the turning point, from the derivative of
/// [`phases::gravity_phase_near`] at the probe depth. With the probe exactly
/// at the turning point (`X = -b`) this is `near_turning_coefficient()` times
/// the gravitational time scale, independent of energy.
pub fn gravity_clock_near(scales: &GravityScales, state: &ScatteringState, g: f64, x_probe: f64) -> Result<ClockResult> {
    let z = scales.depth(x_probe);
    let z = if z.abs() < 1e-12 { 0.0 } else { z };
    if !(z >= 0.0) {
        return Err(Error::Domain(format!("probe lies above the turning point, z = {z}")));
    }
    if z > NEAR_TURNING_MAX_Z {
        return Err(Error::Regime(format!(
            "near-turning phase needs z = (b + X)/a <= {NEAR_TURNING_MAX_Z}, got z = {z:.6}"
        )));
    }
    let p = 3f64.powf(2.0 / 3.0) * gamma(2.0 / 3.0);
    let q = 3f64.powf(4.0 / 3.0) * gamma(4.0 / 3.0);
    let f = (p * z - q) / (p * z + q);
    let df = 2.0 * p * q / (p * z + q).powi(2);
    let slope = 2.0 * 3f64.sqrt() * df / (1.0 + 12.0 * f * f);
    let dz_de = 1.0 / (state.particle.m_grav() * g * scales.a);
    Ok(ClockResult::analytic(0.0, state.hbar() * slope * dz_de))
}

/// Clock from the exact Airy phase by numerical differentiation, valid at
/// every depth.
pub fn gravity_clock_exact(state: &ScatteringState, g: f64, x_probe: f64) -> Result<ClockResult> {
    let phase = |e: f64| -> Result<f64> {
        let sc = GravityScales::new(state.units, state.particle, g, e)?;
        Ok(phases::gravity_phase_exact(sc.depth(x_probe))?.total)
    };
    peres_dt(phase, state.energy, state.hbar())
}

/// Far-field clock for a `Potential::LinearGravity`, checked against the
/// particle's gravitational mass.
pub fn gravity_clock_for(pot: &Potential, state: &ScatteringState, x_probe: f64) -> Result<ClockResult> {
    match *pot {
        Potential::LinearGravity { g, .. } => {
            pot.check_particle(&state.particle)?;
            let sc = GravityScales::new(state.units, state.particle, g, state.energy)?;
            gravity_clock_far(&sc, state, g, x_probe)
        }
        _ => Err(Error::Domain(format!("{} is not a gravitational potential", pot.name()))),
    }
}

/// Depth at which the far-field error drops below the threshold.
pub fn far_field_min_depth() -> f64 {
    FAR_FIELD_MIN_Z
}
