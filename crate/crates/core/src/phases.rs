//! Phase difference between the reflected and incident waves at the probe.
//!
//! Every phase here is a smooth function of energy: branches are fixed by
//! continuity from an anchored limit (E -> 0 for the step, k -> 0 for the
//! exponential, z -> 0 near the gravitational turning point), never by a
//! principal value. The clock differentiates these phases, so constant
//! offsets are immaterial but 2π jumps are not.

use crate::error::{Error, Result};
use crate::potentials::ScatteringState;
use crate::specfun::{airy_oscillatory, bessel_j_frac, gamma, ln_gamma_complex, EULER_GAMMA};
use crate::units::GravityScales;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Smallest `z = (b + X)/a` at which the far-field gravity forms are accepted.
pub const FAR_FIELD_MIN_Z: f64 = 10.0;

/// Constant in the large-beta form of the exponential-wall phase,
/// `phi ~ -arctan(beta / (2 k C))`. Fitting the exact phase as k -> 0 gives
/// the Euler–Mascheroni constant (see the `large_beta_constant_is_euler_gamma` test).
pub const LARGE_BETA_PHASE_CONSTANT: f64 = EULER_GAMMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseRegime {
    Step,
    Exponential,
    GravityFarField,
    GravityNearTurning,
    /// Exact standing-wave split of the Airy function (any depth).
    GravityExact,
}

impl PhaseRegime {
    pub fn name(self) -> &'static str {
        match self {
            PhaseRegime::Step => "step",
            PhaseRegime::Exponential => "exponential",
            PhaseRegime::GravityFarField => "gravity_far_field",
            PhaseRegime::GravityNearTurning => "gravity_near_turning",
            PhaseRegime::GravityExact => "gravity_exact",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseResult {
    /// `propagation + reflection`, radians.
    pub total: f64,
    /// Travel term such as `2 k d`.
    pub propagation: f64,
    /// Amplitude-argument term.
    pub reflection: f64,
    pub regime: PhaseRegime,
}

impl PhaseResult {
    fn new(propagation: f64, reflection: f64, regime: PhaseRegime) -> Self {
        Self { total: propagation + reflection, propagation, reflection, regime }
    }

    /// The same phase shifted by a constant.
    pub fn offset(self, delta: f64) -> Self {
        Self::new(self.propagation, self.reflection + delta, self.regime)
    }
}

/// Reflection amplitude `A` in `u = e^{ikx} + A e^{-ikx}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionAmplitude {
    pub value: Complex64,
}

fn step_decay(state: &ScatteringState, v0: f64) -> Result<f64> {
    if !(v0.is_finite() && v0 > 0.0) {
        return Err(Error::Domain(format!("step height must be positive, got {v0}")));
    }
    if state.energy >= v0 {
        return Err(Error::Domain(format!(
            "step reflection needs E < V0 (E = {}, V0 = {v0})",
            state.energy
        )));
    }
    Ok(state.decay_rate(v0))
}

/// `A = -(p + ik)/(p - ik)`, matching `u` and `u'` at the step edge.
pub fn step_amplitude(state: &ScatteringState, v0: f64) -> Result<ReflectionAmplitude> {
    let p = step_decay(state, v0)?;
    let num = Complex64::new(p, state.k);
    let den = Complex64::new(p, -state.k);
    Ok(ReflectionAmplitude { value: -num / den })
}

/// Step phase at distance `d` in front of the step: `2 k d + arg A`, with
/// `arg A` continued from `pi` at `E -> 0` so it runs over `[pi, 2 pi)`.
pub fn step_phase(state: &ScatteringState, v0: f64, d: f64) -> Result<PhaseResult> {
    if !(d.is_finite() && d >= 0.0) {
        return Err(Error::Domain(format!("probe distance must be >= 0, got {d}")));
    }
    let a = step_amplitude(state, v0)?.value;
    let principal = a.im.atan2(a.re);
    let reflection = (principal - PI).rem_euclid(2.0 * PI) + PI;
    Ok(PhaseResult::new(2.0 * state.k * d, reflection, PhaseRegime::Step))
}

/// Continuous branch of `phi = arg(1 / Gamma(i nu))`, equal to `-arg Gamma(i nu)`.
///
/// Tends to `pi/2` as `nu -> 0+`.
pub fn exp_reflection_phi(nu: f64) -> f64 {
    -ln_gamma_complex(Complex64::new(0.0, nu)).im
}

fn check_exp(alpha: f64, beta: f64, x: f64) -> Result<()> {
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::Domain(format!("probe distance must be >= 0, got {x}")));
    }
    Ok(())
}

/// Exponential-wall phase at `x = -X`:
/// `2 k X - 2 phi - (2k/beta) ln(2 m alpha / (hbar^2 beta^2))`,
/// with `phi` the continuous branch of `arg(1/Gamma(2ik/beta))`.
///
/// Only meaningful where `alpha exp(-beta X) << E`, i.e. the probe sits in
/// the asymptotically free region.
pub fn exp_phase(state: &ScatteringState, alpha: f64, beta: f64, x_probe: f64) -> Result<PhaseResult> {
    check_exp(alpha, beta, x_probe)?;
    let k = state.k;
    let nu = 2.0 * k / beta;
    let hbar = state.hbar();
    let log_arg = 2.0 * state.mass() * alpha / (hbar * hbar * beta * beta);
    let reflection = -2.0 * exp_reflection_phi(nu) - 2.0 * k / beta * log_arg.ln();
    Ok(PhaseResult::new(2.0 * k * x_probe, reflection, PhaseRegime::Exponential))
}

/// Far-field gravity phase `2(zeta + pi/4)` with `zeta = (2/3) z^{3/2}`,
/// `z = (b + X)/a`; no regime check.
pub fn gravity_phase_far_formula(scales: &GravityScales, x_probe: f64) -> Result<PhaseResult> {
    let z = scales.depth(x_probe);
    if !(z.is_finite() && z >= 0.0) {
        return Err(Error::Domain(format!("probe must lie below the turning point, z = {z}")));
    }
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    Ok(PhaseResult::new(2.0 * zeta, FRAC_PI_2, PhaseRegime::GravityFarField))
}

/// Far-field gravity phase, accepted only for `z >= FAR_FIELD_MIN_Z`.
pub fn gravity_phase_far(scales: &GravityScales, x_probe: f64) -> Result<PhaseResult> {
    let z = scales.depth(x_probe);
    if !(z >= FAR_FIELD_MIN_Z) {
        return Err(Error::Regime(format!(
            "far-field phase needs z = (b + X)/a >= {FAR_FIELD_MIN_Z}, got z = {z:.6}"
        )));
    }
    gravity_phase_far_formula(scales, x_probe)
}

fn near_coefficients() -> (f64, f64) {
    (3f64.powf(2.0 / 3.0) * gamma(2.0 / 3.0), 3f64.powf(4.0 / 3.0) * gamma(4.0 / 3.0))
}

/// Small-`z` phase from the leading terms of `J_{±1/3}`:
/// `arctan(2 sqrt3 (P z - Q)/(P z + Q))` with `P = 3^{2/3} Gamma(2/3)`,
/// `Q = 3^{4/3} Gamma(4/3)`. Intended for `z` up to about 0.5.
///
/// The denominator stays positive for `z >= 0`, so the principal arctan is
/// already the branch continuous from `z = 0`.
pub fn gravity_phase_near(z: f64) -> Result<PhaseResult> {
    if !(z.is_finite() && z >= 0.0) {
        return Err(Error::Domain(format!("near-turning phase needs z >= 0, got {z}")));
    }
    let (p, q) = near_coefficients();
    let total = (2.0 * 3f64.sqrt() * (p * z - q) / (p * z + q)).atan();
    Ok(PhaseResult::new(0.0, total, PhaseRegime::GravityNearTurning))
}

/// The near-turning phase with the full Bessel functions in place of their
/// leading terms: `arctan(2 sqrt3 (J_{1/3} - J_{-1/3})/(J_{1/3} + J_{-1/3}))`
/// at `zeta = (2/3) z^{3/2}`. Valid below the first Airy zero, `z < 2.33`.
pub fn gravity_phase_near_bessel(z: f64) -> Result<PhaseResult> {
    if !(z.is_finite() && z >= 0.0) {
        return Err(Error::Domain(format!("near-turning phase needs z >= 0, got {z}")));
    }
    if z == 0.0 {
        return gravity_phase_near(0.0);
    }
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let jp = bessel_j_frac(1.0 / 3.0, zeta)?;
    let jm = bessel_j_frac(-1.0 / 3.0, zeta)?;
    let total = (2.0 * 3f64.sqrt() * (jp - jm) / (jp + jm)).atan();
    Ok(PhaseResult::new(0.0, total, PhaseRegime::GravityNearTurning))
}

/// Reflected (down-moving) part of `Ai(-z)`: `(Ai(-z) - i Bi(-z)) / 2`.
/// Its conjugate is the incident part; the two sum to `Ai(-z)`.
pub fn airy_reflected_wave(z: f64) -> Complex64 {
    let a = airy_oscillatory(z);
    Complex64::new(a.ai, -a.bi) * 0.5
}

/// Incident part of `Ai(-z)` and its derivative with respect to `x`, where
/// `z = (b - x)/a`.
pub fn airy_incident_wave(z: f64, a: f64) -> (Complex64, Complex64) {
    let w = airy_oscillatory(z);
    let value = Complex64::new(w.ai, w.bi) * 0.5;
    // d/dx = -(1/a) d/dz and d/dz [Ai(-z)] = -Ai'(-z)
    let derivative = Complex64::new(w.ai_prime, w.bi_prime) * (0.5 / a);
    (value, derivative)
}

/// Continuous `arg` of [`airy_reflected_wave`], equal to `-pi/3` at `z = 0`
/// and approaching `zeta - pi/4` as `z` grows.
pub fn airy_reflected_arg(z: f64) -> f64 {
    let a = airy_oscillatory(z);
    let principal = (-a.bi).atan2(a.ai);
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let guide = zeta - FRAC_PI_4;
    principal + 2.0 * PI * ((guide - principal) / (2.0 * PI)).round()
}

/// Exact gravity phase from the standing-wave split of `Ai`, at any depth
/// `z >= 0`: `2 arg R(z) + pi`.
///
/// The `+ pi` aligns it with the far-field convention `2 zeta + pi/2`: that
/// form reads the phases off the exponentials `e^{±i(zeta + pi/4)}` and drops
/// the `∓i/2` prefactors of the sine decomposition, a constant offset of `pi`
/// with no effect on the clock.
pub fn gravity_phase_exact(z: f64) -> Result<PhaseResult> {
    if !(z.is_finite() && z >= 0.0) {
        return Err(Error::Domain(format!("gravity phase needs z >= 0, got {z}")));
    }
    let total = 2.0 * airy_reflected_arg(z) + PI;
    let propagation = 4.0 / 3.0 * z.powf(1.5);
    Ok(PhaseResult::new(propagation, total - propagation, PhaseRegime::GravityExact))
}

/// Probability current `(hbar / m) Im(u* u')` of a sampled wave.
pub fn current_density(value: Complex64, derivative: Complex64, state: &ScatteringState) -> f64 {
    state.hbar() / state.mass() * (value.conj() * derivative).im
}
