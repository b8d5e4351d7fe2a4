//! Reflection phase of the three model potentials by direct integration,
//! with a grid-refinement check.

use super::extract::{extract_phase_with, nearest_branch, AiryWaves, ExtractedPhase, PlaneWaves};
use super::integrate::{integrate_stationary, MIN_STEPS};
use crate::error::{Error, Result};
use crate::potentials::{Potential, ScatteringState};
use crate::units::GravityScales;
use std::f64::consts::PI;

/// Evanescent attenuation `int kappa dx` between the turning point and the seed.
pub const SEED_ATTENUATION: f64 = 20.0;
/// Largest accepted change of the phase when the step count doubles.
pub const REFINEMENT_TOLERANCE: f64 = 1e-6;
/// Periods in the plane-wave fitting window.
const WINDOW_PERIODS: f64 = 10.0;
/// Gravity fitting window in depth `z`.
pub const GRAVITY_WINDOW_Z: (f64, f64) = (20.0, 31.0);
/// Target `k_local * h` for the automatic step count.
const STEP_PHASE: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratedPhase {
    /// Result on the finer grid.
    pub phase: ExtractedPhase,
    /// `|phase(2N) - phase(N)|`.
    pub refinement_change: f64,
    /// Step count of the finer grid.
    pub steps: usize,
}

struct Plan {
    x_start: f64,
    x_end: f64,
    window: (f64, f64),
    steps: usize,
}

fn steps_for(span: f64, kmax: f64) -> usize {
    ((span * kmax / STEP_PHASE).ceil() as usize).max(MIN_STEPS)
}

/// `w` solving `(2k/beta)(w - atan w) = target`.
fn exp_seed_w(k: f64, beta: f64, target: f64) -> f64 {
    let f = |w: f64| 2.0 * k / beta * (w - w.atan()) - target;
    let (mut lo, mut hi) = (0.0, 1.0);
    while f(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn plan(pot: &Potential, state: &ScatteringState) -> Result<Plan> {
    let k = state.k;
    let free_window = WINDOW_PERIODS * 2.0 * PI / k;
    match *pot {
        Potential::Step { v0 } => {
            if state.energy >= v0 {
                return Err(Error::Domain(format!("step reflection needs E < V0 (E = {}, V0 = {v0})", state.energy)));
            }
            let p = state.decay_rate(v0);
            let x_start = SEED_ATTENUATION / p;
            let x_end = -free_window;
            Ok(Plan { x_start, x_end, window: (x_end, 0.0), steps: steps_for(x_start - x_end, k.max(p)) })
        }
        Potential::Exponential { alpha, beta } => {
            let xt = (state.energy / alpha).ln() / beta;
            let w = exp_seed_w(k, beta, SEED_ATTENUATION);
            let x_start = xt + (1.0 + w * w).ln() / beta;
            // alpha e^{beta x} / E below 1e-10 inside the window
            let hi = xt - 23.0 / beta;
            let x_end = hi - free_window;
            Ok(Plan { x_start, x_end, window: (x_end, hi), steps: steps_for(x_start - x_end, k * w.max(1.0)) })
        }
        Potential::LinearGravity { g, .. } => {
            pot.check_particle(&state.particle)?;
            let sc = GravityScales::new(state.units, state.particle, g, state.energy)?;
            let z_seed = (1.5 * SEED_ATTENUATION).powf(2.0 / 3.0);
            let x_start = sc.b + z_seed * sc.a;
            let (z_lo, z_hi) = GRAVITY_WINDOW_Z;
            let x_end = sc.b - z_hi * sc.a;
            let kmax = z_hi.max(z_seed).sqrt() / sc.a;
            Ok(Plan {
                x_start,
                x_end,
                window: (x_end, sc.b - z_lo * sc.a),
                steps: steps_for(x_start - x_end, kmax),
            })
        }
    }
}

fn run(pot: &Potential, state: &ScatteringState, plan: &Plan, steps: usize, probe: f64) -> Result<ExtractedPhase> {
    let samples = integrate_stationary(pot, state, plan.x_start, plan.x_end, steps)?;
    match *pot {
        Potential::LinearGravity { g, .. } => {
            let sc = GravityScales::new(state.units, state.particle, g, state.energy)?;
            extract_phase_with(&samples, &AiryWaves { a: sc.a, b: sc.b }, plan.window, probe)
        }
        _ => extract_phase_with(&samples, &PlaneWaves { k: state.k }, plan.window, probe),
    }
}

/// `arg(reflected) - arg(incident)` at `x = -x_probe`, from integrating the
/// Schrödinger equation out of the forbidden region and fitting the
/// asymptotic waves (plane waves for the step and the exponential wall, the
/// travelling Airy components for gravity).
///
/// The value is a principal branch; compare modulo `2 pi`. Runs at `N` and
/// `2N` steps and fails with [`Error::NonConvergence`] if they differ by more
/// than `1e-6` rad.
pub fn integrated_reflection_phase(pot: &Potential, state: &ScatteringState, x_probe: f64) -> Result<IntegratedPhase> {
    let plan = plan(pot, state)?;
    let probe = -x_probe;
    let coarse = run(pot, state, &plan, plan.steps, probe)?;
    let fine = run(pot, state, &plan, 2 * plan.steps, probe)?;
    let change = (nearest_branch(fine.delta_theta, coarse.delta_theta) - coarse.delta_theta).abs();
    if change > REFINEMENT_TOLERANCE {
        return Err(Error::NonConvergence(format!(
            "phase moved by {change:e} rad when the grid was halved ({} -> {} steps)",
            plan.steps,
            2 * plan.steps
        )));
    }
    Ok(IntegratedPhase { phase: fine, refinement_change: change, steps: 2 * plan.steps })
}
