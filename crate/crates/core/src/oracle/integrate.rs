//! Classical RK4 integration of the stationary Schrödinger equation
//! `u'' = (2 m_i / hbar^2) (V(x) - E) u`.

use crate::error::{Error, Result};
use crate::potentials::{Samplable, ScatteringState};
use num_complex::Complex64;

/// Fewest steps accepted by [`integrate_stationary`].
pub const MIN_STEPS: usize = 10_000;
const RENORMALIZE_EVERY: usize = 1000;
const RENORMALIZE_ABOVE: f64 = 1e100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionSample {
    pub x: f64,
    pub value: Complex64,
    pub derivative: Complex64,
}

/// Integrates from `x_start` to `x_end` in `steps` equal-ish steps and returns
/// the samples sorted by increasing `x`.
///
/// When `V(x_start) > E` the seed is the decaying evanescent solution
/// (`u = 1`, `u' = -kappa u` for `x_end < x_start`); otherwise it is
/// `u = 0`, `u' = 1`. Jumps reported by [`Samplable::breakpoints`] get a
/// grid node, and each segment sees the potential from its own side.
/// Large amplitudes are rescaled every 1000 steps, which leaves phases alone.
pub fn integrate_stationary(
    pot: &impl Samplable,
    state: &ScatteringState,
    x_start: f64,
    x_end: f64,
    steps: usize,
) -> Result<Vec<WavefunctionSample>> {
    if !(x_start.is_finite() && x_end.is_finite()) || x_start == x_end {
        return Err(Error::Domain(format!("bad integration range [{x_start}, {x_end}]")));
    }
    if steps < MIN_STEPS {
        return Err(Error::Domain(format!("need at least {MIN_STEPS} steps, got {steps}")));
    }
    let c = 2.0 * state.mass() / (state.hbar() * state.hbar());
    let e = state.energy;

    let (lo, hi) = if x_start < x_end { (x_start, x_end) } else { (x_end, x_start) };
    let mut nodes = vec![x_start];
    let mut cuts: Vec<f64> = pot.breakpoints().into_iter().filter(|&b| b > lo && b < hi).collect();
    cuts.sort_by(f64::total_cmp);
    if x_start > x_end {
        cuts.reverse();
    }
    nodes.extend(cuts);
    nodes.push(x_end);

    let total = (x_end - x_start).abs();
    let mut u;
    let mut du;
    let kappa2 = c * (pot.energy_at(x_start) - e);
    let direction = (x_end - x_start).signum();
    if kappa2 > 0.0 {
        u = 1.0;
        // decays away from x_end
        du = direction * kappa2.sqrt();
    } else {
        u = 0.0;
        du = 1.0;
    }

    let mut xs = Vec::with_capacity(steps + nodes.len());
    let mut us = Vec::with_capacity(steps + nodes.len());
    let mut dus = Vec::with_capacity(steps + nodes.len());
    xs.push(x_start);
    us.push(u);
    dus.push(du);

    let mut count = 0usize;
    for seg in nodes.windows(2) {
        let (s0, s1) = (seg[0], seg[1]);
        let n = (((s1 - s0).abs() / total) * steps as f64).ceil().max(1.0) as usize;
        let h = (s1 - s0) / n as f64;
        let mid = 0.5 * (s0 + s1);
        // pull evaluation points a hair toward the segment interior so a jump
        // at either end is seen from this segment's side
        let q = |x: f64| c * (pot.energy_at(x + (mid - x) * 1e-12) - e);
        for i in 0..n {
            let x = s0 + h * i as f64;
            let qa = q(x);
            let qm = q(x + 0.5 * h);
            let qb = q(x + h);
            let (k1u, k1d) = (du, qa * u);
            let (k2u, k2d) = (du + 0.5 * h * k1d, qm * (u + 0.5 * h * k1u));
            let (k3u, k3d) = (du + 0.5 * h * k2d, qm * (u + 0.5 * h * k2u));
            let (k4u, k4d) = (du + h * k3d, qb * (u + h * k3u));
            u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            du += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
            let x_next = if i + 1 == n { s1 } else { s0 + h * (i + 1) as f64 };
            xs.push(x_next);
            us.push(u);
            dus.push(du);
            count += 1;
            if count.is_multiple_of(RENORMALIZE_EVERY) && u.abs().max(du.abs() / (1.0 + qa.abs().sqrt())) > RENORMALIZE_ABOVE {
                let s = 1.0 / u.abs().max(f64::MIN_POSITIVE);
                u *= s;
                du *= s;
                us.iter_mut().for_each(|v| *v *= s);
                dus.iter_mut().for_each(|v| *v *= s);
            }
            if !(u.is_finite() && du.is_finite()) {
                return Err(Error::NonConvergence(format!("wavefunction overflowed near x = {x_next}")));
            }
        }
    }

    let mut out: Vec<WavefunctionSample> = xs
        .into_iter()
        .zip(us)
        .zip(dus)
        .map(|((x, u), du)| WavefunctionSample { x, value: Complex64::new(u, 0.0), derivative: Complex64::new(du, 0.0) })
        .collect();
    if x_start > x_end {
        out.reverse();
    }
    Ok(out)
}
