//! Classical out-and-back time by quadrature of `2 int dx / v(x)`.

use super::quadrature::{gauss_kronrod_adaptive, QuadOptions};
use crate::error::{Error, Result};
use crate::potentials::{Samplable, ScatteringState};

/// Round trip from `x = -x_launch` to the turning point and back.
///
/// The turning point `x_t` is bracketed by doubling and bisected to the last
/// representable point where `V < E`. With `x = x_t - s^2` the integrand
/// becomes `4 s / v(x)`, which stays finite at the turning point.
/// Needs a potential that rises monotonically to the right of the launch point.
pub fn classical_trajectory_time(pot: &impl Samplable, state: &ScatteringState, x_launch: f64) -> Result<f64> {
    let e = state.energy;
    let x0 = -x_launch;
    if !(x0.is_finite()) || pot.energy_at(x0) >= e {
        return Err(Error::Domain(format!("particle cannot start at x = {x0}: V >= E there")));
    }
    let mut width = x_launch.abs().max(1.0);
    let mut hi = x0 + width;
    let mut tries = 0;
    while pot.energy_at(hi) < e {
        width *= 2.0;
        hi = x0 + width;
        tries += 1;
        if tries > 200 || !hi.is_finite() {
            return Err(Error::Domain("no classical turning point".into()));
        }
    }
    let mut lo = x0;
    while hi - lo > 4.0 * f64::EPSILON * hi.abs().max(lo.abs()).max(f64::MIN_POSITIVE) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pot.energy_at(mid) < e {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let xt = lo;
    let m = state.mass();
    let speed = |x: f64| (2.0 * (e - pot.energy_at(x)).max(0.0) / m).sqrt();
    let s_max = (xt - x0).sqrt();
    let integrand = |s: f64| {
        let v = speed(xt - s * s);
        if v > 0.0 {
            4.0 * s / v
        } else {
            0.0
        }
    };
    let opts = QuadOptions { abs_tol: 0.0, rel_tol: 1e-12, max_intervals: 20_000 };
    Ok(gauss_kronrod_adaptive(integrand, 0.0, s_max, &opts)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{FnPotential, Potential};
    use crate::units::{ParticleSpec, UnitSystem};

    fn state(e: f64, mi: f64, mg: f64) -> ScatteringState {
        ScatteringState::new(e, ParticleSpec::new(mi, mg).unwrap(), UnitSystem::natural()).unwrap()
    }

    #[test]
    fn gravity_round_trip() {
        let pot = Potential::linear_gravity(1.0, 1.0).unwrap();
        let t = classical_trajectory_time(&pot, &state(1.0, 1.0, 1.0), 1.0).unwrap();
        assert!((t - 4.0).abs() < 1e-8 * 4.0, "{t}");
        for (mi, mg, g, e, x) in [(2.0, 0.5, 1.3, 0.7, 3.0), (0.1, 3.0, 9.81, 2.0, 0.2)] {
            let pot = Potential::linear_gravity(mg, g).unwrap();
            let st = state(e, mi, mg);
            let t = classical_trajectory_time(&pot, &st, x).unwrap();
            let closed = pot.classical_round_trip(&st, x).unwrap();
            assert!((t - closed).abs() < 1e-8 * closed);
        }
    }

    #[test]
    fn step_free_segment() {
        // d = sqrt2 at v = sqrt2 gives 2
        let pot = Potential::step(5.0).unwrap();
        let t = classical_trajectory_time(&pot, &state(1.0, 1.0, 1.0), 2f64.sqrt()).unwrap();
        assert!((t - 2.0).abs() < 1e-8);
    }

    #[test]
    fn exponential_approaches_ballistic_form() {
        let e = std::f64::consts::E.powi(2);
        let pot = Potential::exponential(1.0, 2.0).unwrap();
        let st = state(e, 1.0, 1.0);
        let mut prev = f64::INFINITY;
        for x in [3.0, 6.0, 12.0] {
            let t = classical_trajectory_time(&pot, &st, x).unwrap();
            let closed = pot.classical_round_trip(&st, x).unwrap();
            let gap = (t - closed).abs();
            assert!(gap < prev);
            prev = gap;
        }
        assert!(prev < 1e-8);
    }

    #[test]
    fn no_turning_point() {
        let free = FnPotential(|_| 0.0);
        assert!(classical_trajectory_time(&free, &state(1.0, 1.0, 1.0), 1.0).is_err());
        let pot = Potential::step(0.5).unwrap();
        assert!(classical_trajectory_time(&pot, &state(1.0, 1.0, 1.0), 1.0).is_err());
    }
}
