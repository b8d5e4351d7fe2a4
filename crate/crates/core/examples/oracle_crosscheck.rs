//! Integrate the stationary equation numerically and compare the fitted
//! reflection phase with the closed forms.

use peres_clock::oracle::extract::nearest_branch;
use peres_clock::oracle::{classical_trajectory_time, integrated_reflection_phase};
use peres_clock::phases::{exp_phase, gravity_phase_exact, step_phase};
use peres_clock::{GravityScales, ParticleSpec, Potential, ScatteringState, UnitSystem};

fn main() -> peres_clock::Result<()> {
    let st = ScatteringState::new(1.0, ParticleSpec::universal(1.0)?, UnitSystem::natural())?;

    let step = Potential::step(2.0)?;
    let num = integrated_reflection_phase(&step, &st, 1.0)?;
    let exact = step_phase(&st, 2.0, 1.0)?.total;
    report("step", nearest_branch(num.phase.delta_theta, exact), exact, num.steps);

    let wall = Potential::exponential(1.0, 2.0)?;
    let num = integrated_reflection_phase(&wall, &st, 3.0)?;
    let exact = exp_phase(&st, 1.0, 2.0, 3.0)?.total;
    report("exponential", nearest_branch(num.phase.delta_theta, exact), exact, num.steps);

    // the standing-wave split differs from the far-field convention by pi
    let gravity = Potential::linear_gravity(1.0, 1.0)?;
    let sc = GravityScales::new(st.units, st.particle, 1.0, 1.0)?;
    let x = 25.0 * sc.a - sc.b;
    let num = integrated_reflection_phase(&gravity, &st, x)?;
    let exact = gravity_phase_exact(25.0)?.total;
    report("gravity", nearest_branch(num.phase.delta_theta + std::f64::consts::PI, exact), exact, num.steps);

    let t = classical_trajectory_time(&gravity, &st, x)?;
    let closed = gravity.classical_round_trip(&st, x)?;
    println!("classical flight: quadrature {t:.12}, closed form {closed:.12}");
    Ok(())
}

fn report(name: &str, numeric: f64, analytic: f64, steps: usize) {
    println!("{name:<12} numeric {numeric:>16.10} analytic {analytic:>16.10} gap {:.1e} ({steps} steps)", (numeric - analytic).abs());
}
