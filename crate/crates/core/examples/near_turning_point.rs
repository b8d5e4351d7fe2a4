//! Clock reading with the probe at the turning point, where it stays finite.

use peres_clock::clock::{gravity_clock_near, gravity_time_scale, near_turning_coefficient};
use peres_clock::{GravityScales, ParticleSpec, ScatteringState, UnitSystem};

fn main() -> peres_clock::Result<()> {
    let units = UnitSystem::si();
    let p = ParticleSpec::electron();
    let g = 9.81;
    let e = 1e-30;
    let sc = GravityScales::new(units, p, g, e)?;
    let st = ScatteringState::new(e, p, units)?;
    let t = gravity_clock_near(&sc, &st, g, -sc.b)?;
    println!("coefficient     {:.7}", near_turning_coefficient());
    println!("time scale      {:.6e} s", gravity_time_scale(units, p, g)?);
    println!("electron clock  {:.4} ms", 1e3 * t.dt_total);
    Ok(())
}
