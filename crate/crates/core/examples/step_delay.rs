//! Reflection phase and clock reading for a square step, across E / V0.

use peres_clock::clock::step_clock;
use peres_clock::phases::step_phase;
use peres_clock::{ParticleSpec, ScatteringState, UnitSystem};

fn main() -> peres_clock::Result<()> {
    let v0 = 1.0;
    let x = 2.0;
    println!("{:>6} {:>12} {:>12} {:>12} {:>12}", "E/V0", "theta", "dT_total", "2X/v", "delay");
    for i in 1..10 {
        let e = 0.1 * i as f64;
        let st = ScatteringState::new(e, ParticleSpec::universal(1.0)?, UnitSystem::natural())?;
        let th = step_phase(&st, v0, x)?;
        let t = step_clock(&st, v0, x)?;
        println!(
            "{:>6.2} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            e / v0,
            th.total,
            t.dt_total,
            t.dt_classical.unwrap(),
            t.dt_quantum.unwrap()
        );
    }
    Ok(())
}
