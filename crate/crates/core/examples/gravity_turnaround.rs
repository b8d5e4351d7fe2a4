//! Far-field gravity clock: the same round-trip time for every mass.

use peres_clock::clock::gravity_clock_far;
use peres_clock::{GravityScales, ParticleSpec, ScatteringState, UnitSystem};

fn main() -> peres_clock::Result<()> {
    let units = UnitSystem::natural();
    let g = 1.0;
    let height = 40.0; // b + X, held fixed
    println!("{:>6} {:>10} {:>10} {:>16} {:>16}", "m", "b", "z", "dT", "2 sqrt(2h/g)");
    for m in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let p = ParticleSpec::universal(m)?;
        let e = m * g * 2.0; // turning height b = 2
        let sc = GravityScales::new(units, p, g, e)?;
        let x = height - sc.b;
        let st = ScatteringState::new(e, p, units)?;
        let t = gravity_clock_far(&sc, &st, g, x)?;
        println!(
            "{m:>6} {:>10.4} {:>10.3} {:>16.12} {:>16.12}",
            sc.b,
            sc.depth(x),
            t.dt_total,
            2.0 * (2.0 * height / g).sqrt()
        );
    }
    Ok(())
}
