//! Bounded Airy standing wave over the turning point, as a coarse text plot.

use peres_clock::specfun::airy_ai;
use peres_clock::{GravityScales, ParticleSpec, UnitSystem};

fn main() -> peres_clock::Result<()> {
    let sc = GravityScales::new(UnitSystem::natural(), ParticleSpec::universal(1.0)?, 1.0, 1.0)?;
    for i in 0..=56 {
        let x = -10.0 + 0.25 * i as f64;
        let u = airy_ai((x - sc.b) / sc.a);
        let col = (30.0 + 50.0 * u).round() as usize;
        let mark = if x > sc.b { '.' } else { '*' };
        println!("{x:>7.2} {:>9.5} {}{}", u, " ".repeat(col), mark);
    }
    Ok(())
}
