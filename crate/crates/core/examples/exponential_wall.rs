//! Soft exponential wall: exact clock split into classical flight plus a
//! positive quantum delay, and how the delay shrinks as the wall stiffens.

use peres_clock::clock::{exp_clock, exp_quantum_delay_large_beta};
use peres_clock::{ParticleSpec, ScatteringState, UnitSystem};

fn main() -> peres_clock::Result<()> {
    let st = ScatteringState::new(1.0, ParticleSpec::universal(1.0)?, UnitSystem::natural())?;
    let (alpha, x) = (1.0, 3.0);
    println!("{:>8} {:>14} {:>14} {:>14} {:>14}", "beta", "dT_total", "classical", "quantum", "large-beta");
    for beta in [0.5, 1.0, 2.0, 5.0, 20.0, 100.0, 1000.0] {
        let t = exp_clock(&st, alpha, beta, x)?;
        let asym = exp_quantum_delay_large_beta(&st, beta)?;
        println!(
            "{beta:>8} {:>14.8} {:>14.8} {:>14.8e} {:>14.8e}",
            t.dt_total,
            t.dt_classical.unwrap(),
            t.dt_quantum.unwrap(),
            asym
        );
    }
    Ok(())
}
