//! Dwell time above the turning point, from closed form and from quadrature.

use peres_clock::dwell::{dwell_time, forbidden_integral_closed_form, forbidden_integral_quadrature, ProbabilityMethod};
use peres_clock::{GravityScales, ParticleSpec, ScatteringState, UnitSystem};

fn main() -> peres_clock::Result<()> {
    println!("integral closed form  {:.12}", forbidden_integral_closed_form());
    println!("integral quadrature   {:.12}", forbidden_integral_quadrature()?);

    let units = UnitSystem::si();
    let p = ParticleSpec::electron();
    let g = 9.81;
    let e = 1e-30;
    let sc = GravityScales::new(units, p, g, e)?;
    let st = ScatteringState::new(e, p, units)?;
    for method in [ProbabilityMethod::ClosedForm, ProbabilityMethod::Quadrature] {
        let r = dwell_time(&sc, &st, g, method)?;
        println!("{method:?}: a = {:.4} mm, kappa = {:.6}, dwell = {:.4} ms", 1e3 * sc.a, r.kappa, 1e3 * r.dwell_time);
    }
    Ok(())
}
