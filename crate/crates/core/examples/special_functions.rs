//! The special functions behind the closed forms, evaluated at a few points.

use peres_clock::specfun::{
    airy_ai, airy_oscillatory, bessel_j_third, digamma_complex, gamma_complex, macdonald_imag_order, ComplexValue,
    ThirdOrder,
};

fn main() -> peres_clock::Result<()> {
    println!("Ai via Bessel J(+-1/3) at negative argument:");
    for z in [0.5, 2.0, 7.0] {
        let zeta = 2.0 / 3.0 * f64::powf(z, 1.5);
        let via_j = z.sqrt() / 3.0 * (bessel_j_third(ThirdOrder::Plus, zeta)? + bessel_j_third(ThirdOrder::Minus, zeta)?);
        println!("  z = {z:<4} Ai(-z) = {:>14.10}  from J: {via_j:>14.10}", airy_ai(-z));
    }
    let w = airy_oscillatory(15.0);
    println!("Ai, Bi at -15: {:.10} {:.10}", w.ai, w.bi);

    println!("K_(i nu)(x):");
    for (nu, x) in [(0.5, 0.1), (2.0, 1.0), (10.0, 3.0)] {
        println!("  nu = {nu:<4} x = {x:<4} {:.10e}", macdonald_imag_order(nu, x)?);
    }

    let z = ComplexValue::new(0.0, 1.0);
    println!("Gamma(i) = {:.10}", gamma_complex(z));
    println!("psi(i)   = {:.10}", digamma_complex(z));
    Ok(())
}
