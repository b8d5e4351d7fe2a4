//! Self-contained special-function kernel.
//!
//! Only the orders the gravity and exponential problems need are covered:
//! Airy functions on the real line, Bessel `J` of orders ±1/3 and ±2/3,
//! Macdonald `K` of orders 1/3 and 2/3, `K` of purely imaginary order, and
//! the Gamma family on the complex plane.

mod airy;
mod bessel;
mod gamma;
mod macdonald;

pub use airy::{airy_ai, airy_ai_prime, airy_oscillatory, AiryOscillatory, AI_ZERO, AI_PRIME_ZERO};
pub use bessel::{bessel_j_frac, bessel_j_third, bessel_j_third_prime, bessel_k_third, bessel_k_two_thirds, ThirdOrder};
pub use gamma::{
    digamma_complex, gamma, gamma_complex, ln_gamma_complex, recip_gamma_complex, EULER_GAMMA,
};
pub use macdonald::macdonald_imag_order;

pub use num_complex::Complex64 as ComplexValue;
