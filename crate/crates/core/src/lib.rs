//! Quantum-clock traversal times for a particle reflecting from a potential.
//!
//! A model clock coupled to the particle reads the energy derivative of the
//! phase difference between the incident and reflected parts of a stationary
//! scattering state, `dT = hbar * d(dtheta)/dE`. This crate evaluates that
//! phase and the resulting clock times for three one-dimensional potentials:
//!
//! * a square step ([`Potential::Step`]),
//! * an exponential wall ([`Potential::Exponential`]),
//! * a uniform gravitational field ([`Potential::LinearGravity`]).
//!
//! For gravity the far-field clock time coincides with the classical
//! up-and-down flight time for every mass, while a measurement at the turning
//! point sees a mass-dependent tunnelling delay. The [`dwell`] module gives the
//! competing dwell-time estimate, and [`oracle`] holds independent numerical
//! machinery (stationary Schrödinger integration, phase fitting, classical
//! trajectories, quadrature) used to cross-check every closed form.
//!
//! ```
//! use peres_clock::{clock, units::{GravityScales, ParticleSpec, UnitSystem}};
//! use peres_clock::potentials::ScatteringState;
//!
//! let units = UnitSystem::natural();
//! let particle = ParticleSpec::universal(1.0).unwrap();
//! let state = ScatteringState::new(1.0, particle, units).unwrap();
//! let scales = GravityScales::new(units, particle, 1.0, 1.0).unwrap();
//! let t = clock::gravity_clock_far(&scales, &state, 1.0, 20.0).unwrap();
//! assert!((t.dt_total - 2.0 * (2.0_f64 * 21.0).sqrt()).abs() < 1e-12);
//! assert_eq!(t.dt_quantum, Some(0.0));
//! ```

// `!(x > 0.0)` style guards are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod clock;
pub mod dwell;
mod error;
pub mod oracle;
pub mod phases;
pub mod potentials;
pub mod specfun;
pub mod units;

pub use clock::ClockResult;
pub use dwell::DwellResult;
pub use error::{Error, Result};
pub use phases::{PhaseRegime, PhaseResult};
pub use potentials::{Potential, ScatteringState};
pub use units::{GravityScales, ParticleSpec, UnitSystem};

pub use num_complex::Complex64;
