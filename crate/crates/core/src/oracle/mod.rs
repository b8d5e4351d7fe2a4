//! Independent numerical machinery used to check the closed forms.
//!
//! Nothing here calls into the analytic phase or clock formulas, except where
//! a test or the verify command compares the two.

pub mod classical;
pub mod extract;
pub mod frame;
pub mod integrate;
pub mod quadrature;
pub mod reflection;

pub use classical::classical_trajectory_time;
pub use extract::{extract_phase, extract_phase_with, zero_crossings, AiryWaves, ExtractedPhase, PlaneWaves, ReferenceWaves};
pub use frame::accelerated_frame_check;
pub use integrate::{integrate_stationary, WavefunctionSample};
pub use quadrature::{adaptive_quadrature, Domain};
pub use reflection::{integrated_reflection_phase, IntegratedPhase};
