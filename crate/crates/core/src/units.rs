//! Unit systems, particle masses and the gravitational length scales.

use crate::error::{ensure_positive, Error, Result};

/// Reduced Planck constant in J s.
pub const HBAR_SI: f64 = 1.054571817e-34;
/// Electron rest mass in kg.
pub const ELECTRON_MASS_KG: f64 = 9.1093837015e-31;
/// Standard surface gravity used for the electron figures, m/s^2.
pub const STANDARD_GRAVITY: f64 = 9.81;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitKind {
    Natural,
    Si,
}

impl UnitKind {
    pub fn name(self) -> &'static str {
        match self {
            UnitKind::Natural => "natural",
            UnitKind::Si => "si",
        }
    }
}

/// A unit system is fully described by its value of hbar; no formula here
/// ever needs the speed of light.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    kind: UnitKind,
    hbar: f64,
}

impl UnitSystem {
    pub fn natural() -> Self {
        Self { kind: UnitKind::Natural, hbar: 1.0 }
    }

    pub fn si() -> Self {
        Self { kind: UnitKind::Si, hbar: HBAR_SI }
    }

    /// Natural units with a rescaled hbar, used to probe the classical limit.
    pub fn with_hbar(hbar: f64) -> Result<Self> {
        ensure_positive("hbar", hbar)?;
        Ok(Self { kind: UnitKind::Natural, hbar })
    }

    pub fn kind(&self) -> UnitKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }
}

/// Inertial and gravitational mass of the particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleSpec {
    m_inertial: f64,
    m_grav: f64,
}

impl ParticleSpec {
    pub fn new(m_inertial: f64, m_grav: f64) -> Result<Self> {
        ensure_positive("inertial mass", m_inertial)?;
        ensure_positive("gravitational mass", m_grav)?;
        Ok(Self { m_inertial, m_grav })
    }

    /// A particle with equal inertial and gravitational mass.
    pub fn universal(mass: f64) -> Result<Self> {
        Self::new(mass, mass)
    }

    pub fn electron() -> Self {
        Self { m_inertial: ELECTRON_MASS_KG, m_grav: ELECTRON_MASS_KG }
    }

    pub fn m_inertial(&self) -> f64 {
        self.m_inertial
    }

    pub fn m_grav(&self) -> f64 {
        self.m_grav
    }

    pub fn is_universal(&self) -> bool {
        self.m_inertial == self.m_grav
    }
}

/// Length scales of the stationary state in a uniform field `g` at energy `E`.
///
/// `a` is the Airy penetration depth `(hbar^2 / (2 m_i m_g g))^(1/3)`, `b` the
/// classical turning height `E / (m_g g)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravityScales {
    pub a: f64,
    pub b: f64,
}

impl GravityScales {
    pub fn new(units: UnitSystem, particle: ParticleSpec, g: f64, energy: f64) -> Result<Self> {
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::Domain(format!("gravitational acceleration must be positive, got {g}")));
        }
        if !(energy.is_finite() && energy > 0.0) {
            return Err(Error::Domain(format!("energy must be positive, got {energy}")));
        }
        let hbar = units.hbar();
        let a = (hbar * hbar / (2.0 * particle.m_inertial() * particle.m_grav() * g)).cbrt();
        let b = energy / (particle.m_grav() * g);
        Ok(Self { a, b })
    }

    /// Dimensionless depth of the probe point `x = -X` below the turning point.
    pub fn depth(&self, x_probe_distance: f64) -> f64 {
        (self.b + x_probe_distance) / self.a
    }
}

/// Convenience wrapper matching the free-function form used by the CLI.
pub fn gravity_scales(units: UnitSystem, particle: ParticleSpec, g: f64, energy: f64) -> Result<GravityScales> {
    GravityScales::new(units, particle, g, energy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn natural_unit_scales() {
        let s = gravity_scales(UnitSystem::natural(), ParticleSpec::universal(1.0).unwrap(), 1.0, 1.0).unwrap();
        assert!(rel(s.a, 0.5_f64.cbrt()) < 1e-15);
        assert!(rel(s.a, 0.7937005259840998) < 1e-12);
        assert_eq!(s.b, 1.0);
    }

    #[test]
    fn distinct_masses() {
        // a^3 = 1 / (2 * 8 * 1 * 1) = 1/16
        let p = ParticleSpec::new(8.0, 1.0).unwrap();
        let s = gravity_scales(UnitSystem::natural(), p, 1.0, 1.0).unwrap();
        assert!(rel(s.a, 0.39685026299204984) < 1e-12);
        assert_eq!(s.b, 1.0);
        assert!(!p.is_universal());
    }

    #[test]
    fn electron_penetration_depth_is_about_a_millimetre() {
        let s = gravity_scales(UnitSystem::si(), ParticleSpec::electron(), STANDARD_GRAVITY, 1e-30).unwrap();
        assert!(s.a > 8.7e-4 && s.a < 8.9e-4, "a = {}", s.a);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = ParticleSpec::universal(1.0).unwrap();
        let u = UnitSystem::natural();
        assert!(matches!(gravity_scales(u, p, 0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(gravity_scales(u, p, 1.0, -1.0), Err(Error::Domain(_))));
        assert!(ParticleSpec::new(0.0, 1.0).is_err());
        assert!(ParticleSpec::new(1.0, f64::INFINITY).is_err());
        assert!(UnitSystem::with_hbar(0.0).is_err());
        assert_eq!(UnitSystem::natural().hbar(), 1.0);
    }

    #[test]
    fn defining_relations_hold() {
        let u = UnitSystem::si();
        let p = ParticleSpec::new(2.0e-27, 3.0e-27).unwrap();
        let (g, e) = (3.7, 4.0e-30);
        let s = gravity_scales(u, p, g, e).unwrap();
        let a3 = u.hbar().powi(2) / (2.0 * p.m_inertial() * p.m_grav() * g);
        assert!(rel(s.a.powi(3), a3) < 1e-12);
        assert!(rel(s.b, e / (p.m_grav() * g)) < 1e-12);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn scaling_with_g(g in 0.1f64..10.0, lambda in 0.1f64..10.0, e in 0.1f64..10.0) {
                let u = UnitSystem::natural();
                let p = ParticleSpec::universal(1.3).unwrap();
                let s1 = gravity_scales(u, p, g, e).unwrap();
                let s2 = gravity_scales(u, p, lambda * g, e).unwrap();
                prop_assert!(((s2.a / s1.a) / lambda.powf(-1.0 / 3.0) - 1.0).abs() < 1e-12);
                prop_assert!(((s2.b / s1.b) * lambda - 1.0).abs() < 1e-12);
            }

            #[test]
            fn depth_depends_on_mass_product(mi in 0.1f64..10.0, mg in 0.1f64..10.0) {
                let u = UnitSystem::natural();
                let s1 = gravity_scales(u, ParticleSpec::new(mi, mg).unwrap(), 2.0, 1.0).unwrap();
                let s2 = gravity_scales(u, ParticleSpec::new(mi * mg, 1.0).unwrap(), 2.0, 1.0).unwrap();
                prop_assert!((s1.a / s2.a - 1.0).abs() < 1e-12);
            }
        }
    }
}
