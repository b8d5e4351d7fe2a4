//! The three reflecting potentials, stationary-state kinematics and classical
//! reference times.

use crate::error::{ensure_positive, Error, Result};
use crate::units::{ParticleSpec, UnitSystem};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential {
    /// `V = 0` for `x < 0`, `V = v0` for `x >= 0`.
    Step { v0: f64 },
    /// `V = alpha * exp(beta x)`.
    Exponential { alpha: f64, beta: f64 },
    /// `V = m_g g x`.
    LinearGravity { m_g: f64, g: f64 },
}

impl Potential {
    pub fn step(v0: f64) -> Result<Self> {
        ensure_positive("step height", v0)?;
        Ok(Potential::Step { v0 })
    }

    pub fn exponential(alpha: f64, beta: f64) -> Result<Self> {
        ensure_positive("alpha", alpha)?;
        ensure_positive("beta", beta)?;
        Ok(Potential::Exponential { alpha, beta })
    }

    pub fn linear_gravity(m_g: f64, g: f64) -> Result<Self> {
        ensure_positive("gravitational mass", m_g)?;
        ensure_positive("g", g)?;
        Ok(Potential::LinearGravity { m_g, g })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Potential::Step { .. } => "step",
            Potential::Exponential { .. } => "exponential",
            Potential::LinearGravity { .. } => "gravity",
        }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        match *self {
            Potential::Step { v0 } => {
                if x < 0.0 {
                    0.0
                } else {
                    v0
                }
            }
            Potential::Exponential { alpha, beta } => alpha * (beta * x).exp(),
            Potential::LinearGravity { m_g, g } => m_g * g * x,
        }
    }

    /// Where a classical particle of this energy turns around, if it does.
    pub fn classical_turning_point(&self, state: &ScatteringState) -> Option<f64> {
        let e = state.energy;
        match *self {
            Potential::Step { v0 } => (e < v0).then_some(0.0),
            Potential::Exponential { alpha, beta } => Some((e / alpha).ln() / beta),
            Potential::LinearGravity { m_g, g } => Some(e / (m_g * g)),
        }
    }

    /// Classical out-and-back time for a particle launched toward the
    /// barrier from `x = -x_launch`.
    ///
    /// Step: `2X/v`. Exponential: `2X/v + (2/(beta v)) ln(4E/alpha)`, exact
    /// up to terms of order `exp(-beta (X + x_t))`. Gravity:
    /// `2 sqrt(2 m_i d / (m_g g))` with `d = b + X`, i.e. `2 sqrt(2 d / g)`
    /// when inertial and gravitational mass agree.
    pub fn classical_round_trip(&self, state: &ScatteringState, x_launch: f64) -> Result<f64> {
        if !(x_launch.is_finite() && x_launch >= 0.0) {
            return Err(Error::Domain(format!("launch distance must be >= 0, got {x_launch}")));
        }
        let v = state.v;
        match *self {
            Potential::Step { v0 } => {
                if state.energy >= v0 {
                    return Err(Error::Domain(format!(
                        "step reflection needs E < V0 (E = {}, V0 = {v0})",
                        state.energy
                    )));
                }
                Ok(2.0 * x_launch / v)
            }
            Potential::Exponential { alpha, beta } => {
                Ok(2.0 * x_launch / v + 2.0 / (beta * v) * (4.0 * state.energy / alpha).ln())
            }
            Potential::LinearGravity { m_g, g } => {
                let d = state.energy / (m_g * g) + x_launch;
                let m_i = state.particle.m_inertial();
                Ok(2.0 * (2.0 * m_i * d / (m_g * g)).sqrt())
            }
        }
    }

    pub(crate) fn check_particle(&self, particle: &ParticleSpec) -> Result<()> {
        if let Potential::LinearGravity { m_g, .. } = *self {
            if (m_g - particle.m_grav()).abs() > 1e-12 * m_g {
                return Err(Error::Domain(format!(
                    "potential uses m_g = {m_g} but particle has m_g = {}",
                    particle.m_grav()
                )));
            }
        }
        Ok(())
    }
}

/// Any potential the stationary-state integrator can sample.
pub trait Samplable {
    fn energy_at(&self, x: f64) -> f64;

    /// Points where the potential jumps; the integrator puts grid nodes there.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }
}

impl Samplable for Potential {
    fn energy_at(&self, x: f64) -> f64 {
        self.evaluate(x)
    }

    fn breakpoints(&self) -> Vec<f64> {
        match self {
            Potential::Step { .. } => vec![0.0],
            _ => Vec::new(),
        }
    }
}

/// A samplable potential given by a closure, e.g. `V = 0` for free motion.
pub struct FnPotential<F: Fn(f64) -> f64>(pub F);

impl<F: Fn(f64) -> f64> Samplable for FnPotential<F> {
    fn energy_at(&self, x: f64) -> f64 {
        (self.0)(x)
    }
}

/// Incident energy with its asymptotic wavenumber and speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringState {
    pub energy: f64,
    /// `sqrt(2 m_i E) / hbar`
    pub k: f64,
    /// `hbar k / m_i`
    pub v: f64,
    /// Evanescent decay rate under a step, `sqrt(2 m_i (V0 - E)) / hbar`.
    pub p: Option<f64>,
    pub particle: ParticleSpec,
    pub units: UnitSystem,
}

impl ScatteringState {
    pub fn new(energy: f64, particle: ParticleSpec, units: UnitSystem) -> Result<Self> {
        ensure_positive("energy", energy)?;
        let m = particle.m_inertial();
        let hbar = units.hbar();
        let k = (2.0 * m * energy).sqrt() / hbar;
        Ok(Self { energy, k, v: hbar * k / m, p: None, particle, units })
    }

    /// State set up for a particular potential; fills `p` below a step.
    pub fn for_potential(energy: f64, particle: ParticleSpec, units: UnitSystem, pot: &Potential) -> Result<Self> {
        pot.check_particle(&particle)?;
        let mut s = Self::new(energy, particle, units)?;
        if let Potential::Step { v0 } = *pot {
            if energy < v0 {
                s.p = Some(s.decay_rate(v0));
            }
        }
        Ok(s)
    }

    pub fn hbar(&self) -> f64 {
        self.units.hbar()
    }

    pub fn mass(&self) -> f64 {
        self.particle.m_inertial()
    }

    /// `sqrt(2 m_i (V - E)) / hbar` for a barrier of height `V > E`.
    pub fn decay_rate(&self, barrier: f64) -> f64 {
        (2.0 * self.mass() * (barrier - self.energy)).sqrt() / self.hbar()
    }

    /// Same particle at another energy; `p` is not carried over.
    pub fn with_energy(&self, energy: f64) -> Result<Self> {
        Self::new(energy, self.particle, self.units)
    }
}
