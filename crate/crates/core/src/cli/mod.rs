//! Command-line front end behind the `peres-clock` binary.
//!
//! Subcommands: `phase`, `clock`, `dwell`, `scan`, `wavefunction`, `verify`.
//! Output is CSV with a header row (default) or JSON Lines with the same keys.
//! Exit status: 0 success, 1 a failed `verify` check, 2 invalid
//! configuration, 3 an error reported by the library (domain, regime or
//! numerical failure).
//!
//! Column order:
//!
//! * `phase`: potential, units, E, X, theta_total, theta_propagation, theta_reflection, regime
//! * `clock`: potential, units, E, X, dT_total, dT_classical, dT_quantum, method
//! * `dwell`: potential, units, E, prob_per_norm2, flux_per_norm2, dwell_time, kappa
//! * `wavefunction`: x, z, psi, forbidden
//! * `verify`: check, value, reference, deviation, tolerance, status
//!
//! `scan` emits `phase` or `clock` rows over `start:stop:count` ranges of E
//! and/or X (E outer), in input order.

mod output;
mod verify;

pub use output::{format_number, Cell, Format, Table};
pub use verify::{verify_table, VERIFY_HEADERS};

use crate::clock::{self, ClockResult};
use crate::dwell::{self, ProbabilityMethod};
use crate::error::Error;
use crate::phases::{self, PhaseResult, FAR_FIELD_MIN_Z};
use crate::potentials::{Potential, ScatteringState};
use crate::specfun::{airy_ai, macdonald_imag_order};
use crate::units::{GravityScales, ParticleSpec, UnitSystem, STANDARD_GRAVITY};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_LIBRARY: i32 = 3;

/// Environment variable capping the worker threads used by `scan` and `verify`.
pub const THREADS_ENV: &str = "PERES_CLOCK_THREADS";

#[derive(Debug, Parser)]
#[command(name = "peres-clock", version, about = "Quantum-clock reflection times for step, exponential and gravitational potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phase difference between reflected and incident waves at the probe.
    Phase(PointArgs),
    /// Clock time hbar d(dtheta)/dE.
    Clock(PointArgs),
    /// Dwell time above the gravitational turning point.
    Dwell(DwellArgs),
    /// Phase or clock over a grid of E and/or X.
    Scan(ScanArgs),
    /// Stationary wavefunction samples.
    Wavefunction(WaveArgs),
    /// Run the built-in cross-checks.
    Verify(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    Step,
    Exponential,
    Gravity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsKind {
    Natural,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParticleKind {
    Electron,
}

/// Which gravity phase to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GravityRegime {
    /// `2 zeta + pi/2`, applied at any depth (warning below z = 10).
    Far,
    /// Small-z expansion around the turning point; probe defaults to the turning point.
    Near,
    /// Standing-wave split of the Airy function; any depth.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Phase,
    Clock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DwellMethod {
    Quadrature,
    ClosedForm,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialKind,
    #[arg(long, value_enum, default_value = "natural")]
    pub units: UnitsKind,
    /// Shorthand for the electron mass (kg in SI).
    #[arg(long, value_enum)]
    pub particle: Option<ParticleKind>,
    /// Mass used for both inertial and gravitational mass.
    #[arg(long)]
    pub m: Option<f64>,
    /// Inertial mass (overrides --m).
    #[arg(long)]
    pub mi: Option<f64>,
    /// Gravitational mass (overrides --m).
    #[arg(long)]
    pub mg: Option<f64>,
    /// Step height.
    #[arg(long = "V0")]
    pub v0: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Gravitational acceleration (default 1 natural, 9.81 SI).
    #[arg(long)]
    pub g: Option<f64>,
    #[arg(long, value_enum, default_value = "far")]
    pub regime: GravityRegime,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long = "E", allow_hyphen_values = true)]
    pub energy: f64,
    /// Probe distance in front of the barrier (probe at x = -X).
    #[arg(long = "X", allow_hyphen_values = true)]
    pub probe: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DwellArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long = "E", allow_hyphen_values = true)]
    pub energy: f64,
    #[arg(long, value_enum, default_value = "quadrature")]
    pub method: DwellMethod,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Energy, or a range `start:stop:count`.
    #[arg(long = "E", allow_hyphen_values = true)]
    pub energy: String,
    /// Probe distance, or a range `start:stop:count`.
    #[arg(long = "X", allow_hyphen_values = true)]
    pub probe: Option<String>,
    #[arg(long, value_enum, default_value = "clock")]
    pub quantity: Quantity,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct WaveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long = "E", allow_hyphen_values = true)]
    pub energy: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A fully resolved physical setup.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Model {
    pub potential: Potential,
    pub units: UnitSystem,
    pub particle: ParticleSpec,
    pub regime: GravityRegime,
}

/// Linear grid `start:stop:count`, or a single value.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep(pub Vec<f64>);

#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Phase { model: Model, energy: f64, probe: Option<f64> },
    Clock { model: Model, energy: f64, probe: Option<f64> },
    Dwell { model: Model, energy: f64, method: ProbabilityMethod },
    Scan { model: Model, energies: Sweep, probes: Option<Sweep>, quantity: Quantity },
    Wavefunction { model: Model, energy: f64, xmin: f64, xmax: f64, n: usize },
    Verify,
}

/// Validated configuration for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub output: Option<PathBuf>,
}

/// Problems found while turning arguments into a [`RunConfig`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn cfg<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

fn require(name: &str, v: Option<f64>, potential: &str) -> Result<f64, ConfigError> {
    match v {
        Some(x) if x.is_finite() => Ok(x),
        Some(x) => cfg(format!("--{name} must be finite, got {x}")),
        None => cfg(format!("--{name} is required for the {potential} potential")),
    }
}

fn finite(name: &str, v: f64) -> Result<f64, ConfigError> {
    if v.is_finite() {
        Ok(v)
    } else {
        cfg(format!("--{name} must be finite, got {v}"))
    }
}

impl ModelArgs {
    pub fn resolve(&self) -> Result<Model, ConfigError> {
        let units = match self.units {
            UnitsKind::Natural => UnitSystem::natural(),
            UnitsKind::Si => UnitSystem::si(),
        };
        let base = match (self.particle, self.m) {
            (Some(_), Some(_)) => return cfg("give either --particle or --m, not both"),
            (Some(ParticleKind::Electron), None) => Some(ParticleSpec::electron().m_inertial()),
            (None, m) => m,
        };
        let default_mass = match self.units {
            UnitsKind::Natural => Some(1.0),
            UnitsKind::Si => None,
        };
        let mi = self.mi.or(base).or(default_mass);
        let mg = self.mg.or(base).or(default_mass);
        let (mi, mg) = match (mi, mg) {
            (Some(a), Some(b)) => (a, b),
            _ => return cfg("SI units need a mass: --m, --mi/--mg or --particle electron"),
        };
        let particle = ParticleSpec::new(mi, mg).map_err(|e| ConfigError(e.to_string()))?;
        let name = match self.potential {
            PotentialKind::Step => "step",
            PotentialKind::Exponential => "exponential",
            PotentialKind::Gravity => "gravity",
        };
        let potential = match self.potential {
            PotentialKind::Step => Potential::step(require("V0", self.v0, name)?),
            PotentialKind::Exponential => {
                Potential::exponential(require("alpha", self.alpha, name)?, require("beta", self.beta, name)?)
            }
            PotentialKind::Gravity => {
                let g = match (self.g, self.units) {
                    (Some(g), _) => finite("g", g)?,
                    (None, UnitsKind::Natural) => 1.0,
                    (None, UnitsKind::Si) => STANDARD_GRAVITY,
                };
                Potential::linear_gravity(mg, g)
            }
        }
        .map_err(|e| ConfigError(e.to_string()))?;
        if self.regime != GravityRegime::Far && self.potential != PotentialKind::Gravity {
            return cfg("--regime applies only to the gravity potential");
        }
        Ok(Model { potential, units, particle, regime: self.regime })
    }
}

/// Parses `start:stop:count` (linear, `count >= 2`, `start < stop`) or a
/// single number.
pub fn parse_sweep(name: &str, text: &str) -> Result<Sweep, ConfigError> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| -> Result<f64, ConfigError> {
        match s.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => cfg(format!("--{name}: cannot read '{s}' as a number")),
        }
    };
    match parts.as_slice() {
        [single] => Ok(Sweep(vec![num(single)?])),
        [start, stop, count] => {
            let (a, b) = (num(start)?, num(stop)?);
            let n: usize = match count.trim().parse() {
                Ok(n) => n,
                Err(_) => return cfg(format!("--{name}: count '{count}' is not a whole number")),
            };
            if n < 2 {
                return cfg(format!("--{name}: range needs count >= 2, got {n}"));
            }
            if !(a < b) {
                return cfg(format!("--{name}: range needs start < stop, got {a}:{b}"));
            }
            Ok(Sweep((0..n).map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 }).collect()))
        }
        _ => cfg(format!("--{name}: expected a number or start:stop:count, got '{text}'")),
    }
}

impl Command {
    pub fn into_config(self) -> Result<RunConfig, ConfigError> {
        let (task, out) = match self {
            Command::Phase(a) => {
                let model = a.model.resolve()?;
                let probe = a.probe.map(|x| finite("X", x)).transpose()?;
                (Task::Phase { model, energy: finite("E", a.energy)?, probe }, a.output)
            }
            Command::Clock(a) => {
                let model = a.model.resolve()?;
                let probe = a.probe.map(|x| finite("X", x)).transpose()?;
                (Task::Clock { model, energy: finite("E", a.energy)?, probe }, a.output)
            }
            Command::Dwell(a) => {
                let model = a.model.resolve()?;
                if !matches!(model.potential, Potential::LinearGravity { .. }) {
                    return cfg("dwell is defined for the gravity potential only");
                }
                let method = match a.method {
                    DwellMethod::Quadrature => ProbabilityMethod::Quadrature,
                    DwellMethod::ClosedForm => ProbabilityMethod::ClosedForm,
                };
                (Task::Dwell { model, energy: finite("E", a.energy)?, method }, a.output)
            }
            Command::Scan(a) => {
                let model = a.model.resolve()?;
                let energies = parse_sweep("E", &a.energy)?;
                let probes = a.probe.as_deref().map(|p| parse_sweep("X", p)).transpose()?;
                if energies.0.len() < 2 && probes.as_ref().is_none_or(|p| p.0.len() < 2) {
                    return cfg("scan needs a start:stop:count range for --E or --X");
                }
                (Task::Scan { model, energies, probes, quantity: a.quantity }, a.output)
            }
            Command::Wavefunction(a) => {
                let model = a.model.resolve()?;
                let (xmin, xmax) = (finite("xmin", a.xmin)?, finite("xmax", a.xmax)?);
                if !(xmin < xmax) {
                    return cfg(format!("--xmin must be below --xmax, got {xmin} and {xmax}"));
                }
                if a.n < 2 {
                    return cfg(format!("--n must be at least 2, got {}", a.n));
                }
                (Task::Wavefunction { model, energy: finite("E", a.energy)?, xmin, xmax, n: a.n }, a.output)
            }
            Command::Verify(o) => (Task::Verify, o),
        };
        Ok(RunConfig { task, format: out.format, output: out.output })
    }
}

fn threads_from_env() -> Result<Option<usize>, ConfigError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => cfg(format!("{THREADS_ENV} must be a positive integer, got '{s}'")),
        },
    }
}

fn state_for(model: &Model, energy: f64) -> crate::Result<ScatteringState> {
    ScatteringState::for_potential(energy, model.particle, model.units, &model.potential)
}

fn gravity_setup(model: &Model, state: &ScatteringState) -> crate::Result<(GravityScales, f64)> {
    match model.potential {
        Potential::LinearGravity { g, .. } => Ok((GravityScales::new(model.units, model.particle, g, state.energy)?, g)),
        _ => Err(Error::Domain("not a gravity model".into())),
    }
}

/// Probe distance actually used: the near regime defaults to the turning
/// point, everything else to `X = 0`.
fn probe_or_default(model: &Model, state: &ScatteringState, probe: Option<f64>) -> crate::Result<f64> {
    match (probe, model.regime, model.potential) {
        (Some(x), _, _) => Ok(x),
        (None, GravityRegime::Near, Potential::LinearGravity { .. }) => Ok(-gravity_setup(model, state)?.0.b),
        (None, _, _) => Ok(0.0),
    }
}

fn far_warning(model: &Model, state: &ScatteringState, x: f64) -> crate::Result<Option<String>> {
    if model.regime != GravityRegime::Far || !matches!(model.potential, Potential::LinearGravity { .. }) {
        return Ok(None);
    }
    let z = gravity_setup(model, state)?.0.depth(x);
    Ok((z < FAR_FIELD_MIN_Z).then(|| {
        format!("warning: far-field gravity formula used at z = {z:.6} < {FAR_FIELD_MIN_Z}; use --regime exact for the full Airy phase")
    }))
}

/// Phase at `x = -X` for the configured model.
pub fn evaluate_phase(model: &Model, energy: f64, probe: Option<f64>) -> crate::Result<(f64, PhaseResult)> {
    let state = state_for(model, energy)?;
    let x = probe_or_default(model, &state, probe)?;
    let r = match model.potential {
        Potential::Step { v0 } => phases::step_phase(&state, v0, x)?,
        Potential::Exponential { alpha, beta } => phases::exp_phase(&state, alpha, beta, x)?,
        Potential::LinearGravity { .. } => {
            let (sc, _) = gravity_setup(model, &state)?;
            match model.regime {
                GravityRegime::Far => phases::gravity_phase_far_formula(&sc, x)?,
                GravityRegime::Near => {
                    let z = sc.depth(x);
                    phases::gravity_phase_near(if z.abs() < 1e-12 { 0.0 } else { z })?
                }
                GravityRegime::Exact => phases::gravity_phase_exact(sc.depth(x))?,
            }
        }
    };
    Ok((x, r))
}

/// Clock time at `x = -X` for the configured model.
pub fn evaluate_clock(model: &Model, energy: f64, probe: Option<f64>) -> crate::Result<(f64, ClockResult)> {
    let state = state_for(model, energy)?;
    let x = probe_or_default(model, &state, probe)?;
    let r = match model.potential {
        Potential::Step { v0 } => clock::step_clock(&state, v0, x)?,
        Potential::Exponential { alpha, beta } => clock::exp_clock(&state, alpha, beta, x)?,
        Potential::LinearGravity { .. } => {
            let (sc, g) = gravity_setup(model, &state)?;
            match model.regime {
                GravityRegime::Far => clock::gravity_clock_far_formula(&sc, &state, g, x)?,
                GravityRegime::Near => clock::gravity_clock_near(&sc, &state, g, x)?,
                GravityRegime::Exact => clock::gravity_clock_exact(&state, g, x)?,
            }
        }
    };
    Ok((x, r))
}

fn ident(model: &Model) -> [Cell; 2] {
    [model.potential.name().into(), model.units.name().into()]
}

const PHASE_HEADERS: [&str; 8] =
    ["potential", "units", "E", "X", "theta_total", "theta_propagation", "theta_reflection", "regime"];
const CLOCK_HEADERS: [&str; 8] = ["potential", "units", "E", "X", "dT_total", "dT_classical", "dT_quantum", "method"];
const DWELL_HEADERS: [&str; 7] = ["potential", "units", "E", "prob_per_norm2", "flux_per_norm2", "dwell_time", "kappa"];
const WAVE_HEADERS: [&str; 4] = ["x", "z", "psi", "forbidden"];

fn phase_row(model: &Model, e: f64, x: f64, r: &PhaseResult) -> Vec<Cell> {
    let [p, u] = ident(model);
    vec![p, u, e.into(), x.into(), r.total.into(), r.propagation.into(), r.reflection.into(), r.regime.name().into()]
}

fn clock_row(model: &Model, e: f64, x: f64, r: &ClockResult) -> Vec<Cell> {
    let [p, u] = ident(model);
    vec![p, u, e.into(), x.into(), r.dt_total.into(), r.dt_classical.into(), r.dt_quantum.into(), r.method.name().into()]
}

/// Failure of [`run`], carrying the exit status.
#[derive(Debug)]
pub enum RunError {
    Config(ConfigError),
    Library(Error),
    Io(io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => EXIT_CONFIG,
            RunError::Library(_) => EXIT_LIBRARY,
            RunError::Io(_) => EXIT_CONFIG,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Config(e) => write!(f, "configuration error: {e}"),
            RunError::Library(e) => write!(f, "{e}"),
            RunError::Io(e) => write!(f, "output error: {e}"),
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Library(e)
    }
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

/// What a successful run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    /// Diagnostics for standard error, in a fixed order.
    pub warnings: Vec<String>,
    /// False when a `verify` check failed.
    pub passed: bool,
}

fn pool() -> Result<rayon::ThreadPool, RunError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads_from_env()? {
        b = b.num_threads(n);
    }
    b.build().map_err(|e| RunError::Config(ConfigError(e.to_string())))
}

/// Keeps `theta_total` and `theta_reflection` continuous down a column by
/// adding multiples of `2 pi`.
fn unwrap_rows(rows: &mut [(f64, f64, PhaseResult)]) {
    for i in 1..rows.len() {
        let prev = rows[i - 1].2.total;
        let cur = rows[i].2.total;
        let shift = 2.0 * PI * ((prev - cur) / (2.0 * PI)).round();
        if shift != 0.0 {
            rows[i].2 = rows[i].2.offset(shift);
        }
    }
}

fn scan(model: &Model, energies: &Sweep, probes: &Option<Sweep>, quantity: Quantity) -> Result<Report, RunError> {
    let xs: Vec<Option<f64>> = match probes {
        Some(p) => p.0.iter().map(|&x| Some(x)).collect(),
        None => vec![None],
    };
    let grid: Vec<(f64, Option<f64>)> = energies.0.iter().flat_map(|&e| xs.iter().map(move |&x| (e, x))).collect();
    let pool = pool()?;
    let mut warnings = Vec::new();
    let table = match quantity {
        Quantity::Phase => {
            let rows: Vec<crate::Result<(f64, f64, PhaseResult)>> = pool.install(|| {
                grid.par_iter().map(|&(e, x)| evaluate_phase(model, e, x).map(|(x, r)| (e, x, r))).collect()
            });
            let mut rows: Vec<(f64, f64, PhaseResult)> = rows.into_iter().collect::<crate::Result<_>>()?;
            // unwrap along E for each X
            let nx = xs.len();
            for j in 0..nx {
                let mut column: Vec<(f64, f64, PhaseResult)> = rows.iter().skip(j).step_by(nx).copied().collect();
                unwrap_rows(&mut column);
                for (i, r) in column.into_iter().enumerate() {
                    rows[i * nx + j] = r;
                }
            }
            let mut t = Table::new(PHASE_HEADERS.to_vec());
            for (e, x, r) in &rows {
                t.push(phase_row(model, *e, *x, r));
            }
            t
        }
        Quantity::Clock => {
            let rows: Vec<crate::Result<(f64, f64, ClockResult)>> = pool.install(|| {
                grid.par_iter().map(|&(e, x)| evaluate_clock(model, e, x).map(|(x, r)| (e, x, r))).collect()
            });
            let rows: Vec<(f64, f64, ClockResult)> = rows.into_iter().collect::<crate::Result<_>>()?;
            let mut t = Table::new(CLOCK_HEADERS.to_vec());
            for (e, x, r) in &rows {
                t.push(clock_row(model, *e, *x, r));
            }
            t
        }
    };
    let mut shallow = 0usize;
    for &(e, x) in &grid {
        let state = state_for(model, e)?;
        let x = probe_or_default(model, &state, x)?;
        if far_warning(model, &state, x)?.is_some() {
            shallow += 1;
        }
    }
    if shallow > 0 {
        warnings.push(format!(
            "warning: far-field gravity formula used below z = {FAR_FIELD_MIN_Z} on {shallow} of {} rows",
            grid.len()
        ));
    }
    Ok(Report { table, warnings, passed: true })
}

fn wavefunction(model: &Model, energy: f64, xmin: f64, xmax: f64, n: usize) -> Result<Report, RunError> {
    let state = state_for(model, energy)?;
    let xs: Vec<f64> = (0..n).map(|i| if i + 1 == n { xmax } else { xmin + (xmax - xmin) * i as f64 / (n - 1) as f64 }).collect();
    let mut t = Table::new(WAVE_HEADERS.to_vec());
    match model.potential {
        Potential::Step { v0 } => {
            let p = state.decay_rate(v0);
            let theta = phases::step_phase(&state, v0, 0.0)?.reflection;
            for &x in &xs {
                let psi = if x < 0.0 {
                    2.0 * (state.k * x - 0.5 * theta).cos()
                } else {
                    2.0 * (0.5 * theta).cos() * (-p * x).exp()
                };
                t.push(vec![x.into(), (x * p).into(), psi.into(), (x >= 0.0).into()]);
            }
        }
        Potential::Exponential { alpha, beta } => {
            let nu = 2.0 * state.k / beta;
            let q = 2.0 * (2.0 * state.mass() * alpha).sqrt() / (state.hbar() * beta);
            // |Gamma(i nu)|, the small-argument amplitude of K_{i nu}
            let amp = (PI / (nu * (PI * nu).sinh())).sqrt();
            let xt = (energy / alpha).ln() / beta;
            for &x in &xs {
                let k = macdonald_imag_order(nu, q * (0.5 * beta * x).exp())?;
                t.push(vec![x.into(), ((x - xt) * beta).into(), (2.0 * k / amp).into(), (x > xt).into()]);
            }
        }
        Potential::LinearGravity { .. } => {
            let (sc, _) = gravity_setup(model, &state)?;
            for &x in &xs {
                let z = (x - sc.b) / sc.a;
                t.push(vec![x.into(), z.into(), airy_ai(z).into(), (x > sc.b).into()]);
            }
        }
    }
    Ok(Report { table: t, warnings: Vec::new(), passed: true })
}

/// Executes a validated configuration and returns its table.
pub fn execute(config: &RunConfig) -> Result<Report, RunError> {
    match &config.task {
        Task::Phase { model, energy, probe } => {
            let (x, r) = evaluate_phase(model, *energy, *probe)?;
            let state = state_for(model, *energy)?;
            let mut t = Table::new(PHASE_HEADERS.to_vec());
            t.push(phase_row(model, *energy, x, &r));
            Ok(Report { table: t, warnings: far_warning(model, &state, x)?.into_iter().collect(), passed: true })
        }
        Task::Clock { model, energy, probe } => {
            let (x, r) = evaluate_clock(model, *energy, *probe)?;
            let state = state_for(model, *energy)?;
            let mut t = Table::new(CLOCK_HEADERS.to_vec());
            t.push(clock_row(model, *energy, x, &r));
            Ok(Report { table: t, warnings: far_warning(model, &state, x)?.into_iter().collect(), passed: true })
        }
        Task::Dwell { model, energy, method } => {
            let state = state_for(model, *energy)?;
            let (sc, g) = gravity_setup(model, &state)?;
            let r = dwell::dwell_time(&sc, &state, g, *method)?;
            let [p, u] = ident(model);
            let mut t = Table::new(DWELL_HEADERS.to_vec());
            t.push(vec![p, u, (*energy).into(), r.probability.into(), r.flux.into(), r.dwell_time.into(), r.kappa.into()]);
            Ok(Report { table: t, warnings: Vec::new(), passed: true })
        }
        Task::Scan { model, energies, probes, quantity } => scan(model, energies, probes, *quantity),
        Task::Wavefunction { model, energy, xmin, xmax, n } => wavefunction(model, *energy, *xmin, *xmax, *n),
        Task::Verify => {
            let pool = pool()?;
            let (table, passed) = pool.install(verify_table);
            Ok(Report { table, warnings: Vec::new(), passed })
        }
    }
}

/// Runs a configuration end to end, writing records to the configured
/// destination and diagnostics to `diag`. Returns the exit status.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, diag: &mut dyn Write) -> i32 {
    let report = match execute(config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(diag, "peres-clock: {e}");
            return e.exit_code();
        }
    };
    for w in &report.warnings {
        let _ = writeln!(diag, "{w}");
    }
    let written = match &config.output {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            report.table.write(config.format, &mut w)?;
            w.flush()
        }),
        None => report.table.write(config.format, stdout),
    };
    if let Err(e) = written {
        // reader went away, as with `| head`
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return EXIT_OK;
        }
        let _ = writeln!(diag, "peres-clock: output error: {e}");
        return EXIT_CONFIG;
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

/// Parses `args` (program name first) and runs them.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(diag, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    match cli.command.into_config() {
        Ok(config) => run(&config, stdout, diag),
        Err(e) => {
            let _ = writeln!(diag, "peres-clock: configuration error: {e}");
            EXIT_CONFIG
        }
    }
}
