//! The `verify` table: closed forms against numerical routes, identities of
//! the special functions, and the reference numbers worth printing.

use super::output::{Cell, Table};
use crate::clock::{self, near_turning_coefficient, near_turning_slope, peres_dt};
use crate::dwell::{self, forbidden_integral_closed_form, forbidden_integral_quadrature, kappa_closed_form, ProbabilityMethod};
use crate::oracle::extract::nearest_branch;
use crate::oracle::quadrature::integrate_semi_infinite;
use crate::oracle::{accelerated_frame_check, classical_trajectory_time, integrate_stationary, integrated_reflection_phase};
use crate::phases::{self, exp_reflection_phi};
use crate::potentials::{Potential, ScatteringState};
use crate::specfun::{
    airy_ai, airy_oscillatory, bessel_j_third, bessel_j_third_prime, macdonald_imag_order, ThirdOrder, EULER_GAMMA,
};
use crate::units::{GravityScales, ParticleSpec, UnitSystem, STANDARD_GRAVITY};
use rayon::prelude::*;
use std::f64::consts::PI;

pub const VERIFY_HEADERS: [&str; 6] = ["check", "value", "reference", "deviation", "tolerance", "status"];

/// Commonly quoted rounded decimal for the dwell coefficient.
const ROUNDED_KAPPA: f64 = 0.4;
/// Rounded value of the near-turning coefficient.
const ROUNDED_NEAR_COEFFICIENT: f64 = 0.5;
/// Asymptotic constant of the first correction to the large-z Airy form.
fn airy_first_correction() -> f64 {
    5.0 / (48.0 * PI.sqrt())
}

struct Check {
    name: String,
    value: f64,
    reference: Option<f64>,
    deviation: Option<f64>,
    tolerance: Cell,
    status: Status,
}

#[derive(Clone, Copy, PartialEq)]
enum Status {
    Pass,
    Fail,
    Info,
}

impl Check {
    /// Passes when `deviation <= tol`.
    fn bound(name: &str, value: f64, reference: Option<f64>, deviation: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            value,
            reference,
            deviation: Some(deviation),
            tolerance: Cell::Num(tol),
            status: if deviation <= tol { Status::Pass } else { Status::Fail },
        }
    }

    fn relative(name: &str, value: f64, reference: f64, tol: f64) -> Self {
        Self::bound(name, value, Some(reference), ((value - reference) / reference).abs(), tol)
    }

    fn within(name: &str, value: f64, reference: f64, lo: f64, hi: f64) -> Self {
        Self {
            name: name.into(),
            value,
            reference: Some(reference),
            deviation: Some(value - reference),
            tolerance: Cell::Text(format!("[{lo}; {hi}]")),
            status: if (lo..=hi).contains(&value) { Status::Pass } else { Status::Fail },
        }
    }

    fn info(name: &str, value: f64, reference: Option<f64>) -> Self {
        Self {
            name: name.into(),
            value,
            reference,
            deviation: reference.map(|r| value - r),
            tolerance: Cell::Empty,
            status: Status::Info,
        }
    }

    fn failed(name: &str, err: crate::Error) -> Self {
        Self {
            name: name.into(),
            value: f64::NAN,
            reference: None,
            deviation: None,
            tolerance: Cell::Text(err.to_string()),
            status: Status::Fail,
        }
    }
}

fn natural(e: f64) -> ScatteringState {
    ScatteringState::new(e, ParticleSpec::universal(1.0).expect("unit mass"), UnitSystem::natural()).expect("positive energy")
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn max_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, f64::max)
}

fn equivalence() -> crate::Result<Vec<Check>> {
    let units = UnitSystem::natural();
    let g = 1.0;
    let mut fd_dev: f64 = 0.0;
    let mut closed_dev: f64 = 0.0;
    for e in [0.5, 1.0, 2.0, 4.0] {
        let particle = ParticleSpec::universal(1.0)?;
        let sc = GravityScales::new(units, particle, g, e)?;
        let st = ScatteringState::new(e, particle, units)?;
        for z in [20.0, 30.0, 45.0, 60.0] {
            let x = z * sc.a - sc.b;
            let classical = 2.0 * (2.0 * (sc.b + x) / g).sqrt();
            let fd = peres_dt(|e| Ok(phases::gravity_phase_far(&GravityScales::new(units, particle, g, e)?, x)?.total), e, 1.0)?;
            fd_dev = fd_dev.max(rel(fd.dt_total, classical));
            let analytic = clock::gravity_clock_far(&sc, &st, g, x)?;
            closed_dev = closed_dev.max(rel(analytic.dt_total, classical));
        }
    }
    // fixed b + X and g, varying mass
    let d = 25.0;
    let mut times = Vec::new();
    for m in [0.5, 1.0, 2.0, 4.0] {
        let particle = ParticleSpec::universal(m)?;
        let e = 0.5 * m * g;
        let sc = GravityScales::new(units, particle, g, e)?;
        let st = ScatteringState::new(e, particle, units)?;
        times.push(clock::gravity_clock_far(&sc, &st, g, d - sc.b)?.dt_total);
    }
    let spread = max_of(times.iter().map(|t| rel(*t, times[0])));
    Ok(vec![
        Check::bound("equivalence_fd_vs_classical", fd_dev, None, fd_dev, 1e-4),
        Check::bound("equivalence_closed_forms", closed_dev, None, closed_dev, 1e-12),
        Check::bound("equivalence_mass_spread", spread, None, spread, 1e-10),
    ])
}

fn step_delay() -> crate::Result<Vec<Check>> {
    let v0 = 2.0;
    let mut dev: f64 = 0.0;
    for f in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let e = f * v0;
        let fd = peres_dt(|e| Ok(phases::step_phase(&natural(e), v0, 0.0)?.total), e, 1.0)?;
        dev = dev.max(rel(fd.dt_total, 1.0 / (e * (v0 - e)).sqrt()));
    }
    Ok(vec![Check::bound("step_delay_fd_vs_closed_form", dev, None, dev, 1e-6)])
}

fn near_turning() -> crate::Result<Vec<Check>> {
    let units = UnitSystem::natural();
    let particle = ParticleSpec::universal(1.0)?;
    let (g, e) = (1.0, 1e-3);
    let sc = GravityScales::new(units, particle, g, e)?;
    let st = ScatteringState::new(e, particle, units)?;
    let x = 1e-6 * sc.a - sc.b;
    let fd = peres_dt(|e| Ok(phases::gravity_phase_near(GravityScales::new(units, particle, g, e)?.depth(x))?.total), e, 1.0)?;
    let closed = clock::gravity_clock_near(&sc, &st, g, x)?;
    // slope of the exact standing-wave phase at the turning point
    let h = 1e-6;
    let exact_slope = (phases::gravity_phase_exact(h)?.total - phases::gravity_phase_exact(0.0)?.total) / h;
    Ok(vec![
        Check::within("near_turning_coefficient", near_turning_coefficient(), ROUNDED_NEAR_COEFFICIENT, 0.485, 0.495),
        Check::relative("near_turning_fd_vs_closed_form", fd.dt_total, closed.dt_total, 1e-5),
        Check::info("near_turning_slope", near_turning_slope(), None),
        Check::info("near_turning_coefficient_exact_airy", 2f64.cbrt() * exact_slope, None),
    ])
}

fn dwell_checks() -> crate::Result<Vec<Check>> {
    let q = forbidden_integral_quadrature()?;
    let c = forbidden_integral_closed_form();
    let units = UnitSystem::si();
    let particle = ParticleSpec::electron();
    let g = STANDARD_GRAVITY;
    let e = 1e-30;
    let sc = GravityScales::new(units, particle, g, e)?;
    let st = ScatteringState::new(e, particle, units)?;
    let r = dwell::dwell_time(&sc, &st, g, ProbabilityMethod::Quadrature)?;
    let j = dwell::incident_flux(&sc, &st)?;
    let j_closed = units.hbar() / (4.0 * PI * sc.a * particle.m_inertial());
    Ok(vec![
        Check::relative("forbidden_integral_quadrature", q, c, 1e-8),
        Check::relative("incident_flux_vs_wronskian", j, j_closed, 1e-9),
        Check::within("electron_dwell_time_ms", 1e3 * r.dwell_time, 4.0, 2.7, 6.0),
        Check::info("kappa_first_principles", r.kappa, None),
        Check::info("kappa_closed_form", kappa_closed_form(), None),
        Check::info("kappa_rounded_decimal", ROUNDED_KAPPA, None),
        Check::info("electron_near_turning_clock_ms", 1e3 * near_turning_coefficient() * clock::gravity_time_scale(units, particle, g)?, None),
        Check::within("electron_penetration_mm", 1e3 * sc.a, 1.0, 0.8, 1.0),
    ])
}

fn special_functions() -> crate::Result<Vec<Check>> {
    let mut id_dev: f64 = 0.0;
    for i in 0..=1190 {
        let z = 0.05 + 0.01 * i as f64;
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        let sum = bessel_j_third(ThirdOrder::Plus, zeta)? + bessel_j_third(ThirdOrder::Minus, zeta)?;
        id_dev = id_dev.max((z.sqrt() / 3.0 * sum - airy_ai(-z)).abs());
    }
    let mut w_dev: f64 = 0.0;
    let mut w_sign: f64 = 0.0;
    for i in 0..=199 {
        let zeta = 0.1 + 0.1 * i as f64;
        let w = bessel_j_third(ThirdOrder::Plus, zeta)? * bessel_j_third_prime(ThirdOrder::Minus, zeta)?
            - bessel_j_third(ThirdOrder::Minus, zeta)? * bessel_j_third_prime(ThirdOrder::Plus, zeta)?;
        w_dev = w_dev.max((w.abs() * PI * zeta / 2.0 - (PI / 3.0).sin()).abs());
        w_sign = w.signum();
    }
    let mut coeff: f64 = 0.0;
    for i in 0..=5000 {
        let z = 10.0 + 0.01 * i as f64;
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        let err = (airy_oscillatory(z).ai - PI.powf(-0.5) * z.powf(-0.25) * (zeta + PI / 4.0).sin()).abs();
        coeff = coeff.max(err * z.powf(1.75));
    }
    let mut k_dev: f64 = 0.0;
    for nu in [0.5, 1.0, 2.0, 3.0] {
        for x in [0.2, 1.0, 3.0, 8.0] {
            let got = macdonald_imag_order(nu, x)?;
            let oracle = integrate_semi_infinite(|t| (-x * t.cosh()).exp() * (nu * t).cos(), 0.0, 1e-16)?;
            let envelope = got.abs().max((PI / (nu * (PI * nu).sinh())).sqrt() * (-x).exp());
            k_dev = k_dev.max((got - oracle).abs() / envelope);
        }
    }
    let s = airy_first_correction();
    Ok(vec![
        Check::bound("airy_bessel_identity", id_dev, None, id_dev, 1e-9),
        Check::bound("bessel_wronskian_magnitude", w_dev, None, w_dev, 1e-8),
        Check::info("bessel_wronskian_sign", w_sign, None),
        Check::bound("airy_asymptotic_error_coefficient", coeff, Some(s), (coeff - s).max(0.0), 1e-4),
        Check::info("airy_asymptotic_stated_bound", 0.05, Some(coeff)),
        Check::bound("macdonald_vs_real_axis_integral", k_dev, None, k_dev, 1e-7),
    ])
}

/// Oracle phases are principal values; report them on the analytic branch.
fn branch_check(name: &str, extracted: f64, analytic: f64) -> Check {
    let v = nearest_branch(extracted, analytic);
    Check::bound(name, v, Some(analytic), (v - analytic).abs(), 1e-5)
}

fn oracle_phases() -> crate::Result<Vec<Check>> {
    let mut out = Vec::new();
    let st = natural(1.0);
    let step = Potential::step(2.0)?;
    let r = integrated_reflection_phase(&step, &st, 0.5)?;
    let want = phases::step_phase(&st, 2.0, 0.5)?.total;
    out.push(branch_check("oracle_step_phase", r.phase.delta_theta, want));

    let st = natural(0.5);
    let wall = Potential::exponential(1.0, 2.0)?;
    let r = integrated_reflection_phase(&wall, &st, 3.0)?;
    let want = phases::exp_phase(&st, 1.0, 2.0, 3.0)?.total;
    out.push(branch_check("oracle_exponential_phase", r.phase.delta_theta, want));

    let st = natural(1.0);
    let grav = Potential::linear_gravity(1.0, 1.0)?;
    let sc = GravityScales::new(st.units, st.particle, 1.0, 1.0)?;
    let x = 25.0 * sc.a - sc.b;
    let r = integrated_reflection_phase(&grav, &st, x)?;
    // the far-field convention sits pi above the standing-wave split
    let want = phases::gravity_phase_exact(25.0)?.total - PI;
    out.push(branch_check("oracle_gravity_phase", r.phase.delta_theta, want));

    let samples = integrate_stationary(&grav, &st, 9.0, -10.0, 60_000)?;
    let a = sc.a;
    let window: Vec<_> = samples.iter().filter(|p| p.x <= 3.0).collect();
    let num: f64 = window.iter().map(|p| airy_ai((p.x - 1.0) / a) * p.value.re).sum();
    let den: f64 = window.iter().map(|p| p.value.re * p.value.re).sum();
    let worst = max_of(window.iter().map(|p| (num / den * p.value.re - airy_ai((p.x - 1.0) / a)).abs()));
    out.push(Check::bound("oracle_gravity_eigenfunction", worst, None, worst, 1e-6));

    let classical = classical_trajectory_time(&grav, &st, 1.0)?;
    out.push(Check::relative("classical_trajectory_gravity", classical, 4.0, 1e-8));
    let frame = accelerated_frame_check(1.5, 1.0, &(0..=100).map(|i| 0.1 * i as f64).collect::<Vec<_>>());
    out.push(Check::bound("accelerated_frame_means", frame, None, frame, 1e-12));
    Ok(out)
}

fn exponential() -> crate::Result<Vec<Check>> {
    let mut dev: f64 = 0.0;
    for (e, alpha, beta, x) in [(1.0, 1.0, 2.0, 3.0), (0.2, 5.0, 0.5, 10.0), (3.0, 0.1, 10.0, 1.0)] {
        let st = natural(e);
        let a = clock::exp_clock(&st, alpha, beta, x)?;
        let fd = peres_dt(|e| Ok(phases::exp_phase(&natural(e), alpha, beta, x)?.total), e, 1.0)?;
        dev = dev.max(rel(fd.dt_total, a.dt_total));
    }
    let nu = 1e-3;
    let fitted = -1.0 / (nu * exp_reflection_phi(nu).tan());
    let st = natural(1.0);
    let q: Vec<f64> = [10.0, 100.0, 1000.0]
        .iter()
        .map(|&b| clock::exp_clock(&st, 1.0, b, 0.0).map(|c| c.dt_quantum.unwrap_or(f64::NAN)))
        .collect::<crate::Result<_>>()?;
    let decreasing = q.windows(2).all(|w| w[1] < w[0]) && q.iter().all(|v| *v > 0.0);
    Ok(vec![
        Check::bound("exp_clock_fd_vs_closed_form", dev, None, dev, 1e-6),
        Check::relative("large_beta_constant_fit", fitted, EULER_GAMMA, 1e-6),
        Check::bound("exp_quantum_decreases_with_beta", q[2] / q[0], None, if decreasing { 0.0 } else { 1.0 }, 0.0),
    ])
}

fn routes() -> crate::Result<Vec<Check>> {
    let st = natural(1.0);
    let g = 1.0;
    let sc = GravityScales::new(st.units, st.particle, g, 1.0)?;
    let mut out = Vec::new();
    let x = 30.0 * sc.a - sc.b;
    let exact = clock::gravity_clock_exact(&st, g, x)?.dt_total;
    let far = clock::gravity_clock_far(&sc, &st, g, x)?.dt_total;
    out.push(Check::relative("gravity_exact_vs_far_clock_z30", exact, far, 1e-3));
    for z in [1.0, 2.0, 5.0, 10.0, 20.0, 40.0] {
        let far = phases::gravity_phase_far_formula(&sc, z * sc.a - sc.b)?.total;
        let exact = phases::gravity_phase_exact(z)?.total;
        out.push(Check::info(&format!("far_field_phase_error_z{z}"), far - exact, None));
    }
    Ok(out)
}

type Group = fn() -> crate::Result<Vec<Check>>;

const GROUPS: [(&str, Group); 7] = [
    ("equivalence", equivalence),
    ("step", step_delay),
    ("near_turning", near_turning),
    ("dwell", dwell_checks),
    ("special_functions", special_functions),
    ("oracle", oracle_phases),
    ("exponential", exponential),
];

/// Runs every check and returns the table with an overall pass flag.
pub fn verify_table() -> (Table, bool) {
    let mut groups: Vec<(&str, Group)> = GROUPS.to_vec();
    groups.push(("routes", routes));
    let results: Vec<Vec<Check>> = groups
        .par_iter()
        .map(|(name, f)| f().unwrap_or_else(|e| vec![Check::failed(name, e)]))
        .collect();
    let mut table = Table::new(VERIFY_HEADERS.to_vec());
    let mut passed = true;
    for c in results.into_iter().flatten() {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => {
                passed = false;
                "FAIL"
            }
            Status::Info => "info",
        };
        table.push(vec![
            c.name.into(),
            c.value.into(),
            c.reference.into(),
            c.deviation.into(),
            c.tolerance,
            status.into(),
        ]);
    }
    (table, passed)
}
