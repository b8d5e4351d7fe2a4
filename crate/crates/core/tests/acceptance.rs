//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so the summary lines always reach the
//! terminal. Every reference value is produced here, independently of the
//! library routine under test: five-point finite differences, a Maclaurin
//! series for Ai, an ODE integration for K_{i nu}, direct quadratures.
//!
//! A sub-check marked `unattainable` states a bound that no correct
//! implementation can meet (the analysis is in the check's note). Such a
//! check prints as FAIL and turns its criterion red, but does not change the
//! exit status; any other failure does.

use peres_clock::clock::{self, near_turning_coefficient};
use peres_clock::dwell::{self, forbidden_integral_closed_form, forbidden_integral_quadrature, ProbabilityMethod};
use peres_clock::oracle::extract::nearest_branch;
use peres_clock::oracle::{integrate_stationary, integrated_reflection_phase};
use peres_clock::phases::{self, exp_reflection_phi};
use peres_clock::specfun::{
    airy_ai, airy_oscillatory, bessel_j_third, bessel_j_third_prime, macdonald_imag_order, ThirdOrder, EULER_GAMMA,
};
use peres_clock::{GravityScales, ParticleSpec, Potential, ScatteringState, UnitSystem};
use std::f64::consts::PI;
use std::process::Command;

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    Required,
    Unattainable,
}

struct Sub {
    what: String,
    ok: bool,
    kind: Kind,
}

#[derive(Default)]
struct Criterion {
    subs: Vec<Sub>,
}

impl Criterion {
    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.subs.push(Sub { what: what.into(), ok, kind: Kind::Required });
    }

    fn unattainable(&mut self, what: impl Into<String>, ok: bool) {
        self.subs.push(Sub { what: what.into(), ok, kind: Kind::Unattainable });
    }
}

fn natural(e: f64) -> ScatteringState {
    ScatteringState::new(e, ParticleSpec::universal(1.0).unwrap(), UnitSystem::natural()).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Five-point central difference with step `1e-4 * x`.
fn d5(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    let h = 1e-4 * x;
    (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h)
}

// ---------------------------------------------------------------- 1

fn equivalence_principle() -> Criterion {
    let mut c = Criterion::default();
    let units = UnitSystem::natural();
    let g = 1.0;
    let (mut fd_worst, mut closed_worst, mut mass_worst) = (0.0f64, 0.0f64, 0.0f64);
    for e in [0.5, 1.0, 2.0, 4.0] {
        for z in [20.0, 30.0, 45.0, 60.0] {
            // distance b + X fixed by the unit-mass scales, then reused for every mass
            let ref_sc = GravityScales::new(units, ParticleSpec::universal(1.0).unwrap(), g, e).unwrap();
            let d = z * ref_sc.a;
            let classical = 2.0 * (2.0 * d / g).sqrt();
            let mut per_mass = Vec::new();
            for m in [0.5, 1.0, 2.0, 4.0] {
                let p = ParticleSpec::universal(m).unwrap();
                // same turning height b = E / (m g) for every mass
                let em = e * m;
                let sc = GravityScales::new(units, p, g, em).unwrap();
                let x = d - sc.b;
                let st = ScatteringState::new(em, p, units).unwrap();
                let hbar = units.hbar();
                let phase = |en: f64| phases::gravity_phase_far_formula(&GravityScales::new(units, p, g, en).unwrap(), x).unwrap().total;
                let fd = hbar * d5(phase, em);
                fd_worst = fd_worst.max(rel(fd, classical));
                let analytic = clock::gravity_clock_far_formula(&sc, &st, g, x).unwrap().dt_total;
                let flight = Potential::linear_gravity(m, g).unwrap().classical_round_trip(&st, x).unwrap();
                closed_worst = closed_worst.max(rel(analytic, flight)).max(rel(flight, classical));
                per_mass.push(analytic);
            }
            for t in &per_mass {
                mass_worst = mass_worst.max(rel(*t, per_mass[1]));
            }
        }
    }
    c.check(format!("FD far-field time vs 2 sqrt(2(b+X)/g): worst {fd_worst:.2e} <= 1e-4"), fd_worst <= 1e-4);
    c.check(format!("analytic far-field clock vs classical flight: worst {closed_worst:.2e} <= 1e-12"), closed_worst <= 1e-12);
    c.check(format!("mass dependence over m in {{0.5,1,2,4}}: worst {mass_worst:.2e} <= 1e-10"), mass_worst <= 1e-10);
    c
}

// ---------------------------------------------------------------- 2

fn step_delay() -> Criterion {
    let mut c = Criterion::default();
    let v0 = 3.0;
    let mut worst = 0.0f64;
    for f in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let e = f * v0;
        let fd = d5(|en| phases::step_phase(&natural(en), v0, 0.0).unwrap().total, e);
        worst = worst.max(rel(fd, 1.0 / (e * (v0 - e)).sqrt()));
        // a leading factor 2 in the delay would overshoot by exactly 2
        let doubled = 2.0 / (e * (v0 - e)).sqrt();
        assert!((doubled / fd - 2.0).abs() < 1e-6);
    }
    c.check(format!("FD of step phase vs hbar/sqrt(E(V0-E)): worst {worst:.2e} <= 1e-6"), worst <= 1e-6);

    let e = 1.0;
    let half = clock::step_clock(&natural(e), 2.0 * e, 0.0).unwrap().dt_quantum.unwrap();
    let high = clock::step_clock(&natural(e), 1e6 * e, 0.0).unwrap().dt_quantum.unwrap();
    let higher = clock::step_clock(&natural(e), 1e8 * e, 0.0).unwrap().dt_quantum.unwrap();
    let ratio = high / half;
    c.check(
        format!("delay falls as (V0/E)^(-1/2): ratio at V0=1e6 E is {ratio:.10e} = 1/sqrt(1e6 - 1)"),
        (ratio - 1.0 / (1e6f64 - 1.0).sqrt()).abs() < 1e-15 && higher < high / 9.99,
    );
    c.unattainable(
        format!(
            "ratio < 1e-3 at V0 = 1e6 E: exact ratio is 1/sqrt(999999) = {ratio:.10e}, above 1e-3 by 5e-10 relative \
             (unattainable as written)"
        ),
        ratio < 1e-3,
    );
    let mut shrink = Vec::new();
    for hbar in [1.0, 1e-3, 1e-6] {
        let st = ScatteringState::new(1.0, ParticleSpec::universal(1.0).unwrap(), UnitSystem::with_hbar(hbar).unwrap()).unwrap();
        let fd = hbar * d5(|en| phases::step_phase(&st.with_energy(en).unwrap(), 2.0, 0.0).unwrap().total, 1.0);
        shrink.push(fd);
    }
    c.check(
        format!("delay -> 0 with hbar: {:.3e}, {:.3e}, {:.3e}", shrink[0], shrink[1], shrink[2]),
        rel(shrink[1], 1e-3) < 1e-6 && rel(shrink[2], 1e-6) < 1e-6,
    );
    c
}

// ---------------------------------------------------------------- 3

fn near_turning() -> Criterion {
    let mut c = Criterion::default();
    let closed = 4.0 * 3f64.powf(-1.0 / 6.0) * peres_clock::specfun::gamma(2.0 / 3.0) * 2f64.cbrt()
        / (13.0 * peres_clock::specfun::gamma(4.0 / 3.0));
    c.check(format!("closed-form coefficient {closed:.6} in [0.485, 0.495]"), (0.485..=0.495).contains(&closed));
    c.check(format!("rounds to 0.5 ({closed:.1})"), format!("{closed:.1}") == "0.5");
    c.check("library coefficient equals closed form", rel(near_turning_coefficient(), closed) < 1e-14);

    let units = UnitSystem::natural();
    let mut worst = 0.0f64;
    for (mi, mg, g) in [(1.0, 1.0, 1.0), (2.0, 0.5, 3.0), (0.3, 1.7, 0.4)] {
        let p = ParticleSpec::new(mi, mg).unwrap();
        let e = 1e-3;
        let sc = GravityScales::new(units, p, g, e).unwrap();
        let x = 1e-6 * sc.a - sc.b;
        let phase = |en: f64| phases::gravity_phase_near(GravityScales::new(units, p, g, en).unwrap().depth(x)).unwrap().total;
        let fd = units.hbar() * d5(phase, e);
        let scale = (units.hbar() * mi / (mg * g).powi(2)).cbrt();
        worst = worst.max(rel(fd / scale, closed));
    }
    c.check(format!("FD of near-turning phase vs coefficient: worst {worst:.2e} <= 1e-5"), worst <= 1e-5);
    c
}

// ---------------------------------------------------------------- 4

/// Ai on [0, 8] by its Maclaurin series in extended summation.
fn ai_series(x: f64) -> f64 {
    let c1 = 0.355_028_053_887_817_2;
    let c2 = 0.258_819_403_792_806_8;
    let (mut f, mut g) = (1.0, x);
    let (mut tf, mut tg) = (1.0, x);
    let x3 = x * x * x;
    for k in 1..200 {
        let k = k as f64;
        tf *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
        tg *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += tf;
        g += tg;
        if tf.abs() < 1e-30 && tg.abs() < 1e-30 {
            break;
        }
    }
    c1 * f - c2 * g
}

fn dwell_pipeline() -> Criterion {
    let mut c = Criterion::default();
    let closed = forbidden_integral_closed_form();
    let quad = forbidden_integral_quadrature().unwrap();
    c.check(format!("adaptive quadrature {quad:.14} vs closed form {closed:.14}: rel {:.1e} <= 1e-8", rel(quad, closed)), rel(quad, closed) <= 1e-8);
    // independent: I = 3 pi^2 int_0^inf Ai^2, composite Simpson on [0, 6] (series) + negligible tail
    let n = 6000;
    let h = 6.0 / n as f64;
    let mut s = ai_series(0.0).powi(2) + ai_series(6.0).powi(2);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * ai_series(i as f64 * h).powi(2);
    }
    let simpson = 3.0 * PI * PI * s * h / 3.0;
    c.check(format!("Simpson on Ai^2 gives {simpson:.12}"), rel(simpson, closed) < 1e-8);

    let units = UnitSystem::si();
    let p = ParticleSpec::electron();
    let g = 9.81;
    let e = 1e-30;
    let sc = GravityScales::new(units, p, g, e).unwrap();
    let st = ScatteringState::new(e, p, units).unwrap();
    let r = dwell::dwell_time(&sc, &st, g, ProbabilityMethod::Quadrature).unwrap();
    let ms = 1e3 * r.dwell_time;
    c.check(format!("electron dwell time {ms:.4} ms in [2.7, 6.0]"), (2.7..=6.0).contains(&ms));
    c.check(format!("first-principles kappa {:.6} matches the closed form", r.kappa), rel(r.kappa, dwell::kappa_closed_form()) < 1e-9);

    let out = Command::new(env!("CARGO_BIN_EXE_peres-clock")).arg("verify").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let has = |name: &str, v: &str| text.lines().any(|l| l.starts_with(name) && l.contains(v));
    c.check(
        "verify reports the 0.4 decimal and the 0.530 closed form side by side",
        has("kappa_rounded_decimal,", "0.400000000000") && has("kappa_closed_form,", "0.530294") && has("kappa_first_principles,", "0.530294"),
    );
    c
}

// ---------------------------------------------------------------- 5

fn penetration_scale() -> Criterion {
    let mut c = Criterion::default();
    let sc = GravityScales::new(UnitSystem::si(), ParticleSpec::electron(), 9.81, 1e-30).unwrap();
    let hbar: f64 = 1.054_571_817e-34;
    let m: f64 = 9.109_383_701_5e-31;
    let direct = (hbar * hbar / (2.0 * m * m * 9.81)).cbrt();
    let mm = 1e3 * sc.a;
    c.check(format!("electron a = {mm:.4} mm in [0.8, 1.0]"), (0.8..=1.0).contains(&mm));
    c.check("a equals (hbar^2 / (2 m^2 g))^(1/3)", rel(sc.a, direct) < 1e-14);
    c
}

// ---------------------------------------------------------------- 6

/// `K_{i nu}(x)` at the requested points, by RK4 on `y'' = (e^{2s} - nu^2) y`
/// in `s = ln x`, started from the large-argument series at `x = 400`.
fn k_imag_by_ode(nu: f64, xs: &[f64]) -> Vec<f64> {
    let x0: f64 = 400.0;
    let mu2 = -4.0 * nu * nu;
    let (mut sum, mut dsum, mut term) = (0.0, 0.0, 1.0);
    for k in 0..60 {
        let kf = k as f64;
        if k > 0 {
            term *= (mu2 - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf * x0);
        }
        sum += term;
        dsum += term * (-1.0 - (kf + 0.5) / x0);
        if term.abs() < 1e-18 {
            break;
        }
    }
    let pre = (PI / (2.0 * x0)).sqrt() * (-x0).exp();
    let mut y = pre * sum;
    let mut dy = x0 * pre * dsum;
    let mut s = x0.ln();
    let mut targets: Vec<(usize, f64)> = xs.iter().map(|x| x.ln()).enumerate().collect();
    targets.sort_by(|a, b| b.1.total_cmp(&a.1));
    let mut out = vec![0.0; xs.len()];
    let q = |s: f64| (2.0 * s).exp() - nu * nu;
    for (idx, target) in targets {
        while s > target {
            let rate = s.exp().max(nu).max(1.0);
            let h = -(s - target).min(0.01 / rate);
            let (k1y, k1d) = (dy, q(s) * y);
            let (k2y, k2d) = (dy + 0.5 * h * k1d, q(s + 0.5 * h) * (y + 0.5 * h * k1y));
            let (k3y, k3d) = (dy + 0.5 * h * k2d, q(s + 0.5 * h) * (y + 0.5 * h * k2y));
            let (k4y, k4d) = (dy + h * k3d, q(s + h) * (y + h * k3y));
            y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
            dy += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
            s += h;
        }
        out[idx] = y;
    }
    out
}

/// `K_{i nu}(x) = int_0^inf e^{-x cosh t} cos(nu t) dt` by the trapezoid rule,
/// which converges geometrically for this even, entire integrand.
fn k_imag_by_integral(nu: f64, x: f64) -> f64 {
    let t_max = (46.0 / x).acosh();
    let n = (t_max / 0.005).ceil() as usize;
    let h = t_max / n as f64;
    let f = |t: f64| (-x * t.cosh()).exp() * (nu * t).cos();
    let mut s = 0.5 * (f(0.0) + f(t_max));
    for i in 1..n {
        s += f(i as f64 * h);
    }
    s * h
}

/// Oscillation envelope below the turning point x = nu, where K has zeros.
fn k_envelope(nu: f64, x: f64) -> f64 {
    if x < nu {
        (2.0 * PI).sqrt() * (-PI * nu / 2.0).exp() / (nu * nu - x * x).max(nu).powf(0.25)
    } else {
        0.0
    }
}

fn special_functions() -> Criterion {
    let mut c = Criterion::default();
    let mut id = 0.0f64;
    for i in 0..=2390 {
        let z = 0.05 + 0.005 * i as f64;
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        let sum = bessel_j_third(ThirdOrder::Plus, zeta).unwrap() + bessel_j_third(ThirdOrder::Minus, zeta).unwrap();
        id = id.max((z.sqrt() / 3.0 * sum - airy_ai(-z)).abs());
    }
    c.check(format!("Ai(-z) = (sqrt z / 3)(J_1/3 + J_-1/3) on [0.05, 12]: worst {id:.1e} <= 1e-9"), id <= 1e-9);

    let mut wr = 0.0f64;
    for i in 0..=1990 {
        let zeta = 0.1 + 0.01 * i as f64;
        let w = bessel_j_third(ThirdOrder::Plus, zeta).unwrap() * bessel_j_third_prime(ThirdOrder::Minus, zeta).unwrap()
            - bessel_j_third(ThirdOrder::Minus, zeta).unwrap() * bessel_j_third_prime(ThirdOrder::Plus, zeta).unwrap();
        wr = wr.max((w.abs() * PI * zeta / 2.0 - (PI / 3.0).sin()).abs());
    }
    c.check(format!("Wronskian magnitude (2/(pi zeta)) sin(pi/3) on [0.1, 20]: worst {wr:.1e} <= 1e-8"), wr <= 1e-8);

    let mut coeff = 0.0f64;
    for i in 0..=20_000 {
        let z = 10.0 + 0.005 * i as f64;
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        let err = (airy_oscillatory(z).ai - PI.powf(-0.5) * z.powf(-0.25) * (zeta + PI / 4.0).sin()).abs();
        coeff = coeff.max(err * z.powf(1.75));
    }
    let leading = 5.0 / (48.0 * PI.sqrt());
    c.check(
        format!("asymptotic error / z^(-7/4) peaks at {coeff:.5}, below the leading-correction constant 5/(48 sqrt pi) = {leading:.5}"),
        coeff <= leading,
    );
    c.unattainable(
        format!(
            "asymptotic error <= 0.05 z^(-7/4) for z >= 10: the first correction term alone has amplitude \
             {leading:.5} z^(-7/4), so the peaks reach {coeff:.5} (unattainable as written)"
        ),
        coeff <= 0.05,
    );

    let xs = [1e-3, 3e-3, 0.01, 0.05, 0.2, 0.5, 1.0, 2.0, 4.0, 7.0, 10.0, 15.0, 20.0, 30.0];
    let mut worst = 0.0f64;
    let mut at = (0.0, 0.0);
    for nu in [0.0, 0.5, 1.0, 2.0, 4.0, 7.0, 10.0, 14.0, 20.0] {
        let oracle = k_imag_by_ode(nu, &xs);
        for (&x, &want) in xs.iter().zip(&oracle) {
            let got = macdonald_imag_order(nu, x).unwrap();
            let e = (got - want).abs() / want.abs().max(k_envelope(nu, x));
            if e > worst {
                worst = e;
                at = (nu, x);
            }
        }
    }
    c.check(
        format!("K_(i nu)(x) vs ODE oracle on nu in [0,20], x in [1e-3,30]: worst {worst:.1e} (nu={}, x={}) <= 1e-7", at.0, at.1),
        worst <= 1e-7,
    );
    // the real-axis integral loses e^{-pi nu / 2} to cancellation, so it is an
    // honest reference only for moderate orders
    let mut worst = 0.0f64;
    for nu in [0.0, 0.5, 1.0, 2.0, 3.0, 4.5, 6.0] {
        for &x in &xs {
            let want = k_imag_by_integral(nu, x);
            let got = macdonald_imag_order(nu, x).unwrap();
            worst = worst.max((got - want).abs() / want.abs().max(k_envelope(nu, x)));
        }
    }
    c.check(format!("K_(i nu)(x) vs its real-axis integral for nu <= 6: worst {worst:.1e} <= 1e-7"), worst <= 1e-7);
    c
}

// ---------------------------------------------------------------- 7

fn oracle_cross_validation() -> Criterion {
    let mut c = Criterion::default();
    let gap = |extracted: f64, analytic: f64| (nearest_branch(extracted, analytic) - analytic).abs();

    let mut w_step = 0.0f64;
    for e in [0.3, 1.0, 1.7] {
        for x in [0.0, 0.7, 2.0] {
            let st = natural(e);
            let r = integrated_reflection_phase(&Potential::step(2.0).unwrap(), &st, x).unwrap();
            w_step = w_step.max(gap(r.phase.delta_theta, phases::step_phase(&st, 2.0, x).unwrap().total));
        }
    }
    c.check(format!("step: worst gap {w_step:.1e} rad <= 1e-5"), w_step <= 1e-5);

    let mut w_exp = 0.0f64;
    for e in [0.2, 1.0, 3.0] {
        for x in [1.0, 3.0, 6.0] {
            let st = natural(e);
            let r = integrated_reflection_phase(&Potential::exponential(1.0, 2.0).unwrap(), &st, x).unwrap();
            w_exp = w_exp.max(gap(r.phase.delta_theta, phases::exp_phase(&st, 1.0, 2.0, x).unwrap().total));
        }
    }
    c.check(format!("exponential: worst gap {w_exp:.1e} rad <= 1e-5"), w_exp <= 1e-5);

    let (mut w_exact, mut w_far) = (0.0f64, 0.0f64);
    for e in [0.5, 1.0, 2.0] {
        for z in [20.0, 25.0, 40.0] {
            let st = natural(e);
            let sc = GravityScales::new(st.units, st.particle, 1.0, e).unwrap();
            let x = z * sc.a - sc.b;
            let r = integrated_reflection_phase(&Potential::linear_gravity(1.0, 1.0).unwrap(), &st, x).unwrap();
            // the far-field convention sits a constant pi above the standing-wave split
            let shifted = r.phase.delta_theta + PI;
            w_exact = w_exact.max(gap(shifted, phases::gravity_phase_exact(z).unwrap().total));
            w_far = w_far.max(gap(shifted, phases::gravity_phase_far(&sc, x).unwrap().total));
        }
    }
    c.check(format!("gravity vs exact Airy phase: worst gap {w_exact:.1e} rad <= 1e-5"), w_exact <= 1e-5);
    c.check(format!("gravity vs far-field phase at z >= 20: worst gap {w_far:.1e} rad <= 0.02"), w_far <= 0.02);

    let st = natural(1.0);
    let pot = Potential::linear_gravity(1.0, 1.0).unwrap();
    let samples = integrate_stationary(&pot, &st, 9.0, -10.0, 80_000).unwrap();
    let a = 2f64.powf(-1.0 / 3.0);
    let win: Vec<_> = samples.iter().filter(|p| p.x >= -10.0 && p.x <= 3.0).collect();
    let num: f64 = win.iter().map(|p| airy_ai((p.x - 1.0) / a) * p.value.re).sum();
    let den: f64 = win.iter().map(|p| p.value.re * p.value.re).sum();
    let worst = win.iter().map(|p| (num / den * p.value.re - airy_ai((p.x - 1.0) / a)).abs()).fold(0.0, f64::max);
    c.check(format!("gravity eigenfunction vs Ai((x-1)/2^(-1/3)) on [-10, 3]: worst {worst:.1e} <= 1e-6"), worst <= 1e-6);
    c
}

// ---------------------------------------------------------------- 8

fn exponential_limits() -> Criterion {
    let mut c = Criterion::default();
    let mut worst = 0.0f64;
    for (e, alpha, beta, x) in [(1.0, 1.0, 2.0, 3.0), (0.2, 5.0, 0.5, 10.0), (3.0, 0.1, 10.0, 1.0)] {
        let analytic = clock::exp_clock(&natural(e), alpha, beta, x).unwrap().dt_total;
        let fd = d5(|en| phases::exp_phase(&natural(en), alpha, beta, x).unwrap().total, e);
        worst = worst.max(rel(fd, analytic));
    }
    c.check(format!("exact clock vs FD of the phase at three points: worst {worst:.1e} <= 1e-6"), worst <= 1e-6);

    let nu = 1e-3;
    let fitted = -1.0 / (nu * exp_reflection_phi(nu).tan());
    c.check(format!("constant C fitted from the phase: {fitted:.9} (Euler gamma {EULER_GAMMA:.9})"), rel(fitted, EULER_GAMMA) < 1e-6);

    let st = natural(1.0);
    let q: Vec<f64> = [10.0, 100.0, 1000.0].iter().map(|&b| clock::exp_clock(&st, 1.0, b, 0.0).unwrap().dt_quantum.unwrap()).collect();
    c.check(
        format!("quantum part falls with beta: {:.4e} > {:.4e} > {:.4e} > 0", q[0], q[1], q[2]),
        q[0] > q[1] && q[1] > q[2] && q[2] > 0.0 && q[2] < 0.1 * q[0],
    );
    c
}

// ---------------------------------------------------------------- 9

fn determinism() -> Criterion {
    let mut c = Criterion::default();
    let bin = env!("CARGO_BIN_EXE_peres-clock");
    let run = |args: &[&str], threads: &str| {
        let out = Command::new(bin).args(args).env("PERES_CLOCK_THREADS", threads).output().unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let a = run(&["verify"], "1");
    let b = run(&["verify"], "4");
    c.check(format!("verify: {} bytes, identical across runs and thread counts", a.len()), a == b && !a.is_empty());
    for args in [
        vec!["scan", "--potential", "gravity", "--E", "0.5:4:40", "--X", "10:30:5"],
        vec!["scan", "--potential", "exponential", "--alpha", "1", "--beta", "2", "--E", "0.1:3:50", "--X", "2", "--quantity", "phase", "--format", "json"],
        vec!["scan", "--potential", "step", "--V0", "2", "--E", "0.05:1.95:64", "--X", "1"],
    ] {
        let x = run(&args, "1");
        let y = run(&args, "3");
        let z = run(&args, "3");
        c.check(format!("scan {} ({} bytes) byte-identical", args[2], x.len()), x == y && y == z);
    }
    c
}

type Named = (&'static str, fn() -> Criterion);

fn main() {
    let criteria: [Named; 9] = [
        ("equivalence-principle equality", equivalence_principle),
        ("step quantum delay", step_delay),
        ("near-turning-point coefficient", near_turning),
        ("dwell pipeline", dwell_pipeline),
        ("electron penetration scale", penetration_scale),
        ("special-function identities", special_functions),
        ("oracle cross-validation", oracle_cross_validation),
        ("exponential-potential limits", exponential_limits),
        ("determinism", determinism),
    ];
    let mut hard_failure = false;
    let mut lines = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let crit = f();
        let pass = crit.subs.iter().all(|s| s.ok);
        lines.push(format!("criterion {} [{}]: {}", i + 1, name, if pass { "PASS" } else { "FAIL" }));
        for s in &crit.subs {
            let tag = match (s.ok, s.kind) {
                (true, _) => "ok",
                (false, Kind::Required) => {
                    hard_failure = true;
                    "FAIL"
                }
                (false, Kind::Unattainable) => "FAIL (unattainable)",
            };
            lines.push(format!("    {tag}: {}", s.what));
        }
    }
    for l in &lines {
        println!("{l}");
    }
    if hard_failure {
        std::process::exit(1);
    }
}
