//! Airy functions on the real line.
//!
//! `|x| <= 5` uses the Maclaurin series. Beyond that, the decaying side goes
//! through `K_{1/3}`, `K_{2/3}` and the oscillatory side through `J_{±1/3}`,
//! `J_{±2/3}`.

use super::bessel::{bessel_j_frac, bessel_k_third, bessel_k_two_thirds};
use std::f64::consts::PI;

/// `Ai(0) = 3^{-2/3} / Gamma(2/3)`.
pub const AI_ZERO: f64 = 0.355_028_053_887_817_2;
/// `Ai'(0) = -3^{-1/3} / Gamma(1/3)`.
pub const AI_PRIME_ZERO: f64 = -0.258_819_403_792_806_8;
const SQRT3: f64 = 1.732_050_807_568_877_2;

pub(crate) const SERIES_LIMIT: f64 = 5.0;

/// The two Maclaurin solutions `f`, `g` of `w'' = x w` and their derivatives.
struct Maclaurin {
    f: f64,
    fp: f64,
    g: f64,
    gp: f64,
}

fn maclaurin(x: f64) -> Maclaurin {
    let x3 = x * x * x;
    // f = sum c_k x^{3k}, c_{k+1} = c_k / ((3k+2)(3k+3))
    let (mut f, mut tf) = (1.0, 1.0);
    // f' = sum 3k c_k x^{3k-1}, starting at k = 1 with c_1 = 1/6
    let (mut fp, mut tfp) = (0.0, x * x / 6.0);
    // g = sum d_k x^{3k+1}, d_{k+1} = d_k / ((3k+3)(3k+4))
    let (mut g, mut tg) = (x, x);
    // g' = sum (3k+1) d_k x^{3k}
    let (mut gp, mut tgp) = (1.0, 1.0);
    for k in 0..200 {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        f += tf;
        fp += 3.0 * (kf + 1.0) * tfp;
        tfp *= x3 / ((3.0 * kf + 5.0) * (3.0 * kf + 6.0));
        tg *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        g += tg;
        tgp *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        gp += (3.0 * kf + 4.0) * tgp;
        let scale = f.abs() + g.abs() + 1.0;
        if tf.abs() + tg.abs() + tfp.abs() + tgp.abs() < 1e-18 * scale && kf > 2.0 {
            break;
        }
    }
    Maclaurin { f, fp, g, gp }
}

const C1: f64 = AI_ZERO;
const C2: f64 = -AI_PRIME_ZERO;

fn series_ai(x: f64) -> (f64, f64) {
    let m = maclaurin(x);
    (C1 * m.f - C2 * m.g, C1 * m.fp - C2 * m.gp)
}

fn series_bi(x: f64) -> (f64, f64) {
    let m = maclaurin(x);
    (SQRT3 * (C1 * m.f + C2 * m.g), SQRT3 * (C1 * m.fp + C2 * m.gp))
}

/// Airy function `Ai(x)`; absolute error below 1e-10 for `|x| <= 20`,
/// underflowing smoothly to zero for large positive `x`.
pub fn airy_ai(x: f64) -> f64 {
    if x.abs() <= SERIES_LIMIT {
        series_ai(x).0
    } else if x > 0.0 {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        (x / 3.0).sqrt() / PI * bessel_k_third(zeta).unwrap_or(0.0)
    } else {
        airy_oscillatory(-x).ai
    }
}

/// Derivative `Ai'(x)`.
pub fn airy_ai_prime(x: f64) -> f64 {
    if x.abs() <= SERIES_LIMIT {
        series_ai(x).1
    } else if x > 0.0 {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        -x / (PI * SQRT3) * bessel_k_two_thirds(zeta).unwrap_or(0.0)
    } else {
        airy_oscillatory(-x).ai_prime
    }
}

/// `Ai`, `Bi` and their `x`-derivatives evaluated at `x = -z`, `z >= 0`,
/// the classically allowed side of a linear potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryOscillatory {
    pub ai: f64,
    pub ai_prime: f64,
    pub bi: f64,
    pub bi_prime: f64,
}

pub fn airy_oscillatory(z: f64) -> AiryOscillatory {
    assert!(z >= 0.0, "airy_oscillatory needs z >= 0, got {z}");
    if z <= SERIES_LIMIT {
        let (ai, ai_prime) = series_ai(-z);
        let (bi, bi_prime) = series_bi(-z);
        return AiryOscillatory { ai, ai_prime, bi, bi_prime };
    }
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let j = |nu: f64| bessel_j_frac(nu, zeta).expect("zeta > 0");
    let (jp1, jm1, jp2, jm2) = (j(1.0 / 3.0), j(-1.0 / 3.0), j(2.0 / 3.0), j(-2.0 / 3.0));
    let sz = z.sqrt();
    AiryOscillatory {
        ai: sz / 3.0 * (jp1 + jm1),
        ai_prime: z / 3.0 * (jp2 - jm2),
        bi: sz / SQRT3 * (jm1 - jp1),
        bi_prime: z / SQRT3 * (jm2 + jp2),
    }
}
