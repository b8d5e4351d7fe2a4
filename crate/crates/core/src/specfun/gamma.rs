//! Gamma-family functions.
//!
//! Two independent routes are kept on purpose: a Lanczos fit (g = 7, n = 9)
//! for `Gamma` and `1/Gamma`, and a shifted Stirling series for `ln Gamma`
//! and the digamma function. The Stirling route gives the branch of
//! `ln Gamma` that is continuous on the closed right half-plane, which the
//! phase code relies on.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// `ln Gamma(z)` from the Lanczos sum, valid for `Re z >= 0.5`.
fn lanczos_ln_gamma(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + sum.ln()
}

/// Reciprocal Gamma function `1/Gamma(z)`; entire, so zero at the poles of Gamma.
pub fn recip_gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
        let s = (PI * z).sin();
        if s == Complex64::new(0.0, 0.0) {
            return s;
        }
        s * lanczos_ln_gamma(1.0 - z).exp() / PI
    } else {
        (-lanczos_ln_gamma(z)).exp()
    }
}

/// Complex Gamma function via the reflection-safe reciprocal.
pub fn gamma_complex(z: Complex64) -> Complex64 {
    1.0 / recip_gamma_complex(z)
}

/// Real Gamma function.
pub fn gamma(x: f64) -> f64 {
    if x >= 0.5 {
        lanczos_ln_gamma(Complex64::new(x, 0.0)).re.exp()
    } else {
        PI / ((PI * x).sin() * gamma(1.0 - x))
    }
}

// B_{2k} / (2k (2k - 1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

// B_{2k} / (2k) for k = 1..8
const DIGAMMA_ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

const SHIFT_TARGET: f64 = 12.0;

fn shift_count(z: Complex64) -> usize {
    if z.re >= SHIFT_TARGET {
        0
    } else {
        (SHIFT_TARGET - z.re).ceil() as usize
    }
}

/// Branch of `ln Gamma(z)` continuous on `Re z >= 0` (excluding `z = 0`)
/// and real on the positive axis.
///
/// Panics if `Re z < 0`, where this branch is not defined.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    assert!(z.re >= 0.0 && z != Complex64::new(0.0, 0.0), "ln_gamma_complex needs Re z >= 0, z != 0");
    let n = shift_count(z);
    let mut correction = Complex64::new(0.0, 0.0);
    for j in 0..n {
        correction += (z + j as f64).ln();
    }
    let w = z + n as f64;
    let w_inv = 1.0 / w;
    let w_inv2 = w_inv * w_inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = w_inv;
    for c in STIRLING {
        series += c * pow;
        pow *= w_inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + series - correction
}

/// Digamma function `psi(z) = Gamma'(z) / Gamma(z)` for `Re z >= 0`, `z != 0`.
pub fn digamma_complex(z: Complex64) -> Complex64 {
    assert!(z.re >= 0.0 && z != Complex64::new(0.0, 0.0), "digamma_complex needs Re z >= 0, z != 0");
    let n = shift_count(z);
    let mut correction = Complex64::new(0.0, 0.0);
    for j in 0..n {
        correction += 1.0 / (z + j as f64);
    }
    let w = z + n as f64;
    let w_inv2 = 1.0 / (w * w);
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = w_inv2;
    for c in DIGAMMA_ASYMP {
        series += c * pow;
        pow *= w_inv2;
    }
    w.ln() - 0.5 / w - series - correction
}
