use std::f64::consts::PI;

use crate::error::{domain, Result};

// Lanczos approximation, g = 7, nine coefficients. Relative accuracy ~1e-15
// over the positive real axis.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// `ln Γ(x)` for `x > 0`.
///
/// Arguments below one half go through the reflection formula so the
/// Lanczos sum is only ever evaluated where it is accurate.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("ln_gamma requires a finite positive argument, got {x}")));
    }
    Ok(ln_gamma_positive(x))
}

fn ln_gamma_positive(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) Γ(1-x) = π / sin(πx); for 0 < x < 1/2 every factor is positive.
        (PI / (PI * x).sin()).ln() - ln_gamma_positive(1.0 - x)
    } else {
        let x = x - 1.0;
        let mut sum = LANCZOS_COEF[0];
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            sum += c / (x + i as f64);
        }
        let t = x + LANCZOS_G + 0.5;
        LN_SQRT_2PI + (x + 0.5) * t.ln() - t + sum.ln()
    }
}

/// `Γ(x)` for `x > 0`, evaluated through [`ln_gamma`] so that arguments of
/// a few hundred do not overflow intermediate products.
pub fn gamma_fn(x: f64) -> Result<f64> {
    Ok(ln_gamma(x)?.exp())
}
