use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Complex scalar used throughout the continuum code.
pub type ComplexValue = Complex64;

const MAX_TERMS: usize = 5000;
const TERM_TOL: f64 = 1e-17;
// Acceptable relative rounding estimate for a plain series sum. Above this
// the sum is recomputed by continuation.
const CANCEL_TOL: f64 = 1e-13;
const MAX_STEP: f64 = 2.0;

/// Confluent hypergeometric function `₁F₁(a; b; z)` (Kummer's `M`).
///
/// The Taylor series is summed directly, after the Kummer transformation
/// `₁F₁(a;b;z) = e^z ₁F₁(b−a;b;−z)` when `Re z < 0`. When the sum loses more
/// than a few digits to cancellation (large imaginary `z`), the value is
/// instead carried out from the unit circle by Taylor stepping of Kummer's
/// equation `z M'' + (b − z) M' − a M = 0`.
pub fn hyp1f1(a: ComplexValue, b: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    Ok(hyp1f1_with_derivative(a, b, z)?.0)
}

/// `(M, dM/dz, d²M/dz²)` at `z`.
pub(crate) fn hyp1f1_jet(
    a: ComplexValue,
    b: ComplexValue,
    z: ComplexValue,
) -> Result<(ComplexValue, ComplexValue, ComplexValue)> {
    let (m, dm) = hyp1f1_with_derivative(a, b, z)?;
    let d2 = if z.norm() == 0.0 {
        a * (a + 1.0) / (b * (b + 1.0))
    } else {
        ((z - b) * dm + a * m) / z
    };
    Ok((m, dm, d2))
}

/// `(M, dM/dz)` at `z`.
pub(crate) fn hyp1f1_with_derivative(
    a: ComplexValue,
    b: ComplexValue,
    z: ComplexValue,
) -> Result<(ComplexValue, ComplexValue)> {
    check_args(a, b, z)?;
    if z.re < 0.0 {
        // M'(a,b,z) = e^z [M(b−a,b,−z) − M'(b−a,b,−z)]
        let (m, dm) = unreflected(b - a, b, -z)?;
        let ez = z.exp();
        Ok((ez * m, ez * (m - dm)))
    } else {
        unreflected(a, b, z)
    }
}

fn check_args(a: ComplexValue, b: ComplexValue, z: ComplexValue) -> Result<()> {
    let finite = |c: ComplexValue| c.re.is_finite() && c.im.is_finite();
    if !(finite(a) && finite(b) && finite(z)) {
        return Err(domain("hyp1f1 arguments must be finite"));
    }
    if b.im == 0.0 && b.re <= 0.0 && b.re.fract() == 0.0 {
        return Err(domain(format!("hyp1f1 undefined for b = {} (nonpositive integer)", b.re)));
    }
    Ok(())
}

// Series first, continuation if the series cancels badly.
fn unreflected(a: ComplexValue, b: ComplexValue, z: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    match series(a, b, z) {
        Ok(s) if s.rounding <= CANCEL_TOL => Ok((s.value, s.derivative)),
        Ok(_) | Err(Error::Accuracy { .. }) => continued(a, b, z),
        Err(e) => Err(e),
    }
}

struct SeriesSum {
    value: ComplexValue,
    derivative: ComplexValue,
    rounding: f64,
}

fn series(a: ComplexValue, b: ComplexValue, z: ComplexValue) -> Result<SeriesSum> {
    let one = Complex64::new(1.0, 0.0);
    let mut term = one;
    let mut sum = one;
    // derivative series: Σ (a)_{m+1}/(b)_{m+1} z^m/m!
    let mut dterm = a / b;
    let mut dsum = dterm;
    let mut biggest = 1.0f64;
    let mut small_run = 0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        term *= (a + mf) / (b + mf) * z / (mf + 1.0);
        dterm *= (a + mf + 1.0) / (b + mf + 1.0) * z / (mf + 1.0);
        sum += term;
        dsum += dterm;
        biggest = biggest.max(term.norm()).max(dterm.norm());
        if term.norm() == 0.0 && dterm.norm() == 0.0 {
            small_run = 2;
        } else if term.norm() <= TERM_TOL * sum.norm() && dterm.norm() <= TERM_TOL * dsum.norm() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 2 {
            let scale = sum.norm().min(dsum.norm().max(f64::MIN_POSITIVE));
            let rounding = f64::EPSILON * biggest / scale.max(f64::MIN_POSITIVE);
            return Ok(SeriesSum { value: sum, derivative: dsum, rounding });
        }
    }
    Err(Error::Accuracy { attained: term.norm() / sum.norm(), target: TERM_TOL })
}

/// Continuation of `(M, M')` from `z/|z|` out to `z` along the ray, with no
/// Kummer reflection. Stable when `M` is the dominant solution along the
/// path, which holds for `Re z ≥ 0` and also on the negative real axis.
pub(crate) fn continued(a: ComplexValue, b: ComplexValue, z: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    check_args(a, b, z)?;
    let r = z.norm();
    if r <= 1.0 {
        let s = series(a, b, z)?;
        return Ok((s.value, s.derivative));
    }
    let dir = z / r;
    let start = series(a, b, dir)?;
    let (mut m, mut dm) = (start.value, start.derivative);
    let mut t = 1.0;
    while t < r {
        let step = (0.5 * t).min(MAX_STEP).min(r - t);
        let zc = dir * t;
        let h = dir * step;
        let (nm, ndm) = taylor_step(a, b, zc, h, m, dm)?;
        m = nm;
        dm = ndm;
        t += step;
    }
    if !(m.re.is_finite() && m.im.is_finite() && dm.re.is_finite() && dm.im.is_finite()) {
        return Err(Error::Accuracy { attained: f64::INFINITY, target: CANCEL_TOL });
    }
    Ok((m, dm))
}

// One Taylor step of Kummer's equation about zc:
// zc (m+1)(m+2) c_{m+2} = (m+a) c_m − (m+1)(m+b−zc) c_{m+1}
fn taylor_step(
    a: ComplexValue,
    b: ComplexValue,
    zc: ComplexValue,
    h: ComplexValue,
    m0: ComplexValue,
    dm0: ComplexValue,
) -> Result<(ComplexValue, ComplexValue)> {
    let (mut c0, mut c1) = (m0, dm0);
    let mut hp = h; // h^(m+1)
    let mut val = m0 + c1 * h;
    let mut der = c1;
    let mut small_run = 0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        let c2 = ((a + mf) * c0 - (mf + 1.0) * (b + mf - zc) * c1) / (zc * (mf + 1.0) * (mf + 2.0));
        let dterm = c2 * (mf + 2.0) * hp;
        hp *= h;
        let vterm = c2 * hp;
        val += vterm;
        der += dterm;
        if vterm.norm() <= TERM_TOL * val.norm() && dterm.norm() <= TERM_TOL * der.norm() {
            small_run += 1;
            if small_run >= 3 {
                return Ok((val, der));
            }
        } else {
            small_run = 0;
        }
        c0 = c1;
        c1 = c2;
    }
    Err(Error::Accuracy { attained: (c1 * hp).norm() / val.norm(), target: TERM_TOL })
}
