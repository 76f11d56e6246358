use crate::error::{Error, Result};

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below `x`
/// (Sturm sequence count).
pub(crate) fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let b2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { b2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The lowest `count` eigenvalues of the symmetric tridiagonal matrix with
/// diagonal `diag` and off-diagonal `off` (`off.len() == diag.len() − 1`),
/// ascending, by bisection on Sturm counts.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || off.len() + 1 != n {
        return Err(Error::Solver(format!("bad tridiagonal shape: {} diagonal, {} off-diagonal", n, off.len())));
    }
    if count > n {
        return Err(Error::Solver(format!("requested {count} eigenvalues of a {n}x{n} matrix")));
    }
    if diag.iter().chain(off).any(|v| !v.is_finite()) {
        return Err(Error::Solver("non-finite matrix entry".into()));
    }
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let span = (hi - lo).max(f64::MIN_POSITIVE);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let (mut a, mut b) = (lo, hi);
        let mut iters = 0;
        while b - a > 4.0 * f64::EPSILON * (a.abs().max(b.abs())) + 1e-300 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diag, off, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
            iters += 1;
            if iters > 400 {
                return Err(Error::Solver(format!(
                    "bisection for eigenvalue {k} stalled at width {:e} (span {span:e})",
                    b - a
                )));
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn discrete_laplacian_spectrum() {
        // eigenvalues of tridiag(-1, 2, -1) of size m: 2 - 2cos(kπ/(m+1))
        let m = 50;
        let diag = vec![2.0; m];
        let off = vec![-1.0; m - 1];
        let ev = tridiagonal_eigenvalues(&diag, &off, 5).unwrap();
        for (k, e) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * PI / (m + 1) as f64).cos();
            assert!((e - want).abs() < 1e-13, "k={k}: {e} vs {want}");
        }
    }

    #[test]
    fn diagonal_matrix() {
        let ev = tridiagonal_eigenvalues(&[3.0, -1.0, 2.0], &[0.0, 0.0], 3).unwrap();
        assert_eq!(ev.len(), 3);
        for (got, want) in ev.iter().zip([-1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(tridiagonal_eigenvalues(&[1.0, 2.0], &[], 1).is_err());
        assert!(tridiagonal_eigenvalues(&[1.0], &[], 2).is_err());
        assert!(tridiagonal_eigenvalues(&[f64::NAN, 1.0], &[0.0], 1).is_err());
    }
}
