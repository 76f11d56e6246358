use serde::Serialize;

use crate::error::{Error, Result};
use super::tridiag::tridiagonal_eigenvalues;

/// Lowest eigenvalues of `−f″ + V f` on `(0, x_max)` with Dirichlet ends.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FdSpectrum {
    pub eigenvalues: Vec<f64>,
    pub grid_points: usize,
    pub truncation_radius: f64,
    pub spacing: f64,
}

/// Second-order central differences on `x_k = (k+1)h`, `h = x_max/(M+1)`,
/// diagonalized by Sturm bisection. Only the potential is consulted.
pub fn fd_eigensolve(potential: &dyn Fn(f64) -> f64, x_max: f64, count: usize, grid_points: usize) -> Result<FdSpectrum> {
    if !(x_max > 0.0) || grid_points < 3 || count == 0 || count > grid_points {
        return Err(Error::Solver(format!(
            "bad finite-difference setup: x_max={x_max}, grid_points={grid_points}, count={count}"
        )));
    }
    let h = x_max / (grid_points as f64 + 1.0);
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(grid_points);
    for k in 0..grid_points {
        let x = (k as f64 + 1.0) * h;
        let v = potential(x);
        if !v.is_finite() {
            return Err(Error::Solver(format!("potential not finite at x={x}")));
        }
        diag.push(2.0 * inv_h2 + v);
    }
    let off = vec![-inv_h2; grid_points - 1];
    let eigenvalues = tridiagonal_eigenvalues(&diag, &off, count)?;
    Ok(FdSpectrum { eigenvalues, grid_points, truncation_radius: x_max, spacing: h })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub analytic: f64,
    pub numeric: f64,
    pub absolute_error: f64,
    /// Error relative to `max(|analytic|, 1e−12)`.
    pub relative_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub rows: Vec<SpectrumRow>,
    pub grid_points: usize,
    pub truncation_radius: f64,
}

impl SpectrumComparison {
    pub fn max_relative_error(&self) -> f64 {
        self.rows.iter().map(|r| r.relative_error).fold(0.0, f64::max)
    }
}

/// Pairs analytic levels with numeric ones, both ascending. A constant
/// `offset` is added to every numeric level first.
pub fn compare_spectra(analytic: &[f64], fd: &FdSpectrum, offset: f64) -> SpectrumComparison {
    let mut a = analytic.to_vec();
    a.sort_by(|x, y| x.total_cmp(y));
    let rows = a
        .iter()
        .zip(&fd.eigenvalues)
        .map(|(&analytic, &num)| {
            let numeric = num + offset;
            let absolute_error = (numeric - analytic).abs();
            SpectrumRow { analytic, numeric, absolute_error, relative_error: absolute_error / analytic.abs().max(1e-12) }
        })
        .collect();
    SpectrumComparison { rows, grid_points: fd.grid_points, truncation_radius: fd.truncation_radius }
}
