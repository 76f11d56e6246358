//! Verification engines: half-line quadrature, ODE residuals, overlap
//! matrices, a finite-difference eigenvalue oracle and degeneracy grouping.

mod degeneracy;
mod fd;
mod overlap;
mod quadrature;
mod residual;
mod tridiag;

pub use degeneracy::{degeneracy_report, DegeneracyCluster, DegeneracyReport, LabeledLevel};
pub use fd::{compare_spectra, fd_eigensolve, FdSpectrum, SpectrumComparison, SpectrumRow};
pub use overlap::{norm_squared, overlap_matrix, OverlapMatrix};
pub use quadrature::{
    integrate_halfline, integrate_halfline_complex, DecayClass, Integral, QuadratureRule, RuleVariant, TAIL_WARNING,
};
pub use residual::{geometric_grid, residual_scan, GridSpec, ResidualReport, RESIDUAL_POINTS};
pub use tridiag::tridiagonal_eigenvalues;
