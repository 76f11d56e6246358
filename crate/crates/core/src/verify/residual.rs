use serde::Serialize;

use crate::systems::{RadialFunction, RadialOperator};

pub const RESIDUAL_POINTS: usize = 200;

/// A geometric (`lo·(hi/lo)^{i/(points−1)}`) or uniform grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub kind: &'static str,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn geometric(lo: f64, hi: f64, points: usize) -> Self {
        GridSpec { kind: "geometric", lo, hi, points }
    }

    /// `[1e−3, 40ν]` for a Coulomb state with effective principal number `ν`.
    pub fn coulomb(nu: f64) -> Self {
        Self::geometric(1e-3, 40.0 * nu, RESIDUAL_POINTS)
    }

    /// `[1e−3, 8]` for oscillator states.
    pub fn oscillator() -> Self {
        Self::geometric(1e-3, 8.0, RESIDUAL_POINTS)
    }

    /// Evenly spaced points on `[lo, hi]`.
    pub fn uniform(lo: f64, hi: f64, points: usize) -> Self {
        GridSpec { kind: "uniform", lo, hi, points }
    }

    pub fn points(&self) -> Vec<f64> {
        match self.kind {
            "uniform" if self.points > 1 => {
                let h = (self.hi - self.lo) / (self.points - 1) as f64;
                (0..self.points).map(|i| self.lo + h * i as f64).collect()
            }
            "uniform" => vec![self.lo],
            _ => geometric_grid(self.lo, self.hi, self.points),
        }
    }
}

pub fn geometric_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    let ratio = (hi / lo).ln() / (points - 1) as f64;
    (0..points).map(|i| lo * (ratio * i as f64).exp()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub max_abs: f64,
    /// `max|residual| / max|state|` over the grid.
    pub max_rel: f64,
    pub grid: GridSpec,
}

/// Evaluates the operator on the state over the grid.
pub fn residual_scan(op: &RadialOperator, state: &dyn RadialFunction, grid: &GridSpec) -> ResidualReport {
    let mut max_abs = 0.0f64;
    let mut max_state = 0.0f64;
    for x in grid.points() {
        let s = state.sample(x);
        let r = op.apply(x, s);
        max_abs = max_abs.max(if r.is_finite() { r.abs() } else { f64::INFINITY });
        max_state = max_state.max(s.value.abs());
    }
    let max_rel = if max_state > 0.0 { max_abs / max_state } else { f64::INFINITY };
    ResidualReport { max_abs, max_rel, grid: *grid }
}
