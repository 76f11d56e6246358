use serde::Serialize;

use crate::error::Result;
use crate::systems::RadialFunction;
use super::quadrature::{integrate_halfline, QuadratureRule};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OverlapMatrix {
    pub matrix: Vec<Vec<f64>>,
    /// Largest entrywise deviation from the identity.
    pub max_identity_deviation: f64,
    pub warnings: Vec<String>,
}

/// Gram matrix `∫ fᵢ fⱼ`, each entry integrated with a rule matched to the
/// product's decay class. Symmetrized by averaging.
pub fn overlap_matrix(states: &[&dyn RadialFunction]) -> Result<OverlapMatrix> {
    let n = states.len();
    let mut m = vec![vec![0.0; n]; n];
    let mut warnings = Vec::new();
    for i in 0..n {
        for j in i..n {
            let rule = QuadratureRule::for_decay(states[i].decay().product(states[j].decay()))?;
            let r = integrate_halfline(|x| states[i].value(x) * states[j].value(x), &rule);
            if let Some(w) = r.warning {
                warnings.push(format!("entry ({i},{j}): {w}"));
            }
            m[i][j] = r.value;
            m[j][i] = r.value;
        }
    }
    let mut dev = 0.0f64;
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let id = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((v - id).abs());
        }
    }
    Ok(OverlapMatrix { matrix: m, max_identity_deviation: dev, warnings })
}

/// `∫ f²`.
pub fn norm_squared(f: &dyn RadialFunction) -> Result<f64> {
    let rule = QuadratureRule::for_decay(f.decay().product(f.decay()))?;
    Ok(integrate_halfline(|x| f.value(x).powi(2), &rule).value)
}
