//! Exact bound states of the radial Coulomb problem in `d ≥ 2` dimensions and
//! the radial isotropic oscillator in `D ≥ 1` dimensions.
//!
//! Everything is dimensionless: radii are `y = r/r₀` and `Y = R/R₀`, energies
//! are `E/E₀` and `F/F₀`. The scales only enter the normalization constants.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::specfun::{laguerre_derivative, ln_gamma};
use crate::verify::DecayClass;

/// Length and energy units of the two systems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalScales {
    pub r0: f64,
    #[serde(rename = "R0")]
    pub osc_r0: f64,
    #[serde(rename = "E0")]
    pub e0: f64,
    #[serde(rename = "F0")]
    pub f0: f64,
}

impl Default for PhysicalScales {
    fn default() -> Self {
        PhysicalScales { r0: 1.0, osc_r0: 1.0, e0: 1.0, f0: 1.0 }
    }
}

impl PhysicalScales {
    pub fn new(r0: f64, osc_r0: f64, e0: f64, f0: f64) -> Result<Self> {
        for (name, v) in [("r0", r0), ("R0", osc_r0), ("E0", e0), ("F0", f0)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("scale {name} must be finite and positive, got {v}")));
            }
        }
        Ok(PhysicalScales { r0, osc_r0, e0, f0 })
    }
}

/// Quantum numbers of a Coulomb bound state. For `d = 2`, `l` is the modulus
/// of the angular momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoulombQN {
    pub d: u32,
    pub n: u32,
    pub l: u32,
}

impl CoulombQN {
    pub fn new(d: u32, n: u32, l: u32) -> Result<Self> {
        let qn = CoulombQN { d, n, l };
        qn.validate()?;
        Ok(qn)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(domain(format!("Coulomb dimension must be at least 2, got d={}", self.d)));
        }
        if self.n < self.l + 1 {
            return Err(domain(format!("Coulomb state needs n >= l+1, got n={} l={}", self.n, self.l)));
        }
        Ok(())
    }

    /// `γ = (d−3)/2`
    pub fn gamma(&self) -> f64 {
        (self.d as f64 - 3.0) / 2.0
    }
}

/// Quantum numbers of an oscillator bound state. For `D = 1` only `L ∈ {0, 1}`
/// exists (the even and odd parity substacks).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OscillatorQN {
    #[serde(rename = "D")]
    pub dim: u32,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "L")]
    pub l: u32,
}

impl OscillatorQN {
    pub fn new(dim: u32, n: u32, l: u32) -> Result<Self> {
        let qn = OscillatorQN { dim, n, l };
        qn.validate()?;
        Ok(qn)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 1 {
            return Err(domain("oscillator dimension must be at least 1"));
        }
        if self.dim == 1 && self.l > 1 {
            return Err(domain(format!("D=1 admits only L=0 and L=1, got L={}", self.l)));
        }
        if self.n < self.l {
            return Err(domain(format!("oscillator state needs N >= L, got N={} L={}", self.n, self.l)));
        }
        if !(self.n - self.l).is_multiple_of(2) {
            return Err(domain(format!("oscillator state needs N-L even, got N={} L={}", self.n, self.l)));
        }
        Ok(())
    }

    /// `Γ = (D−3)/2`
    pub fn gamma(&self) -> f64 {
        (self.dim as f64 - 3.0) / 2.0
    }
}

/// Value and first two derivatives of a real radial function.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Sample {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Value and first three derivatives; the third is needed to differentiate
/// ladder images twice.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Jet {
    pub v: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl Jet {
    pub(crate) fn mul(self, o: Jet) -> Jet {
        Jet {
            v: self.v * o.v,
            d1: self.d1 * o.v + self.v * o.d1,
            d2: self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
            d3: self.d3 * o.v + 3.0 * self.d2 * o.d1 + 3.0 * self.d1 * o.d2 + self.v * o.d3,
        }
    }

    pub(crate) fn scale(self, c: f64) -> Jet {
        Jet { v: c * self.v, d1: c * self.d1, d2: c * self.d2, d3: c * self.d3 }
    }

    /// `exp(φ)` from the jet of `φ`.
    pub(crate) fn exp_of(phi: Jet) -> Jet {
        let e = phi.v.exp();
        Jet {
            v: e,
            d1: phi.d1 * e,
            d2: (phi.d2 + phi.d1 * phi.d1) * e,
            d3: (phi.d3 + 3.0 * phi.d1 * phi.d2 + phi.d1.powi(3)) * e,
        }
    }

    pub(crate) fn sample(self) -> Sample {
        Sample { value: self.v, d1: self.d1, d2: self.d2 }
    }
}

/// A real function on the half-line with analytic derivatives.
pub trait RadialFunction: Send + Sync {
    fn sample(&self, x: f64) -> Sample;

    /// Declared tail behaviour, used to pick a quadrature rule.
    fn decay(&self) -> DecayClass;

    fn value(&self, x: f64) -> f64 {
        self.sample(x).value
    }
}

/// Which system a state belongs to, with possibly non-integer (starred)
/// quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "system", rename_all = "snake_case")]
pub enum StateLabel {
    Coulomb { d: f64, n: f64, l: f64 },
    Oscillator {
        #[serde(rename = "D")]
        dim: f64,
        #[serde(rename = "N")]
        n: f64,
        #[serde(rename = "L")]
        l: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum ClosedForm {
    // c y^{ℓ+1} e^{−y/2ν} L_k^{(2ℓ+1)}(y/ν)
    Coulomb { ell: f64, nu: f64, k: u32, norm: f64 },
    // C Y^{ℓ+1} e^{−Y²/2} L_k^{(ℓ+1/2)}(Y²)
    Oscillator { ell: f64, k: u32, norm: f64 },
}

/// A normalized bound state together with its energy (units `E₀` or `F₀`).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialState {
    label: StateLabel,
    energy: f64,
    form: ClosedForm,
}

impl RadialState {
    /// Coulomb-type closed form with effective angular momentum `ell = l+γ`,
    /// effective principal number `nu = n+γ` and Laguerre degree `k`.
    pub(crate) fn coulomb_form(label: StateLabel, energy: f64, d: f64, ell: f64, nu: f64, k: u32, r0: f64) -> Result<Self> {
        if !(ell > -1.0) {
            return Err(domain(format!("Coulomb form needs l+gamma > -1, got {ell}")));
        }
        let kf = k as f64;
        // c² = k! / (2 r₀^d ν^{2ℓ+4} Γ(ν+ℓ+1))
        let ln_c2 = ln_gamma(kf + 1.0)? - (2.0f64).ln() - d * r0.ln() - (2.0 * ell + 4.0) * nu.ln() - ln_gamma(nu + ell + 1.0)?;
        let norm = (0.5 * ln_c2).exp();
        Ok(RadialState { label, energy, form: ClosedForm::Coulomb { ell, nu, k, norm } })
    }

    /// Oscillator-type closed form with `ell = L+Γ` and degree `k = (N−L)/2`.
    pub(crate) fn oscillator_form(label: StateLabel, energy: f64, dim: f64, ell: f64, k: u32, big_r0: f64) -> Result<Self> {
        if !(ell > -1.5) {
            return Err(domain(format!("oscillator form needs L+Gamma > -3/2, got {ell}")));
        }
        let kf = k as f64;
        // C² = 2 k! / (R₀^D Γ(k+ℓ+3/2))
        let ln_c2 = (2.0f64).ln() + ln_gamma(kf + 1.0)? - dim * big_r0.ln() - ln_gamma(kf + ell + 1.5)?;
        let norm = (0.5 * ln_c2).exp();
        Ok(RadialState { label, energy, form: ClosedForm::Oscillator { ell, k, norm } })
    }

    pub fn label(&self) -> StateLabel {
        self.label
    }

    /// Eigenvalue in `E₀` (Coulomb) or `F₀` (oscillator) units.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Number of interior zeros, equal to the Laguerre degree.
    pub fn node_count(&self) -> u32 {
        match self.form {
            ClosedForm::Coulomb { k, .. } | ClosedForm::Oscillator { k, .. } => k,
        }
    }

    /// Effective angular momentum `ℓ` in the barrier `ℓ(ℓ+1)/x²`.
    pub fn effective_l(&self) -> f64 {
        match self.form {
            ClosedForm::Coulomb { ell, .. } | ClosedForm::Oscillator { ell, .. } => ell,
        }
    }

    pub fn norm_constant(&self) -> f64 {
        match self.form {
            ClosedForm::Coulomb { norm, .. } | ClosedForm::Oscillator { norm, .. } => norm,
        }
    }

    pub(crate) fn jet(&self, x: f64) -> Jet {
        match self.form {
            ClosedForm::Coulomb { ell, nu, k, norm } => {
                let p = ell + 1.0;
                let phi = Jet {
                    v: p * x.ln() - x / (2.0 * nu),
                    d1: p / x - 1.0 / (2.0 * nu),
                    d2: -p / (x * x),
                    d3: 2.0 * p / (x * x * x),
                };
                let alpha = 2.0 * ell + 1.0;
                let t = x / nu;
                let q = Jet {
                    v: laguerre_derivative(k, alpha, t, 0),
                    d1: laguerre_derivative(k, alpha, t, 1) / nu,
                    d2: laguerre_derivative(k, alpha, t, 2) / (nu * nu),
                    d3: laguerre_derivative(k, alpha, t, 3) / (nu * nu * nu),
                };
                Jet::exp_of(phi).mul(q).scale(norm)
            }
            ClosedForm::Oscillator { ell, k, norm } => {
                let p = ell + 1.0;
                let phi = Jet {
                    v: p * x.ln() - 0.5 * x * x,
                    d1: p / x - x,
                    d2: -p / (x * x) - 1.0,
                    d3: 2.0 * p / (x * x * x),
                };
                let alpha = ell + 0.5;
                let t = x * x;
                let l1 = laguerre_derivative(k, alpha, t, 1);
                let l2 = laguerre_derivative(k, alpha, t, 2);
                let l3 = laguerre_derivative(k, alpha, t, 3);
                let q = Jet {
                    v: laguerre_derivative(k, alpha, t, 0),
                    d1: 2.0 * x * l1,
                    d2: 2.0 * l1 + 4.0 * t * l2,
                    d3: 12.0 * x * l2 + 8.0 * x * t * l3,
                };
                Jet::exp_of(phi).mul(q).scale(norm)
            }
        }
    }
}

impl RadialFunction for RadialState {
    fn sample(&self, x: f64) -> Sample {
        self.jet(x).sample()
    }

    fn decay(&self) -> DecayClass {
        match self.form {
            ClosedForm::Coulomb { ell, nu, .. } => DecayClass::Exponential { rate: 1.0 / (2.0 * nu), power: ell + 1.0 },
            ClosedForm::Oscillator { ell, .. } => DecayClass::Gaussian { rate: 0.5, power: ell + 1.0 },
        }
    }
}

/// `E/E₀ = −1/(4(n+γ)²)`
pub fn coulomb_energy(qn: CoulombQN) -> Result<f64> {
    qn.validate()?;
    let nu = qn.n as f64 + qn.gamma();
    Ok(-1.0 / (4.0 * nu * nu))
}

/// Normalized `w_{d,n,l}(y)`.
pub fn coulomb_state(qn: CoulombQN, scales: &PhysicalScales) -> Result<RadialState> {
    let energy = coulomb_energy(qn)?;
    let g = qn.gamma();
    let label = StateLabel::Coulomb { d: qn.d as f64, n: qn.n as f64, l: qn.l as f64 };
    RadialState::coulomb_form(label, energy, qn.d as f64, qn.l as f64 + g, qn.n as f64 + g, qn.n - qn.l - 1, scales.r0)
}

/// `F/F₀ = 2N + 2Γ + 3`
pub fn oscillator_energy(qn: OscillatorQN) -> Result<f64> {
    qn.validate()?;
    Ok(2.0 * qn.n as f64 + 2.0 * qn.gamma() + 3.0)
}

/// Normalized `W_{D,N,L}(Y)` on the half-line.
pub fn oscillator_state(qn: OscillatorQN, scales: &PhysicalScales) -> Result<RadialState> {
    let energy = oscillator_energy(qn)?;
    let label = StateLabel::Oscillator { dim: qn.dim as f64, n: qn.n as f64, l: qn.l as f64 };
    RadialState::oscillator_form(label, energy, qn.dim as f64, qn.l as f64 + qn.gamma(), (qn.n - qn.l) / 2, scales.osc_r0)
}

/// The radial functional
/// `f ↦ −f″ + [centrifugal/x² + coulomb/x + quadratic·x² + constant − energy] f`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialOperator {
    pub centrifugal: f64,
    pub coulomb: f64,
    pub quadratic: f64,
    pub constant: f64,
    pub energy: f64,
}

impl RadialOperator {
    /// `−d² + ℓ(ℓ+1)/y² − 1/y − E`
    pub fn coulomb(ell: f64, energy: f64) -> Self {
        RadialOperator { centrifugal: ell * (ell + 1.0), coulomb: -1.0, quadratic: 0.0, constant: 0.0, energy }
    }

    /// `−d² + ℓ(ℓ+1)/Y² + Y² − F`
    pub fn oscillator(ell: f64, energy: f64) -> Self {
        RadialOperator { centrifugal: ell * (ell + 1.0), coulomb: 0.0, quadratic: 1.0, constant: 0.0, energy }
    }

    pub fn with_energy(self, energy: f64) -> Self {
        RadialOperator { energy, ..self }
    }

    pub fn potential(&self, x: f64) -> f64 {
        self.centrifugal / (x * x) + self.coulomb / x + self.quadratic * x * x + self.constant
    }

    pub fn apply(&self, x: f64, s: Sample) -> f64 {
        -s.d2 + (self.potential(x) - self.energy) * s.value
    }

    pub fn apply_complex(
        &self,
        x: f64,
        value: crate::specfun::ComplexValue,
        d2: crate::specfun::ComplexValue,
    ) -> crate::specfun::ComplexValue {
        -d2 + value * (self.potential(x) - self.energy)
    }
}

pub fn coulomb_operator(qn: CoulombQN, energy: f64) -> Result<RadialOperator> {
    qn.validate()?;
    Ok(RadialOperator::coulomb(qn.l as f64 + qn.gamma(), energy))
}

pub fn oscillator_operator(qn: OscillatorQN, energy: f64) -> Result<RadialOperator> {
    qn.validate()?;
    Ok(RadialOperator::oscillator(qn.l as f64 + qn.gamma(), energy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn unit() -> PhysicalScales {
        PhysicalScales::default()
    }

    #[test]
    fn coulomb_energies() {
        assert_eq!(coulomb_energy(CoulombQN { d: 3, n: 1, l: 0 }).unwrap(), -0.25);
        assert_eq!(coulomb_energy(CoulombQN { d: 2, n: 1, l: 0 }).unwrap(), -1.0);
        assert_relative_eq!(coulomb_energy(CoulombQN { d: 4, n: 2, l: 0 }).unwrap(), -1.0 / 25.0, max_relative = 1e-15);
        assert!(coulomb_energy(CoulombQN { d: 3, n: 2, l: 2 }).is_err());
        assert!(CoulombQN::new(1, 1, 0).is_err());
    }

    #[test]
    fn oscillator_energies() {
        assert_eq!(oscillator_energy(OscillatorQN { dim: 1, n: 0, l: 0 }).unwrap(), 1.0);
        assert_eq!(oscillator_energy(OscillatorQN { dim: 3, n: 0, l: 0 }).unwrap(), 3.0);
        assert_eq!(oscillator_energy(OscillatorQN { dim: 2, n: 0, l: 0 }).unwrap(), 2.0);
        assert!(oscillator_energy(OscillatorQN { dim: 3, n: 3, l: 0 }).is_err());
        assert!(OscillatorQN::new(1, 2, 2).is_err());
    }

    #[test]
    fn hydrogen_ground_state_closed_form() {
        let s = coulomb_state(CoulombQN { d: 3, n: 1, l: 0 }, &unit()).unwrap();
        for y in [0.5, 1.0, 2.0, 7.0] {
            let want = y * (-y / 2.0f64).exp() / 2f64.sqrt();
            assert_relative_eq!(s.value(y), want, max_relative = 1e-14);
        }
        assert_relative_eq!(s.value(2.0), 0.520_260_095_022_888_7, max_relative = 1e-13);
    }

    #[test]
    fn oscillator_ground_state_closed_form() {
        let s = oscillator_state(OscillatorQN { dim: 3, n: 0, l: 0 }, &unit()).unwrap();
        let c = (4.0 / PI.sqrt()).sqrt();
        for y in [0.3, 1.0, 2.5] {
            assert_relative_eq!(s.value(y), c * y * (-y * y / 2.0f64).exp(), max_relative = 1e-14);
        }
    }

    #[test]
    fn analytic_derivatives_match_differences() {
        let states = [
            coulomb_state(CoulombQN { d: 5, n: 4, l: 1 }, &unit()).unwrap(),
            oscillator_state(OscillatorQN { dim: 4, n: 6, l: 2 }, &unit()).unwrap(),
        ];
        for s in &states {
            for x in [0.4, 1.3, 2.2] {
                let h = 1e-4;
                let j = s.jet(x);
                let (p, m) = (s.jet(x + h), s.jet(x - h));
                assert_relative_eq!(j.d1, (p.v - m.v) / (2.0 * h), max_relative = 1e-6, epsilon = 1e-9);
                assert_relative_eq!(j.d2, (p.d1 - m.d1) / (2.0 * h), max_relative = 1e-6, epsilon = 1e-9);
                assert_relative_eq!(j.d3, (p.d2 - m.d2) / (2.0 * h), max_relative = 1e-6, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn eigen_residual_with_shifted_energy() {
        let qn = CoulombQN { d: 3, n: 1, l: 0 };
        let s = coulomb_state(qn, &unit()).unwrap();
        let exact = coulomb_operator(qn, s.energy()).unwrap();
        let shifted = exact.with_energy(1.0);
        for y in [0.5, 1.0, 5.0] {
            let smp = s.sample(y);
            assert!(exact.apply(y, smp).abs() < 1e-15);
            assert_relative_eq!(shifted.apply(y, smp), (s.energy() - 1.0) * smp.value, max_relative = 1e-12);
        }
    }

    #[test]
    fn oscillator_residual_shift() {
        let qn = OscillatorQN { dim: 1, n: 3, l: 1 };
        let s = oscillator_state(qn, &unit()).unwrap();
        let op = oscillator_operator(qn, s.energy() + 2.0).unwrap();
        for y in [0.2, 1.0, 3.0] {
            let smp = s.sample(y);
            assert_relative_eq!(op.apply(y, smp), -2.0 * smp.value, max_relative = 1e-10);
        }
    }

    #[test]
    fn scales_rescale_normalization() {
        let qn = CoulombQN { d: 4, n: 2, l: 1 };
        let a = coulomb_state(qn, &unit()).unwrap();
        let b = coulomb_state(qn, &PhysicalScales::new(2.0, 1.0, 1.0, 1.0).unwrap()).unwrap();
        assert_relative_eq!(a.value(1.7) / b.value(1.7), 4.0, max_relative = 1e-13);
        assert!(PhysicalScales::new(0.0, 1.0, 1.0, 1.0).is_err());
    }
}
