use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::specfun::{ln_gamma, ComplexValue};
use crate::specfun::laguerre_value;
use super::tridiag::tridiagonal_eigenvalues;

/// Contributions from the outermost nodes above this fraction of the total
/// suggest the declared decay class is wrong.
pub const TAIL_WARNING: f64 = 1e-6;

pub const EXPONENTIAL_ORDER: usize = 64;
pub const GAUSSIAN_ORDER: usize = 200;

/// Declared tail of an integrand: `x^power · e^{−rate·x}` or
/// `x^power · e^{−rate·x²}`. The power describes the behaviour at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecayClass {
    Exponential { rate: f64, power: f64 },
    Gaussian { rate: f64, power: f64 },
}

impl DecayClass {
    /// Decay class of the product of two integrands.
    pub fn product(self, other: DecayClass) -> DecayClass {
        use DecayClass::*;
        match (self, other) {
            (Exponential { rate: a, power: p }, Exponential { rate: b, power: q }) => Exponential { rate: a + b, power: p + q },
            (Gaussian { rate: a, power: p }, Gaussian { rate: b, power: q }) => Gaussian { rate: a + b, power: p + q },
            (Gaussian { rate, power: p }, Exponential { power: q, .. })
            | (Exponential { power: q, .. }, Gaussian { rate, power: p }) => Gaussian { rate, power: p + q },
        }
    }

    pub fn power(&self) -> f64 {
        match *self {
            DecayClass::Exponential { power, .. } | DecayClass::Gaussian { power, .. } => power,
        }
    }

    /// Same tail, different power at the origin.
    pub fn with_power(self, power: f64) -> DecayClass {
        match self {
            DecayClass::Exponential { rate, .. } => DecayClass::Exponential { rate, power },
            DecayClass::Gaussian { rate, .. } => DecayClass::Gaussian { rate, power },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleVariant {
    GaussLaguerreWeighted,
    MappedGaussLegendre,
}

/// Nodes and folded weights for `∫₀^∞ f`: the weight function is already
/// divided out, so `Σ wᵢ f(xᵢ)` approximates the integral of `f` itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
    pub variant: RuleVariant,
}

/// Result of a half-line integration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Integral<T> {
    pub value: T,
    /// Share of the total carried by the outermost nodes.
    pub tail_fraction: f64,
    pub warning: Option<String>,
}

impl QuadratureRule {
    /// Gauss–Laguerre rule for `∫₀^∞ y^α e^{−y/scale} g(y) dy`, exact for
    /// polynomial `g` of degree up to `2·order − 1`.
    pub fn gauss_laguerre(order: usize, alpha: f64, scale: f64) -> Result<Self> {
        if order == 0 || order > 150 {
            return Err(domain(format!("Gauss-Laguerre order must be in 1..=150, got {order}")));
        }
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(domain(format!("Gauss-Laguerre needs alpha > -1, got {alpha}")));
        }
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(domain(format!("Gauss-Laguerre needs a positive scale, got {scale}")));
        }
        // Golub–Welsch Jacobi matrix for the Laguerre weight.
        let diag: Vec<f64> = (0..order).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
        let off: Vec<f64> = (1..order).map(|i| (i as f64 * (i as f64 + alpha)).sqrt()).collect();
        let mut nodes = tridiagonal_eigenvalues(&diag, &off, order)?;
        let n = order as u32;
        let ln_norm = ln_gamma(order as f64 + alpha + 1.0)? - ln_gamma(order as f64 + 1.0)?;
        let mut weights = Vec::with_capacity(order);
        for x in nodes.iter_mut() {
            for _ in 0..3 {
                let p = laguerre_value(n, alpha, *x);
                let dp = -laguerre_value(n - 1, alpha + 1.0, *x);
                if dp == 0.0 {
                    break;
                }
                let step = p / dp;
                *x -= step;
                if step.abs() <= 1e-16 * x.abs() {
                    break;
                }
            }
            let dp = laguerre_value(n - 1, alpha + 1.0, *x);
            // wᵢ eˣ x^{−α} with wᵢ = Γ(n+α+1) / (n! xᵢ L_n'(xᵢ)²)
            let ln_w = scale.ln() + ln_norm - (1.0 + alpha) * x.ln() - 2.0 * dp.abs().ln() + *x;
            weights.push(ln_w.exp());
        }
        for x in nodes.iter_mut() {
            *x *= scale;
        }
        Ok(QuadratureRule { nodes, weights, order, variant: RuleVariant::GaussLaguerreWeighted })
    }

    /// Gauss–Legendre on `(0,1)` pulled back through `y = c·u/(1−u)`,
    /// `u = s^g`. The exponent `g` is chosen so that an integrand behaving
    /// like `y^power` at the origin becomes a polynomial in `s` there.
    pub fn mapped_gauss_legendre(order: usize, power: f64, width: f64) -> Result<Self> {
        if order < 2 {
            return Err(domain("mapped Gauss-Legendre needs order >= 2"));
        }
        if !(power > -1.0) || !power.is_finite() {
            return Err(domain(format!("mapped Gauss-Legendre needs power > -1, got {power}")));
        }
        if !(width > 0.0) || !width.is_finite() {
            return Err(domain(format!("mapped Gauss-Legendre needs positive width, got {width}")));
        }
        let m = (power + 1.0).ceil().max(1.0);
        let g = m / (power + 1.0);
        let (t, w) = gauss_legendre(order)?;
        let mut nodes = Vec::with_capacity(order);
        let mut weights = Vec::with_capacity(order);
        for (ti, wi) in t.iter().zip(&w) {
            let s = 0.5 * (ti + 1.0);
            let u = s.powf(g);
            let y = width * u / (1.0 - u);
            let jac = width * g * s.powf(g - 1.0) / ((1.0 - u) * (1.0 - u));
            nodes.push(y);
            weights.push(0.5 * wi * jac);
        }
        Ok(QuadratureRule { nodes, weights, order, variant: RuleVariant::MappedGaussLegendre })
    }

    /// Rule matched to the declared decay class.
    pub fn for_decay(class: DecayClass) -> Result<Self> {
        match class {
            DecayClass::Exponential { rate, power } => Self::gauss_laguerre(EXPONENTIAL_ORDER, power, 1.0 / rate),
            DecayClass::Gaussian { rate, power } => {
                // put the middle of the map near the bulk of x^p e^{−rate x²}
                let width = ((power.max(1.0) + 1.0) / (2.0 * rate)).sqrt();
                Self::mapped_gauss_legendre(GAUSSIAN_ORDER, power, width)
            }
        }
    }

    fn tail_start(&self) -> usize {
        self.order - (self.order / 20).max(1)
    }
}

/// Nodes and weights of the `order`-point Gauss–Legendre rule on `[−1, 1]`.
pub(crate) fn gauss_legendre(order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        let mut converged = false;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                converged = true;
                break;
            }
        }
        if !converged {
            let (_, d) = legendre_with_derivative(n, x);
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
        return Err(Error::Solver(format!("Gauss-Legendre construction failed at order {order}")));
    }
    Ok((nodes, weights))
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// `∫₀^∞ f` with the given rule.
pub fn integrate_halfline(f: impl Fn(f64) -> f64, rule: &QuadratureRule) -> Integral<f64> {
    let tail_at = rule.tail_start();
    let mut total = 0.0;
    let mut tail = 0.0;
    let mut scale = 0.0;
    for (i, (x, w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let c = w * f(*x);
        let c = if c.is_finite() { c } else { 0.0 };
        total += c;
        scale += c.abs();
        if i >= tail_at {
            tail += c.abs();
        }
    }
    let tail_fraction = if scale > 0.0 { tail / scale } else { 0.0 };
    Integral { value: total, tail_fraction, warning: tail_warning(tail_fraction) }
}

/// Complex-valued variant of [`integrate_halfline`].
pub fn integrate_halfline_complex(f: impl Fn(f64) -> ComplexValue, rule: &QuadratureRule) -> Integral<ComplexValue> {
    let tail_at = rule.tail_start();
    let mut total = ComplexValue::new(0.0, 0.0);
    let mut tail = 0.0;
    let mut scale = 0.0;
    for (i, (x, w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let c = f(*x) * *w;
        total += c;
        scale += c.norm();
        if i >= tail_at {
            tail += c.norm();
        }
    }
    let tail_fraction = if scale > 0.0 { tail / scale } else { 0.0 };
    Integral { value: total, tail_fraction, warning: tail_warning(tail_fraction) }
}

fn tail_warning(fraction: f64) -> Option<String> {
    (fraction > TAIL_WARNING).then(|| {
        format!("outermost nodes carry {fraction:.2e} of the integral; declared decay class may be wrong")
    })
}
