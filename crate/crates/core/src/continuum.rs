//! Continuum solutions: Coulomb waves at `E > 0`, the inverted oscillator
//! `−W″ + [ℓ(ℓ+1)/Y² − Y²] W = F W`, and the quadratic map between them.
//!
//! No normalization is fixed for these waves. Every evaluator has unit leading
//! coefficient at the origin, and comparisons between waves are
//! proportionality fits.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::specfun::{hyp1f1_jet, ComplexValue};
use crate::systems::RadialOperator;
use crate::verify::GridSpec;

/// `+` or `−` in `e^{±i…}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WaveSign {
    Outgoing,
    Incoming,
}

impl WaveSign {
    fn sigma(self) -> f64 {
        match self {
            WaveSign::Outgoing => 1.0,
            WaveSign::Incoming => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "system", rename_all = "snake_case")]
pub enum WaveLabel {
    /// `charge` is `+1` for the attractive and `−1` for the repulsive problem.
    Coulomb { d: u32, l: u32, energy: f64, charge: f64, sign: WaveSign },
    InvertedOscillator {
        #[serde(rename = "D")]
        dim: u32,
        #[serde(rename = "L")]
        l: u32,
        #[serde(rename = "F")]
        energy: f64,
        sign: WaveSign,
    },
}

/// Complex value and first two derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexSample {
    pub value: ComplexValue,
    pub d1: ComplexValue,
    pub d2: ComplexValue,
}

/// `x^p · exp(c·x^m) · ₁F₁(a; b; s·x^m)` with `m ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuumWave {
    label: WaveLabel,
    operator: RadialOperator,
    p: f64,
    m: i32,
    c: ComplexValue,
    a: ComplexValue,
    b: f64,
    s: ComplexValue,
}

impl ContinuumWave {
    pub fn label(&self) -> WaveLabel {
        self.label
    }

    /// The radial equation the wave solves, `operator(f) = 0`.
    pub fn operator(&self) -> RadialOperator {
        self.operator
    }

    /// First parameter of the confluent hypergeometric factor.
    pub fn hyp_a(&self) -> ComplexValue {
        self.a
    }

    pub fn sample(&self, x: f64) -> Result<ComplexSample> {
        let m = self.m as f64;
        let xm = x.powi(self.m);
        // x^p
        let pw = x.powf(self.p);
        let (p0, p1, p2) = (pw, self.p * pw / x, self.p * (self.p - 1.0) * pw / (x * x));
        // exp(c x^m)
        let e = (self.c * xm).exp();
        let (u1, u2) = (m * x.powi(self.m - 1), m * (m - 1.0) * if self.m >= 2 { x.powi(self.m - 2) } else { 0.0 });
        let e1 = e * self.c * u1;
        let e2 = e * (self.c * u2 + self.c * self.c * u1 * u1);
        // M(a, b, s x^m)
        let (mv, md1, md2) = hyp1f1_jet(self.a, Complex64::new(self.b, 0.0), self.s * xm)?;
        let (t1, t2) = (self.s * u1, self.s * u2);
        let q1 = md1 * t1;
        let q2 = md2 * t1 * t1 + md1 * t2;
        let pe0 = e * p0;
        let pe1 = e1 * p0 + e * p1;
        let pe2 = e2 * p0 + 2.0 * e1 * p1 + e * p2;
        Ok(ComplexSample { value: pe0 * mv, d1: pe1 * mv + pe0 * q1, d2: pe2 * mv + 2.0 * pe1 * q1 + pe0 * q2 })
    }

    pub fn value(&self, x: f64) -> Result<ComplexValue> {
        Ok(self.sample(x)?.value)
    }

    /// The closed form evaluated at a complex radius (principal powers).
    pub fn value_at(&self, z: ComplexValue) -> Result<ComplexValue> {
        let zm = z.powi(self.m);
        let (mv, _, _) = hyp1f1_jet(self.a, Complex64::new(self.b, 0.0), self.s * zm)?;
        Ok(z.powf(self.p) * (self.c * zm).exp() * mv)
    }

    /// `radius,re,im` rows.
    pub fn to_csv(&self, grid: &GridSpec) -> Result<String> {
        let mut out = String::from("radius,re,im\n");
        for x in grid.points() {
            let v = self.value(x)?;
            out.push_str(&format!("{x},{},{}\n", v.re, v.im));
        }
        Ok(out)
    }
}

fn check_energy(energy: f64) -> Result<()> {
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(domain(format!(
            "continuum waves need E > 0, got E={energy}; use the bound-state constructors for E < 0"
        )));
    }
    Ok(())
}

fn coulomb_wave(d: u32, l: u32, k: ComplexValue, charge: f64, sign: WaveSign, energy: f64) -> Result<ContinuumWave> {
    if d < 2 {
        return Err(domain(format!("Coulomb dimension must be at least 2, got d={d}")));
    }
    let ell = l as f64 + (d as f64 - 3.0) / 2.0;
    let sigma = sign.sigma();
    let i = Complex64::i();
    Ok(ContinuumWave {
        label: WaveLabel::Coulomb { d, l, energy, charge, sign },
        operator: RadialOperator {
            centrifugal: ell * (ell + 1.0),
            coulomb: -charge,
            quadratic: 0.0,
            constant: 0.0,
            energy,
        },
        p: ell + 1.0,
        m: 1,
        c: sigma * i * k,
        a: ell + 1.0 - sigma * i * charge / (2.0 * k),
        b: 2.0 * ell + 2.0,
        s: -2.0 * sigma * i * k,
    })
}

/// `y^{ℓ+1} e^{±iky} ₁F₁(ℓ+1 ∓ i/(2k), 2ℓ+2, ∓2iky)` with `k = √E`, solving
/// `−w″ + [ℓ(ℓ+1)/y² − 1/y] w = E w`.
pub fn coulomb_continuum_wave(d: u32, energy: f64, l: u32, sign: WaveSign) -> Result<ContinuumWave> {
    check_energy(energy)?;
    coulomb_wave(d, l, Complex64::new(energy.sqrt(), 0.0), 1.0, sign, energy)
}

/// Repulsive Coulomb wave, `−w″ + [ℓ(ℓ+1)/y² + 1/y] w = E w`: the attractive
/// closed form with the sign of the charge flipped.
pub fn repulsive_coulomb_wave(d: u32, energy: f64, l: u32, sign: WaveSign) -> Result<ContinuumWave> {
    check_energy(energy)?;
    coulomb_wave(d, l, Complex64::new(energy.sqrt(), 0.0), -1.0, sign, energy)
}

/// The attractive Coulomb closed form at complex momentum `k` (`E = k²`).
/// With `k = i/(2(n+γ))` and the outgoing sign this is the bound state
/// `w_{d,n,l}` up to normalization.
pub fn coulomb_wave_at_momentum(d: u32, l: u32, k: ComplexValue, sign: WaveSign) -> Result<ContinuumWave> {
    let e = k * k;
    if k.norm() == 0.0 {
        return Err(domain("momentum must be nonzero"));
    }
    let mut w = coulomb_wave(d, l, k, 1.0, sign, e.re)?;
    w.operator.energy = e.re;
    Ok(w)
}

fn inverted_wave(dim: u32, l: u32, energy: ComplexValue, sign: WaveSign) -> Result<ContinuumWave> {
    if dim < 1 {
        return Err(domain("oscillator dimension must be at least 1"));
    }
    let ell = l as f64 + (dim as f64 - 3.0) / 2.0;
    if !(ell > -1.5) {
        return Err(domain(format!("need L+Gamma > -3/2, got {ell}")));
    }
    let sigma = sign.sigma();
    let i = Complex64::i();
    Ok(ContinuumWave {
        label: WaveLabel::InvertedOscillator { dim, l, energy: energy.re, sign },
        operator: RadialOperator {
            centrifugal: ell * (ell + 1.0),
            coulomb: 0.0,
            quadratic: -1.0,
            constant: 0.0,
            energy: energy.re,
        },
        p: ell + 1.0,
        m: 2,
        c: Complex64::new(0.0, sigma / 2.0),
        a: (ell + 1.5) / 2.0 - sigma * i * energy / 4.0,
        b: ell + 1.5,
        s: Complex64::new(0.0, -sigma),
    })
}

/// `Y^{ℓ+1} e^{±iY²/2} ₁F₁((ℓ+3/2)/2 ∓ iF/4, ℓ+3/2, ∓iY²)`, solving
/// `−W″ + [ℓ(ℓ+1)/Y² − Y²] W = F W` for any real `F`.
pub fn inverted_oscillator_wave(dim: u32, energy: f64, l: u32, sign: WaveSign) -> Result<ContinuumWave> {
    if !energy.is_finite() {
        return Err(domain("energy must be finite"));
    }
    inverted_wave(dim, l, Complex64::new(energy, 0.0), sign)
}

/// The inverted-oscillator closed form at complex energy. Evaluated at
/// `Y·e^{iπ/4}` with energy `−iF` (outgoing sign) it is the ordinary
/// oscillator solution at energy `F`, up to a constant.
pub fn inverted_oscillator_at_energy(dim: u32, l: u32, energy: ComplexValue, sign: WaveSign) -> Result<ContinuumWave> {
    inverted_wave(dim, l, energy, sign)
}

/// `Y ↦ Y^{−1/2} w(Y²/(2k))`, the image of a Coulomb wave of momentum `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransportedWave {
    wave: ContinuumWave,
    k: f64,
}

impl TransportedWave {
    pub fn source(&self) -> &ContinuumWave {
        &self.wave
    }

    pub fn sample(&self, big_y: f64) -> Result<ComplexSample> {
        let w = self.wave.sample(big_y * big_y / (2.0 * self.k))?;
        let (g1, g2) = (big_y / self.k, 1.0 / self.k);
        let (f0, f1, f2) = (w.value, w.d1 * g1, w.d2 * g1 * g1 + w.d1 * g2);
        let s = big_y.sqrt();
        let (p0, p1, p2) = (1.0 / s, -0.5 / (s * big_y), 0.75 / (s * big_y * big_y));
        Ok(ComplexSample { value: f0 * p0, d1: f1 * p0 + f0 * p1, d2: f2 * p0 + 2.0 * f1 * p1 + f0 * p2 })
    }
}

/// Residual of a complex wave under a radial operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexResidual {
    pub max_abs: f64,
    pub max_rel: f64,
    pub grid: GridSpec,
}

/// `y ∈ [0.1, 20]`
pub fn coulomb_grid() -> GridSpec {
    GridSpec::uniform(0.1, 20.0, 200)
}

/// `Y ∈ [0.1, 6]`
pub fn oscillator_grid() -> GridSpec {
    GridSpec::uniform(0.1, 6.0, 200)
}

pub fn complex_residual(
    op: &RadialOperator,
    f: &dyn Fn(f64) -> Result<ComplexSample>,
    grid: &GridSpec,
) -> Result<ComplexResidual> {
    let (mut max_abs, mut scale) = (0.0f64, 0.0f64);
    for x in grid.points() {
        let s = f(x)?;
        max_abs = max_abs.max(op.apply_complex(x, s.value, s.d2).norm());
        scale = scale.max(s.value.norm());
    }
    let max_rel = if scale > 0.0 { max_abs / scale } else { f64::INFINITY };
    Ok(ComplexResidual { max_abs, max_rel, grid: *grid })
}

/// Least-squares constant `c` with `f ≈ c·g` and the spread
/// `max|f − c·g| / max|c·g|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProportionalityFit {
    pub constant: ComplexValue,
    pub ratio_spread: f64,
}

pub fn proportionality_fit(f: &[ComplexValue], g: &[ComplexValue]) -> ProportionalityFit {
    let num: ComplexValue = f.iter().zip(g).map(|(a, b)| a * b.conj()).sum();
    let den: f64 = g.iter().map(|b| b.norm_sqr()).sum();
    let c = num / den;
    let (mut diff, mut scale) = (0.0f64, 0.0f64);
    for (a, b) in f.iter().zip(g) {
        diff = diff.max((a - c * b).norm());
        scale = scale.max((c * b).norm());
    }
    ProportionalityFit { constant: c, ratio_spread: if scale > 0.0 { diff / scale } else { f64::INFINITY } }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContinuumMapReport {
    pub d: u32,
    pub l: u32,
    pub lambda: i32,
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "D")]
    pub dim: u32,
    #[serde(rename = "L")]
    pub big_l: u32,
    #[serde(rename = "F")]
    pub big_f: f64,
    pub repulsive: bool,
    /// Fitted transported/target constant; reported, not asserted.
    pub fit: ProportionalityFit,
    /// Transported wave under the inverted-oscillator operator at `F`.
    pub residual: ComplexResidual,
    /// `F²E − 4`.
    pub energy_relation_residual: f64,
    pub notes: Vec<String>,
}

fn map_dims(d: u32, l: u32, lambda: i32) -> Result<(u32, u32)> {
    if d < 2 {
        return Err(domain(format!("Coulomb dimension must be at least 2, got d={d}")));
    }
    let dim = 2 * d as i64 - 2 - 2 * lambda as i64;
    if dim < 2 {
        return Err(domain(format!(
            "lambda={lambda} gives D={dim}; the continuum map reaches even dimensions D >= 2 only"
        )));
    }
    let big_l = 2 * l as i64 + lambda as i64;
    if big_l < 0 {
        return Err(domain(format!("lambda={lambda} gives negative L = {big_l}")));
    }
    Ok((dim as u32, big_l as u32))
}

/// `F = 2/√E`, or `−2/√E` for the repulsive problem.
pub fn image_energy(energy: f64, repulsive: bool) -> Result<f64> {
    check_energy(energy)?;
    let f = 2.0 / energy.sqrt();
    Ok(if repulsive { -f } else { f })
}

fn run_map(d: u32, energy: f64, l: u32, lambda: i32, repulsive: bool) -> Result<(ContinuumMapReport, TransportedWave)> {
    check_energy(energy)?;
    let (dim, big_l) = map_dims(d, l, lambda)?;
    let k = energy.sqrt();
    let sign = WaveSign::Outgoing;
    let wave = if repulsive {
        repulsive_coulomb_wave(d, energy, l, sign)?
    } else {
        coulomb_continuum_wave(d, energy, l, sign)?
    };
    let big_f = image_energy(energy, repulsive)?;
    let target = inverted_oscillator_wave(dim, big_f, big_l, sign)?;
    let transported = TransportedWave { wave, k };
    let grid = oscillator_grid();
    let mut tv = Vec::with_capacity(grid.points);
    let mut wv = Vec::with_capacity(grid.points);
    for y in grid.points() {
        tv.push(transported.sample(y)?.value);
        wv.push(target.value(y)?);
    }
    let fit = proportionality_fit(&tv, &wv);
    let residual = complex_residual(&target.operator(), &|y| transported.sample(y), &grid)?;
    let mut notes = vec!["Y^2 = 2 y sqrt(E)".to_string()];
    if repulsive {
        notes.push("repulsive wave: attractive closed form with the sign of the 1/y term flipped".into());
    }
    let report = ContinuumMapReport {
        d,
        l,
        lambda,
        energy,
        dim,
        big_l,
        big_f,
        repulsive,
        fit,
        residual,
        energy_relation_residual: big_f * big_f * energy - 4.0,
        notes,
    };
    Ok((report, transported))
}

/// Maps the attractive Coulomb wave at `E > 0` onto the inverted oscillator
/// with `D = 2d−2−2λ`, `L = 2l+λ`, `F = 2/√E`.
pub fn continuum_map(d: u32, energy: f64, l: u32, lambda: i32) -> Result<(ContinuumMapReport, TransportedWave)> {
    run_map(d, energy, l, lambda, false)
}

/// Same bookkeeping for the repulsive Coulomb wave, with `F = −2/√E`.
pub fn repulsive_map(d: u32, energy: f64, l: u32, lambda: i32) -> Result<(ContinuumMapReport, TransportedWave)> {
    run_map(d, energy, l, lambda, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{coulomb_state, oscillator_state, CoulombQN, OscillatorQN, PhysicalScales, RadialFunction};

    fn residual_of(w: &ContinuumWave, grid: &GridSpec) -> f64 {
        complex_residual(&w.operator(), &|x| w.sample(x), grid).unwrap().max_rel
    }

    #[test]
    fn coulomb_wave_solves_radial_equation() {
        for e in [0.25, 1.0, 4.0] {
            for l in 0..3 {
                let w = coulomb_continuum_wave(3, e, l, WaveSign::Outgoing).unwrap();
                assert!(residual_of(&w, &coulomb_grid()) < 1e-6, "E={e} l={l}");
            }
        }
    }

    #[test]
    fn rejects_bound_energies() {
        assert!(coulomb_continuum_wave(3, -0.25, 0, WaveSign::Outgoing).is_err());
        assert!(coulomb_continuum_wave(3, 0.0, 0, WaveSign::Outgoing).is_err());
    }

    #[test]
    fn incoming_is_conjugate() {
        let out = coulomb_continuum_wave(3, 1.0, 1, WaveSign::Outgoing).unwrap();
        let inc = coulomb_continuum_wave(3, 1.0, 1, WaveSign::Incoming).unwrap();
        for y in [0.3, 2.0, 7.5, 15.0] {
            let (a, b) = (out.value(y).unwrap(), inc.value(y).unwrap());
            assert!((a.conj() - b).norm() < 1e-10 * a.norm(), "y={y}");
        }
    }

    #[test]
    fn bound_state_recovery() {
        let nu = 2.0;
        let w = coulomb_wave_at_momentum(3, 0, Complex64::new(0.0, 1.0 / (2.0 * nu)), WaveSign::Outgoing).unwrap();
        let exact = coulomb_state(CoulombQN { d: 3, n: 2, l: 0 }, &PhysicalScales::default()).unwrap();
        let grid = GridSpec::uniform(0.1, 20.0, 200).points();
        let f: Vec<_> = grid.iter().map(|&y| w.value(y).unwrap()).collect();
        let g: Vec<_> = grid.iter().map(|&y| Complex64::new(exact.value(y), 0.0)).collect();
        assert!(proportionality_fit(&f, &g).ratio_spread < 1e-10);
    }

    #[test]
    fn inverted_oscillator_solves_its_equation() {
        for f in [-3.0, 0.0, 0.5, 2.0, 8.0] {
            for (dim, l) in [(3, 0), (4, 1), (2, 3)] {
                let w = inverted_oscillator_wave(dim, f, l, WaveSign::Outgoing).unwrap();
                assert!(residual_of(&w, &oscillator_grid()) < 1e-6, "F={f} D={dim} L={l}");
            }
        }
    }

    #[test]
    fn zero_energy_inverted_oscillator() {
        let w = inverted_oscillator_wave(3, 0.0, 1, WaveSign::Outgoing).unwrap();
        assert_eq!(w.hyp_a(), Complex64::new(1.25, 0.0));
    }

    #[test]
    fn analytic_continuation_gives_ordinary_oscillator() {
        let qn = OscillatorQN { dim: 3, n: 2, l: 0 };
        let exact = oscillator_state(qn, &PhysicalScales::default()).unwrap();
        let f = exact.energy();
        let w = inverted_oscillator_at_energy(3, 0, Complex64::new(0.0, -f), WaveSign::Outgoing).unwrap();
        let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let grid = oscillator_grid().points();
        let a: Vec<_> = grid.iter().map(|&y| w.value_at(phase * y).unwrap()).collect();
        let b: Vec<_> = grid.iter().map(|&y| Complex64::new(exact.value(y), 0.0)).collect();
        assert!(proportionality_fit(&a, &b).ratio_spread < 1e-9);
    }

    #[test]
    fn continuum_map_example() {
        let (r, _) = continuum_map(3, 1.0, 0, 0).unwrap();
        assert_eq!((r.dim, r.big_l, r.big_f), (4, 0, 2.0));
        assert!(r.fit.ratio_spread < 1e-8, "{r:?}");
        assert!(r.residual.max_rel < 1e-6);
        assert!(continuum_map(3, 1.0, 0, 2).is_err());
    }

    #[test]
    fn repulsive_example() {
        let (r, t) = repulsive_map(3, 1.0, 0, 0).unwrap();
        assert_eq!(r.big_f, -2.0);
        assert!(r.residual.max_rel < 1e-6);
        assert!(r.fit.ratio_spread < 1e-8);
        let (_, ta) = continuum_map(3, 1.0, 0, 0).unwrap();
        let ys = oscillator_grid().points();
        let a: Vec<_> = ys.iter().map(|&y| ta.sample(y).unwrap().value).collect();
        let b: Vec<_> = ys.iter().map(|&y| t.sample(y).unwrap().value).collect();
        assert!(proportionality_fit(&a, &b).ratio_spread > 1e-3);
        let bc: Vec<_> = b.iter().map(|v| v.conj()).collect();
        assert!(proportionality_fit(&a, &bc).ratio_spread > 1e-3);
    }

    #[test]
    fn energy_limits() {
        let f = |e: f64| image_energy(e, false).unwrap();
        assert!(f(1e-6) > f(1e-2) && f(1e-2) > f(1.0) && f(1.0) > f(100.0) && f(100.0) > 0.0);
        for lambda in [0, 1] {
            for l in 0..4 {
                assert_eq!(continuum_map(3, 1.0, l, lambda).unwrap().0.big_l % 2, lambda as u32);
            }
        }
    }

    #[test]
    fn csv_export() {
        let w = coulomb_continuum_wave(3, 1.0, 0, WaveSign::Outgoing).unwrap();
        let csv = w.to_csv(&GridSpec::uniform(0.5, 1.0, 3)).unwrap();
        assert_eq!(csv.lines().next(), Some("radius,re,im"));
        assert_eq!(csv.lines().count(), 4);
    }
}
