//! Quadratic maps from radial Coulomb states to radial oscillator states.
//!
//! Under `Y² = y/(n*+γ*)` the Coulomb state `w_{d*,n*,l*}` becomes, up to the
//! factor `K·Y^{−1/2}`, the oscillator state `W_{D*,N*,L*}` with
//!
//! ```text
//! D* = 2d* − 2 − 2λ + J − 2j
//! N* = 2n* − 2 + λ − J/2 + j
//! L* = 2l* + λ − J/2 + j
//! A  = 2a
//! ```
//!
//! The integer `λ` is free. With all defects zero this is the classic map onto
//! even-dimensional oscillators.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::sqdt::{
    coulomb_starred, oscillator_starred, sqdt_coulomb_energy, sqdt_oscillator_energy, sqdt_oscillator_operator,
    sqdt_oscillator_state, CoulombDefectProfile, DefectRow, DefectTable, OscillatorDefectProfile, StarredQN,
};
use crate::systems::{Jet, OscillatorQN, PhysicalScales, RadialFunction, RadialState, Sample, StateLabel};
use crate::verify::{norm_squared, residual_scan, DecayClass, GridSpec, ResidualReport};

const CONSISTENCY_TOL: f64 = 1e-12;
/// Allowed deviation of the transported norm from one before the run is
/// flagged.
pub const NORM_TOL: f64 = 1e-8;

/// Everything that determines a general map.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapSpec {
    pub lambda: i32,
    pub d: u32,
    pub n: u32,
    pub l: u32,
    pub coulomb: CoulombDefectProfile,
    pub oscillator: OscillatorDefectProfile,
}

/// Integer oscillator quantum numbers underlying the starred ones:
/// `D = 2d−2−2λ`, `N = 2n−2+λ`, `L = 2l+λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnderlyingQN {
    #[serde(rename = "D")]
    pub dim: u32,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "L")]
    pub l: u32,
}

impl MapSpec {
    /// Zero defects on both sides.
    pub fn classic(d: u32, lambda: i32, n: u32, l: u32) -> Self {
        MapSpec {
            lambda,
            d,
            n,
            l,
            coulomb: CoulombDefectProfile::zero(),
            oscillator: OscillatorDefectProfile::zero(),
        }
    }

    pub fn underlying(&self) -> Result<UnderlyingQN> {
        let (d, n, l, lam) = (self.d as i64, self.n as i64, self.l as i64, self.lambda as i64);
        let dim = 2 * d - 2 - 2 * lam;
        let big_l = 2 * l + lam;
        let big_n = 2 * n - 2 + lam;
        if dim < 1 {
            return Err(domain(format!("lambda={} gives oscillator dimension 2d-2-2lambda = {dim} < 1", self.lambda)));
        }
        if big_l < 0 {
            return Err(domain(format!(
                "lambda={} gives negative oscillator angular momentum 2l+lambda = {big_l}",
                self.lambda
            )));
        }
        Ok(UnderlyingQN { dim: dim as u32, n: big_n.max(0) as u32, l: big_l as u32 })
    }

    /// `a` of the Coulomb profile at `l`.
    pub fn a(&self) -> f64 {
        self.coulomb.a(self.l)
    }

    /// `A` of the oscillator profile at `L = 2l+λ`.
    pub fn big_a(&self) -> Result<f64> {
        Ok(self.oscillator.big_a(self.underlying()?.l))
    }

    /// `λ − J/2 + j`, the third index of `K`.
    pub fn k_index(&self) -> f64 {
        self.lambda as f64 - self.oscillator.big_j as f64 / 2.0 + self.coulomb.j as f64
    }

    /// Checks every precondition and returns the starred quantum numbers of
    /// both sides.
    pub fn validate(&self) -> Result<(StarredQN, StarredQN, UnderlyingQN)> {
        let u = self.underlying()?;
        let dim_star = u.dim as i64 + self.oscillator.big_j as i64;
        if dim_star < 1 {
            return Err(domain(format!("mapped oscillator dimension D* = {dim_star} < 1")));
        }
        let (a, big_a) = (self.a(), self.big_a()?);
        if (big_a - 2.0 * a).abs() > CONSISTENCY_TOL {
            return Err(Error::Consistency(format!("need A = 2a, got A = {big_a}, a = {a}")));
        }
        let c = coulomb_starred(&self.coulomb, self.d, self.n, self.l)?;
        let o = oscillator_starred(&self.oscillator, u.dim, u.n, u.l)?;
        if o.l_star < -CONSISTENCY_TOL {
            return Err(domain(format!(
                "mapped angular momentum L* = {} is negative; lambda={} is too small",
                o.l_star, self.lambda
            )));
        }
        Ok((c, o, u))
    }
}

/// `K = (2n*+d*−3)·r₀^{d*/2} / R₀^{d*−1−(λ−J/2+j)}`.
pub fn map_constant(spec: &MapSpec, scales: &PhysicalScales) -> Result<f64> {
    let (c, _, _) = spec.validate()?;
    Ok(k_closed_form(c.n_star, c.dim_star, spec.k_index(), scales))
}

fn k_closed_form(n_star: f64, d_star: f64, index: f64, scales: &PhysicalScales) -> f64 {
    (2.0 * n_star + d_star - 3.0) * scales.r0.powf(d_star / 2.0) / scales.osc_r0.powf(d_star - 1.0 - index)
}

/// `Y ↦ K·Y^{−1/2}·w((n*+γ*)Y²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransportedState {
    source: RadialState,
    nu: f64,
    k: f64,
    label: StateLabel,
    energy: f64,
}

impl TransportedState {
    /// Builds the image of `source`, whose effective principal number is
    /// `nu`. `label` and `energy` describe the oscillator it should equal.
    pub fn new(source: RadialState, nu: f64, k: f64, label: StateLabel, energy: f64) -> Self {
        TransportedState { source, nu, k, label, energy }
    }

    pub fn source(&self) -> &RadialState {
        &self.source
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn label(&self) -> StateLabel {
        self.label
    }

    /// Oscillator eigenvalue the image should carry.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub(crate) fn jet(&self, big_y: f64) -> Jet {
        let w = self.source.jet(self.nu * big_y * big_y);
        let (g1, g2) = (2.0 * self.nu * big_y, 2.0 * self.nu);
        let f = Jet {
            v: w.v,
            d1: w.d1 * g1,
            d2: w.d2 * g1 * g1 + w.d1 * g2,
            d3: w.d3 * g1 * g1 * g1 + 3.0 * w.d2 * g1 * g2,
        };
        let s = big_y.sqrt();
        let p = Jet {
            v: 1.0 / s,
            d1: -0.5 / (s * big_y),
            d2: 0.75 / (s * big_y * big_y),
            d3: -1.875 / (s * big_y * big_y * big_y),
        };
        p.mul(f).scale(self.k)
    }
}

impl RadialFunction for TransportedState {
    fn sample(&self, x: f64) -> Sample {
        self.jet(x).sample()
    }

    fn decay(&self) -> DecayClass {
        DecayClass::Gaussian { rate: 0.5, power: 2.0 * self.source.effective_l() + 1.5 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoulombSide {
    pub d_star: f64,
    pub n_star: f64,
    pub l_star: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorSide {
    #[serde(rename = "D_star")]
    pub dim_star: f64,
    #[serde(rename = "N_star")]
    pub n_star: f64,
    #[serde(rename = "L_star")]
    pub l_star: f64,
}

/// Quantum numbers on both sides and the residuals of the relations linking
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumNumberTable {
    pub coulomb: CoulombSide,
    pub oscillator: OscillatorSide,
    pub underlying: UnderlyingQN,
    /// Largest violation of the `D*`, `N*`, `L*` relations.
    pub relation_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapReport {
    pub lambda: i32,
    pub a: f64,
    #[serde(rename = "A")]
    pub big_a: f64,
    pub quantum_numbers: QuantumNumberTable,
    /// Closed-form `K`.
    pub k: f64,
    /// `R₀^{D*}∫T² dY` of the transported function; should be one.
    pub transported_norm: f64,
    pub norm_defect: f64,
    /// `max|T − W| / max|W|` over the oscillator grid.
    pub max_pointwise_rel_error: f64,
    pub grid: GridSpec,
    /// `E/E₀` and `F/F₀`.
    pub coulomb_energy: f64,
    pub oscillator_energy: f64,
    /// `F/F₀ − 2√(E₀/−E) − 4a`.
    pub energy_relation_residual: f64,
    /// The transported function under the oscillator SQDT operator.
    pub residual: ResidualReport,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

impl MapReport {
    pub fn passed(&self, pointwise_tol: f64) -> bool {
        self.max_pointwise_rel_error < pointwise_tol
            && self.energy_relation_residual.abs() < CONSISTENCY_TOL
            && self.norm_defect < NORM_TOL
            && self.quantum_numbers.relation_residual < CONSISTENCY_TOL
    }
}

const K_READING: &str = "K uses the classic closed form with arguments (d*, n*, lambda - J/2 + j)";

/// Runs the general map and checks it against the oscillator SQDT state.
pub fn general_map(spec: &MapSpec, scales: &PhysicalScales) -> Result<(MapReport, TransportedState)> {
    let (c, o, u) = spec.validate()?;
    let k = k_closed_form(c.n_star, c.dim_star, spec.k_index(), scales);
    let coulomb_energy = sqdt_coulomb_energy(&spec.coulomb, spec.d, spec.n, spec.l)?;
    if !(coulomb_energy < 0.0) {
        return Err(domain("only bound states (E < 0) are mapped here"));
    }
    let oscillator_energy = sqdt_oscillator_energy(&spec.oscillator, u.dim, u.n, u.l)?;

    let source = RadialState::coulomb_form(
        StateLabel::Coulomb { d: c.dim_star, n: c.n_star, l: c.l_star },
        coulomb_energy,
        c.dim_star,
        c.l_star + c.gamma_star,
        c.n_star + c.gamma_star,
        c.degree,
        scales.r0,
    )?;
    let label = StateLabel::Oscillator { dim: o.dim_star, n: o.n_star, l: o.l_star };
    let transported = TransportedState::new(source, c.n_star + c.gamma_star, k, label, oscillator_energy);

    let (lam, bj, j) = (spec.lambda as f64, spec.oscillator.big_j as f64, spec.coulomb.j as f64);
    let relation_residual = [
        o.dim_star - (2.0 * c.dim_star - 2.0 - 2.0 * lam + bj - 2.0 * j),
        o.n_star - (2.0 * c.n_star - 2.0 + lam - bj / 2.0 + j),
        o.l_star - (2.0 * c.l_star + lam - bj / 2.0 + j),
    ]
    .iter()
    .fold(0.0f64, |m, v| m.max(v.abs()));

    let target = sqdt_oscillator_state(&spec.oscillator, u.dim, u.n, u.l, scales)?;
    let grid = GridSpec::oscillator();
    let (mut diff, mut scale) = (0.0f64, 0.0f64);
    for y in grid.points() {
        let (t, w) = (transported.value(y), target.value(y));
        diff = diff.max((t - w).abs());
        scale = scale.max(w.abs());
    }
    let max_pointwise_rel_error = if scale > 0.0 { diff / scale } else { f64::INFINITY };

    let transported_norm = norm_squared(&transported)? * scales.osc_r0.powf(o.dim_star);
    let norm_defect = (transported_norm - 1.0).abs();
    let energy_relation_residual = oscillator_energy - 2.0 * (-1.0 / coulomb_energy).sqrt() - 4.0 * c.a;
    let residual = residual_scan(
        &sqdt_oscillator_operator(&spec.oscillator, u.dim, u.n, u.l)?,
        &transported,
        &grid,
    );

    let mut warnings = Vec::new();
    if norm_defect > NORM_TOL {
        warnings.push(format!("transported norm deviates from 1 by {norm_defect:e}"));
    }
    let report = MapReport {
        lambda: spec.lambda,
        a: c.a,
        big_a: o.a,
        quantum_numbers: QuantumNumberTable {
            coulomb: CoulombSide { d_star: c.dim_star, n_star: c.n_star, l_star: c.l_star },
            oscillator: OscillatorSide { dim_star: o.dim_star, n_star: o.n_star, l_star: o.l_star },
            underlying: u,
            relation_residual,
        },
        k,
        transported_norm,
        norm_defect,
        max_pointwise_rel_error,
        grid,
        coulomb_energy,
        oscillator_energy,
        energy_relation_residual,
        residual,
        notes: vec![K_READING.to_string()],
        warnings,
    };
    Ok((report, transported))
}

/// Result of the classic (defect-free) map.
#[derive(Debug, Clone)]
pub struct ClassicMap {
    pub oscillator: OscillatorQN,
    pub lambda: i32,
    pub k: f64,
    pub state: TransportedState,
}

/// Classic map `(d, n, l) ↦ (2d−2−2λ, 2n−2+λ, 2l+λ)`. Negative `λ` is accepted
/// as long as `L = 2l+λ ≥ 0`; that is what widens the fixed-`l` dimension
/// range beyond `2d−2`.
pub fn classic_map(d: u32, lambda: i32, n: u32, l: u32, scales: &PhysicalScales) -> Result<ClassicMap> {
    if d < 2 {
        return Err(domain(format!("Coulomb dimension must be at least 2, got d={d}")));
    }
    let dim = 2 * d as i64 - 2 - 2 * lambda as i64;
    if dim < 2 {
        return Err(domain(format!(
            "lambda={lambda} gives D={dim}; the classic map reaches oscillators of even dimension D >= 2 only"
        )));
    }
    let spec = MapSpec::classic(d, lambda, n, l);
    let (c, o, u) = spec.validate()?;
    let k = k_closed_form(c.n_star, c.dim_star, spec.k_index(), scales);
    let source = crate::systems::coulomb_state(crate::systems::CoulombQN::new(d, n, l)?, scales)?;
    let oscillator = OscillatorQN::new(u.dim, u.n, u.l)?;
    let label = StateLabel::Oscillator { dim: o.dim_star, n: o.n_star, l: o.l_star };
    let energy = crate::systems::oscillator_energy(oscillator)?;
    let state = TransportedState::new(source, c.n_star + c.gamma_star, k, label, energy);
    Ok(ClassicMap { oscillator, lambda, k, state })
}

/// An admissible target dimension and the `λ` producing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionChoice {
    #[serde(rename = "D")]
    pub dim: u32,
    pub lambda: i32,
}

/// Admissible `(D, λ)` for the classic map, ascending in `D`. With
/// `full_spectrum` every Coulomb `l ≥ 0` must map (`λ ≥ 0`, `2 ≤ D ≤ 2d−2`);
/// otherwise only the given `l` (`λ ≥ −2l`, `D ≤ 2d−2+4l`).
pub fn classic_map_range(d: u32, l: u32, full_spectrum: bool) -> Result<Vec<DimensionChoice>> {
    if d < 2 {
        return Err(domain(format!("Coulomb dimension must be at least 2, got d={d}")));
    }
    let lambda_min = if full_spectrum { 0 } else { -2 * l as i32 };
    let lambda_max = d as i32 - 2;
    Ok((lambda_min..=lambda_max)
        .rev()
        .map(|lambda| DimensionChoice { dim: (2 * d as i32 - 2 - 2 * lambda) as u32, lambda })
        .collect())
}

/// Which side of a three-dimensional map is undeformed.
#[derive(Debug, Clone, PartialEq)]
pub enum ThreeDimCase {
    /// `Δ − I = 0`, `δ − i = (1/2 − λ)/2`.
    OscillatorExact,
    /// `δ − i = 0`, `Δ − I = λ − 1/2`.
    CoulombExact,
    /// Given Coulomb profile (with `j = 0`) and oscillator level counts `I(L)`;
    /// `Δ(L)` follows from `Δ − I = 2(δ − i) + λ − 1/2`.
    Custom { coulomb: CoulombDefectProfile, counts: BTreeMap<u32, u32> },
}

/// Spec for a map between two three-dimensional systems (`d = 3`, `j = 0`,
/// `J = 2λ − 1`).
pub fn three_dim_map(lambda: i32, case: &ThreeDimCase, n: u32, l: u32) -> Result<MapSpec> {
    if !(lambda == 0 || lambda == 1) {
        return Err(domain(format!("three-dimensional maps need lambda in {{0, 1}}, got {lambda}")));
    }
    let big_j = 2 * lambda - 1;
    let lam = lambda as f64;
    let (coulomb, oscillator) = match case {
        ThreeDimCase::OscillatorExact => (
            CoulombDefectProfile::uniform(0, 0.25 - lam / 2.0, 0),
            OscillatorDefectProfile::uniform(0, 0.0, big_j),
        ),
        ThreeDimCase::CoulombExact => (
            CoulombDefectProfile::zero(),
            OscillatorDefectProfile::uniform(0, lam - 0.5, big_j),
        ),
        ThreeDimCase::Custom { coulomb, counts } => {
            if coulomb.j != 0 {
                return Err(domain(format!("three-dimensional maps need j = 0, got j={}", coulomb.j)));
            }
            (coulomb.clone(), image_profile(coulomb, counts, lambda)?)
        }
    };
    Ok(MapSpec { lambda, d: 3, n, l, coulomb, oscillator })
}

// Δ(L) = I(L) + 2(δ(l) − i(l)) + λ − 1/2 at L = 2l+λ.
fn image_profile(coulomb: &CoulombDefectProfile, counts: &BTreeMap<u32, u32>, lambda: i32) -> Result<OscillatorDefectProfile> {
    let t = &coulomb.table;
    let lam = lambda as f64;
    let delta_of = |big_i: u32, l: u32| big_i as f64 + 2.0 * (t.defect(l) - t.count(l) as f64) + lam - 0.5;
    let mut ls: Vec<u32> = t.rows().map(|r| r.l).collect();
    for &big_l in counts.keys() {
        if (big_l as i64 - lambda as i64) >= 0 && (big_l as i64 - lambda as i64) % 2 == 0 {
            ls.push(((big_l as i64 - lambda as i64) / 2) as u32);
        }
    }
    ls.sort_unstable();
    ls.dedup();
    let rows: Vec<DefectRow> = ls
        .into_iter()
        .map(|l| {
            let big_l = (2 * l as i64 + lambda as i64) as u32;
            let big_i = counts.get(&big_l).copied().unwrap_or(0);
            DefectRow { l: big_l, count: big_i, defect: delta_of(big_i, l) }
        })
        .collect();
    let default_delta = 2.0 * (t.default_defect - t.default_count as f64) + lam - 0.5;
    Ok(OscillatorDefectProfile { table: DefectTable::new(&rows, 0, default_delta)?, big_j: 2 * lambda - 1 })
}

/// Sodium inputs `(l, i, δ as printed)`; the last row stands for all `l ≥ 4`.
pub const SODIUM_INPUTS: [(u32, u32, &str); 5] =
    [(0, 2, "1.35"), (1, 1, "0.859"), (2, 0, "0.01"), (3, 0, "0.00"), (4, 0, "0")];

/// Oscillator level counts that fill every level below `N_s = 5` for `λ = 1`.
pub fn default_level_counts() -> BTreeMap<u32, u32> {
    BTreeMap::from([(1, 2), (3, 1)])
}

/// Reference `(I, N ≥, N_s ≥, Δ)` columns for `λ = 1` with the default counts.
pub const SODIUM_REFERENCE: [(u32, u32, u32, &str); 5] =
    [(2, 1, 5, "1.20"), (1, 3, 5, "1.218"), (0, 5, 5, "0.52"), (0, 7, 7, "0.50"), (0, 9, 9, "0.5")];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub l: u32,
    /// Row stands for every `l ≥ self.l`.
    pub tail: bool,
    pub i: u32,
    pub n_min: u32,
    pub n_s_min: u32,
    pub delta: f64,
    pub delta_text: String,
    #[serde(rename = "L")]
    pub big_l: u32,
    #[serde(rename = "I")]
    pub big_i: u32,
    #[serde(rename = "N_min")]
    pub big_n_min: u32,
    #[serde(rename = "N_s_min")]
    pub big_n_s_min: u32,
    #[serde(rename = "Delta")]
    pub big_delta: f64,
    #[serde(rename = "Delta_text")]
    pub big_delta_text: String,
    pub in_range: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefectMapTable {
    pub lambda: i32,
    pub rows: Vec<TableRow>,
}

fn decimals(text: &str) -> usize {
    text.split_once('.').map_or(0, |(_, f)| f.len())
}

/// Maps the sodium defects into a three-dimensional oscillator:
/// `Δ(L) = I(L) + 2(δ(l) − i(l)) + λ − 1/2` with `L = 2l+λ`. Each `Δ` is
/// printed to the precision of its `δ` (at least one decimal).
pub fn sodium_table(lambda: i32, counts: &BTreeMap<u32, u32>) -> Result<DefectMapTable> {
    if !(lambda == 0 || lambda == 1) {
        return Err(domain(format!("three-dimensional maps need lambda in {{0, 1}}, got {lambda}")));
    }
    let coulomb = CoulombDefectProfile::sodium();
    let oscillator = image_profile(&coulomb, counts, lambda)?;
    let dim = (4 - 2 * lambda) as u32;
    let mut rows = Vec::new();
    for (idx, &(l, i, text)) in SODIUM_INPUTS.iter().enumerate() {
        let delta: f64 = text.parse().map_err(|e| Error::Profile(format!("delta '{text}': {e}")))?;
        let big_l = 2 * l + lambda as u32;
        let big_i = counts.get(&big_l).copied().unwrap_or(0);
        let big_delta = big_i as f64 + 2.0 * (delta - i as f64) + lambda as f64 - 0.5;
        let prec = decimals(text).max(1);
        let in_range = coulomb.check_range(3, l).is_ok() && oscillator.check_range(dim, big_l).is_ok();
        rows.push(TableRow {
            l,
            tail: idx + 1 == SODIUM_INPUTS.len(),
            i,
            n_min: l + 1,
            n_s_min: l + 1 + i,
            delta,
            delta_text: text.to_string(),
            big_l,
            big_i,
            big_n_min: big_l,
            big_n_s_min: big_l + 2 * big_i,
            big_delta,
            big_delta_text: format!("{big_delta:.prec$}"),
            in_range,
        });
    }
    Ok(DefectMapTable { lambda, rows })
}

impl DefectMapTable {
    /// Differences from [`SODIUM_REFERENCE`]; empty when the table matches.
    pub fn check_reference(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.lambda != 1 {
            out.push(format!("reference values are for lambda=1, table has lambda={}", self.lambda));
            return out;
        }
        for (row, &(big_i, n_min, n_s_min, text)) in self.rows.iter().zip(SODIUM_REFERENCE.iter()) {
            let got = (row.big_i, row.big_n_min, row.big_n_s_min, row.big_delta_text.as_str());
            if got != (big_i, n_min, n_s_min, text) {
                out.push(format!("l={}: got {:?}, expected {:?}", row.l, got, (big_i, n_min, n_s_min, text)));
            }
            if !row.in_range {
                out.push(format!("l={}: defects outside the orthonormalizable range", row.l));
            }
        }
        out
    }

    fn cells(&self, row: &TableRow) -> [String; 12] {
        let ge = |v: String| format!(">={v}");
        if row.tail {
            [
                ge(row.l.to_string()),
                row.i.to_string(),
                ge("l+1".into()),
                ge("l+1".into()),
                row.delta_text.clone(),
                String::new(),
                ge(row.big_l.to_string()),
                row.big_i.to_string(),
                ge("L".into()),
                ge("L".into()),
                row.big_delta_text.clone(),
                String::new(),
            ]
        } else {
            [
                row.l.to_string(),
                row.i.to_string(),
                ge(row.n_min.to_string()),
                ge(row.n_s_min.to_string()),
                row.delta_text.clone(),
                String::new(),
                row.big_l.to_string(),
                row.big_i.to_string(),
                ge(row.big_n_min.to_string()),
                ge(row.big_n_s_min.to_string()),
                row.big_delta_text.clone(),
                String::new(),
            ]
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("l,i,n,n_s,delta,L,I,N,N_s,Delta\n");
        for row in &self.rows {
            let c = self.cells(row);
            let fields: Vec<&str> = c.iter().filter(|x| !x.is_empty()).map(String::as_str).collect();
            s.push_str(&fields.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_text(&self) -> String {
        let header = ["l", "i", "n", "n_s", "delta", "|", "L", "I", "N", "N_s", "Delta", ""];
        let mut body: Vec<[String; 12]> = self.rows.iter().map(|r| self.cells(r)).collect();
        for r in body.iter_mut() {
            r[5] = "|".into();
        }
        let mut widths = header.map(str::len);
        for r in &body {
            for (w, c) in widths.iter_mut().zip(r.iter()) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut s = String::new();
        let line = |cells: Vec<&str>, s: &mut String| {
            let parts: Vec<String> = cells.iter().zip(widths.iter()).take(11).map(|(c, w)| format!("{c:>w$}")).collect();
            let _ = writeln!(s, "{}", parts.join("  ").trim_end());
        };
        line(header.to_vec(), &mut s);
        for r in &body {
            line(r.iter().map(String::as_str).collect(), &mut s);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{coulomb_energy, oscillator_state, CoulombQN};
    use approx::assert_relative_eq;

    fn unit() -> PhysicalScales {
        PhysicalScales::default()
    }

    #[test]
    fn classic_ground_state_energy_check() {
        let m = classic_map(3, 0, 1, 0, &unit()).unwrap();
        assert_eq!(m.oscillator, OscillatorQN { dim: 4, n: 0, l: 0 });
        let e = coulomb_energy(CoulombQN { d: 3, n: 1, l: 0 }).unwrap();
        assert_eq!(m.state.energy(), 4.0);
        assert_eq!(2.0 * (-1.0 / e).sqrt(), 4.0);
    }

    #[test]
    fn classic_pointwise_identity() {
        let m = classic_map(3, 1, 2, 0, &unit()).unwrap();
        assert_eq!(m.oscillator, OscillatorQN { dim: 2, n: 3, l: 1 });
        assert_eq!(m.k, 4.0);
        let w = oscillator_state(m.oscillator, &unit()).unwrap();
        let grid = GridSpec::oscillator().points();
        let scale = grid.iter().fold(0.0f64, |a, &y| a.max(w.value(y).abs()));
        for y in grid {
            assert!((m.state.value(y) - w.value(y)).abs() < 1e-10 * scale, "Y={y}");
        }
    }

    #[test]
    fn classic_rejects_low_dimension() {
        assert!(matches!(classic_map(3, 2, 2, 1, &unit()), Err(Error::Domain(_))));
        assert!(matches!(classic_map(3, -1, 2, 0, &unit()), Err(Error::Domain(_))));
        assert!(classic_map(3, -2, 2, 1, &unit()).is_ok());
    }

    #[test]
    fn dimension_ranges() {
        let r = classic_map_range(3, 0, true).unwrap();
        assert_eq!(r, vec![DimensionChoice { dim: 2, lambda: 1 }, DimensionChoice { dim: 4, lambda: 0 }]);
        assert_eq!(classic_map_range(2, 0, true).unwrap(), vec![DimensionChoice { dim: 2, lambda: 0 }]);
        let fixed = classic_map_range(3, 1, false).unwrap();
        assert_eq!(fixed.last().unwrap().dim, 8);
        assert_eq!(fixed.first().unwrap().dim, 2);
    }

    #[test]
    fn map_constants() {
        assert_eq!(map_constant(&MapSpec::classic(3, 0, 1, 0), &unit()).unwrap(), 2.0);
        assert_eq!(map_constant(&MapSpec::classic(4, 1, 2, 0), &unit()).unwrap(), 5.0);
        let s2 = PhysicalScales::new(2.0, 1.0, 1.0, 1.0).unwrap();
        let k1 = map_constant(&MapSpec::classic(5, 1, 3, 1), &unit()).unwrap();
        let k2 = map_constant(&MapSpec::classic(5, 1, 3, 1), &s2).unwrap();
        assert_relative_eq!(k2 / k1, 2f64.powf(2.5), max_relative = 1e-14);
    }

    #[test]
    fn zero_profiles_reduce_to_classic() {
        let spec = MapSpec::classic(4, 1, 3, 1);
        let (report, t) = general_map(&spec, &unit()).unwrap();
        let c = classic_map(4, 1, 3, 1, &unit()).unwrap();
        let q = report.quantum_numbers.oscillator;
        assert_eq!((q.dim_star, q.n_star, q.l_star), (c.oscillator.dim as f64, c.oscillator.n as f64, c.oscillator.l as f64));
        assert_eq!(report.k, c.k);
        assert_eq!(t.value(1.3), c.state.value(1.3));
        assert!(report.passed(1e-10), "{report:?}");
    }

    #[test]
    fn fermionic_onto_second_fermionic() {
        let spec = MapSpec {
            lambda: 0,
            d: 3,
            n: 2,
            l: 0,
            coulomb: CoulombDefectProfile::uniform(1, 0.0, 0),
            oscillator: OscillatorDefectProfile::uniform(2, 0.0, 0),
        };
        let (r, _) = general_map(&spec, &unit()).unwrap();
        assert_eq!((r.a, r.big_a), (1.0, 2.0));
        assert!(r.passed(1e-10), "{r:?}");
    }

    #[test]
    fn inconsistent_defects_rejected() {
        let spec = MapSpec {
            lambda: 0,
            d: 3,
            n: 2,
            l: 0,
            coulomb: CoulombDefectProfile::uniform(1, 0.0, 0),
            oscillator: OscillatorDefectProfile::uniform(1, 0.0, 0),
        };
        assert!(matches!(general_map(&spec, &unit()), Err(Error::Consistency(_))));
    }

    #[test]
    fn three_dim_cases() {
        let s = three_dim_map(1, &ThreeDimCase::OscillatorExact, 2, 1).unwrap();
        let (r, _) = general_map(&s, &unit()).unwrap();
        let q = r.quantum_numbers;
        assert_eq!((q.coulomb.n_star, q.coulomb.l_star), (2.25, 1.25));
        assert_eq!((q.oscillator.dim_star, q.oscillator.n_star, q.oscillator.l_star), (3.0, 3.0, 3.0));
        assert!(r.passed(1e-10));
        let s = three_dim_map(0, &ThreeDimCase::CoulombExact, 3, 2).unwrap();
        let (r, _) = general_map(&s, &unit()).unwrap();
        assert_eq!((r.quantum_numbers.oscillator.n_star, r.quantum_numbers.oscillator.l_star), (4.5, 4.5));
        assert!(matches!(three_dim_map(2, &ThreeDimCase::CoulombExact, 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn sodium_reference() {
        let t = sodium_table(1, &default_level_counts()).unwrap();
        assert!(t.check_reference().is_empty(), "{:?}", t.check_reference());
        let text = t.to_text();
        assert!(text.contains("1.218"));
        assert_eq!(t.to_csv().lines().count(), 6);
    }
}
