//! Quantum-defect deformations of the Coulomb and oscillator systems.
//!
//! A Coulomb profile assigns to each `l` a filled-level count `i(l)` and a
//! defect `δ(l)`, plus a global dimension shift `j`; the deformed states are
//! the ordinary closed forms at `(d*, n*, l*) = (d+j, n+i−δ, l+i−δ)`. The
//! oscillator side is the same with `(I, Δ, J)` and `(D*, N*, L*)`.
//!
//! Operator gauge: [`sqdt_coulomb_operator`] is the bare radial operator plus
//! the `y`-dependent part of `v_eff`, so its eigenvalue is the Rydberg-type
//! energy `−1/(4(n+γ+a)²)`. Adding the constant part of `v_eff` as well moves
//! the eigenvalue back to the undeformed `−1/(4(n+γ)²)`. The oscillator
//! operator carries `+2A` so that its eigenvalue is `2N+2Γ+4A+3`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::systems::{PhysicalScales, RadialOperator, RadialState, StateLabel};
use crate::verify::{integrate_halfline, QuadratureRule};

/// One row of a defect table: angular momentum, filled or inaccessible
/// level count, and defect.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DefectRow {
    pub l: u32,
    pub count: u32,
    pub defect: f64,
}

/// Finite table of per-angular-momentum defects with a default for the
/// angular momenta not listed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DefectTable {
    rows: BTreeMap<u32, DefectRow>,
    pub default_count: u32,
    pub default_defect: f64,
}

impl DefectTable {
    pub fn new(rows: &[DefectRow], default_count: u32, default_defect: f64) -> Result<Self> {
        let mut map = BTreeMap::new();
        for r in rows {
            if !r.defect.is_finite() {
                return Err(Error::Profile(format!("defect for l={} is not finite", r.l)));
            }
            if map.insert(r.l, *r).is_some() {
                return Err(Error::Profile(format!("angular momentum {} listed twice", r.l)));
            }
        }
        if !default_defect.is_finite() {
            return Err(Error::Profile("default defect is not finite".into()));
        }
        Ok(DefectTable { rows: map, default_count, default_defect })
    }

    pub fn zero() -> Self {
        DefectTable { rows: BTreeMap::new(), default_count: 0, default_defect: 0.0 }
    }

    /// Table with the same `(count, defect)` at every angular momentum.
    pub fn uniform(count: u32, defect: f64) -> Self {
        DefectTable { rows: BTreeMap::new(), default_count: count, default_defect: defect }
    }

    pub fn count(&self, l: u32) -> u32 {
        self.rows.get(&l).map_or(self.default_count, |r| r.count)
    }

    pub fn defect(&self, l: u32) -> f64 {
        self.rows.get(&l).map_or(self.default_defect, |r| r.defect)
    }

    pub fn rows(&self) -> impl Iterator<Item = &DefectRow> {
        self.rows.values()
    }
}

/// `(i(l), δ(l), j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoulombDefectProfile {
    pub table: DefectTable,
    pub j: i32,
}

/// `(I(L), Δ(L), J)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OscillatorDefectProfile {
    pub table: DefectTable,
    #[serde(rename = "J")]
    pub big_j: i32,
}

impl CoulombDefectProfile {
    pub fn zero() -> Self {
        CoulombDefectProfile { table: DefectTable::zero(), j: 0 }
    }

    pub fn uniform(i: u32, delta: f64, j: i32) -> Self {
        CoulombDefectProfile { table: DefectTable::uniform(i, delta), j }
    }

    /// Sodium defects: `i = 2, 1, 0, 0` and `δ = 1.35, 0.859, 0.01, 0.00` for
    /// `l = 0..3`, zero beyond.
    pub fn sodium() -> Self {
        let rows = [(0, 2, 1.35), (1, 1, 0.859), (2, 0, 0.01), (3, 0, 0.0)]
            .map(|(l, count, defect)| DefectRow { l, count, defect });
        CoulombDefectProfile { table: DefectTable::new(&rows, 0, 0.0).expect("static table"), j: 0 }
    }

    /// `a = i − δ + j/2`
    pub fn a(&self, l: u32) -> f64 {
        self.table.count(l) as f64 - self.table.defect(l) + self.j as f64 / 2.0
    }

    /// Checks `j > 1 − d` and `δ − i < l + γ + 1 + j/2`.
    pub fn check_range(&self, d: u32, l: u32) -> Result<()> {
        if d as i64 + (self.j as i64) < 2 {
            return Err(Error::DefectRange(format!("need j > 1-d, got j={} with d={d}", self.j)));
        }
        let gamma = (d as f64 - 3.0) / 2.0;
        let lhs = self.table.defect(l) - self.table.count(l) as f64;
        let rhs = l as f64 + gamma + 1.0 + self.j as f64 / 2.0;
        if !(lhs < rhs) {
            return Err(Error::DefectRange(format!(
                "need delta - i < l + gamma + 1 + j/2 at l={l}: {lhs} >= {rhs}"
            )));
        }
        Ok(())
    }
}

impl OscillatorDefectProfile {
    pub fn zero() -> Self {
        OscillatorDefectProfile { table: DefectTable::zero(), big_j: 0 }
    }

    pub fn uniform(big_i: u32, big_delta: f64, big_j: i32) -> Self {
        OscillatorDefectProfile { table: DefectTable::uniform(big_i, big_delta), big_j }
    }

    /// Oscillator image of the sodium profile under the three-dimensional map
    /// with `λ = 1`: odd `L = 1, 3, 5, 7` with `I = 2, 1, 0, 0`,
    /// `Δ = 1.20, 1.218, 0.52, 0.50`, and `Δ = 1/2` elsewhere; `J = 1`.
    pub fn sodium_image() -> Self {
        let rows = [(1, 2, 1.20), (3, 1, 1.218), (5, 0, 0.52), (7, 0, 0.50)]
            .map(|(l, count, defect)| DefectRow { l, count, defect });
        OscillatorDefectProfile { table: DefectTable::new(&rows, 0, 0.5).expect("static table"), big_j: 1 }
    }

    /// `A = I − Δ + J/2`
    pub fn big_a(&self, l: u32) -> f64 {
        self.table.count(l) as f64 - self.table.defect(l) + self.big_j as f64 / 2.0
    }

    /// Checks `J ≥ 1 − D` and `Δ − I < L + Γ + 3/2 + J/2`.
    pub fn check_range(&self, dim: u32, l: u32) -> Result<()> {
        if dim as i64 + (self.big_j as i64) < 1 {
            return Err(Error::DefectRange(format!("need J >= 1-D, got J={} with D={dim}", self.big_j)));
        }
        let gamma = (dim as f64 - 3.0) / 2.0;
        let lhs = self.table.defect(l) - self.table.count(l) as f64;
        let rhs = l as f64 + gamma + 1.5 + self.big_j as f64 / 2.0;
        if !(lhs < rhs) {
            return Err(Error::DefectRange(format!(
                "need Delta - I < L + Gamma + 3/2 + J/2 at L={l}: {lhs} >= {rhs}"
            )));
        }
        Ok(())
    }
}

/// Deformed quantum numbers. For the oscillator the fields hold `N*`, `L*`,
/// `N_s`, `A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarredQN {
    pub dim_star: f64,
    pub gamma_star: f64,
    pub n_star: f64,
    pub l_star: f64,
    pub n_s: u32,
    pub a: f64,
    /// Laguerre degree `n − l − 1` (or `(N − L)/2`), unchanged by the defect.
    pub degree: u32,
}

/// `n* = n+i−δ`, `l* = l+i−δ`, `n_s = n+i`, `d* = d+j`.
pub fn coulomb_starred(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32) -> Result<StarredQN> {
    crate::systems::CoulombQN::new(d, n, l)?;
    profile.check_range(d, l)?;
    let (i, delta) = (profile.table.count(l), profile.table.defect(l));
    let dim_star = (d as i64 + profile.j as i64) as f64;
    Ok(StarredQN {
        dim_star,
        gamma_star: (dim_star - 3.0) / 2.0,
        n_star: n as f64 + i as f64 - delta,
        l_star: l as f64 + i as f64 - delta,
        n_s: n + i,
        a: profile.a(l),
        degree: n - l - 1,
    })
}

/// `N* = N+I−Δ`, `L* = L+I−Δ`, `N_s = N+2I`, `D* = D+J`.
pub fn oscillator_starred(profile: &OscillatorDefectProfile, dim: u32, n: u32, l: u32) -> Result<StarredQN> {
    check_oscillator_qn(dim, n, l)?;
    profile.check_range(dim, l)?;
    let (big_i, delta) = (profile.table.count(l), profile.table.defect(l));
    let dim_star = (dim as i64 + profile.big_j as i64) as f64;
    Ok(StarredQN {
        dim_star,
        gamma_star: (dim_star - 3.0) / 2.0,
        n_star: n as f64 + big_i as f64 - delta,
        l_star: l as f64 + big_i as f64 - delta,
        n_s: n + 2 * big_i,
        a: profile.big_a(l),
        degree: (n - l) / 2,
    })
}

fn check_oscillator_qn(dim: u32, n: u32, l: u32) -> Result<()> {
    crate::systems::OscillatorQN::new(dim, n, l).map(|_| ())
}

/// `v_eff(y) = [(n+γ)² − (n*+γ*)²]/[4(n+γ)²(n*+γ*)²] + [ℓ*(ℓ*+1) − ℓ(ℓ+1)]/y²`
/// with `ℓ = l+γ`, `ℓ* = l*+γ*`. The constant term depends on `n`.
pub fn coulomb_effective_potential(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32, y: f64) -> Result<f64> {
    let (c, b) = coulomb_veff_parts(profile, d, n, l)?;
    Ok(c + b / (y * y))
}

// (constant, barrier coefficient) of v_eff
fn coulomb_veff_parts(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32) -> Result<(f64, f64)> {
    let s = coulomb_starred(profile, d, n, l)?;
    let g = (d as f64 - 3.0) / 2.0;
    let (nu, nus) = (n as f64 + g, s.n_star + s.gamma_star);
    let (ell, ells) = (l as f64 + g, s.l_star + s.gamma_star);
    let c = (nu * nu - nus * nus) / (4.0 * nu * nu * nus * nus);
    Ok((c, ells * (ells + 1.0) - ell * (ell + 1.0)))
}

/// `V_eff(Y) = 2(N − N* + Γ − Γ*) + [ℓ*(ℓ*+1) − ℓ(ℓ+1)]/Y²`; the constant
/// equals `−2A`.
pub fn oscillator_effective_potential(profile: &OscillatorDefectProfile, dim: u32, n: u32, l: u32, y: f64) -> Result<f64> {
    let s = oscillator_starred(profile, dim, n, l)?;
    let g = (dim as f64 - 3.0) / 2.0;
    let (ell, ells) = (l as f64 + g, s.l_star + s.gamma_star);
    let c = 2.0 * (n as f64 - s.n_star + g - s.gamma_star);
    Ok(c + (ells * (ells + 1.0) - ell * (ell + 1.0)) / (y * y))
}

/// `−1/(4(n+γ+a)²)`
pub fn sqdt_coulomb_energy(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32) -> Result<f64> {
    let s = coulomb_starred(profile, d, n, l)?;
    let nu = n as f64 + (d as f64 - 3.0) / 2.0 + s.a;
    Ok(-1.0 / (4.0 * nu * nu))
}

/// `2N + 2Γ + 4A + 3`
pub fn sqdt_oscillator_energy(profile: &OscillatorDefectProfile, dim: u32, n: u32, l: u32) -> Result<f64> {
    let s = oscillator_starred(profile, dim, n, l)?;
    Ok(2.0 * n as f64 + (dim as f64 - 3.0) + 4.0 * s.a + 3.0)
}

/// `w_{d*,n*,l*}`, normalized, carrying the SQDT energy.
pub fn sqdt_coulomb_state(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32, scales: &PhysicalScales) -> Result<RadialState> {
    let s = coulomb_starred(profile, d, n, l)?;
    let energy = sqdt_coulomb_energy(profile, d, n, l)?;
    let label = StateLabel::Coulomb { d: s.dim_star, n: s.n_star, l: s.l_star };
    RadialState::coulomb_form(label, energy, s.dim_star, s.l_star + s.gamma_star, s.n_star + s.gamma_star, s.degree, scales.r0)
}

/// `W_{D*,N*,L*}`, normalized, carrying the SQDT energy.
pub fn sqdt_oscillator_state(profile: &OscillatorDefectProfile, dim: u32, n: u32, l: u32, scales: &PhysicalScales) -> Result<RadialState> {
    let s = oscillator_starred(profile, dim, n, l)?;
    let energy = sqdt_oscillator_energy(profile, dim, n, l)?;
    let label = StateLabel::Oscillator { dim: s.dim_star, n: s.n_star, l: s.l_star };
    RadialState::oscillator_form(label, energy, s.dim_star, s.l_star + s.gamma_star, s.degree, scales.osc_r0)
}

/// `−d² + ℓ(ℓ+1)/y² − 1/y + (v_eff − its constant)` at the SQDT energy.
pub fn sqdt_coulomb_operator(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32) -> Result<RadialOperator> {
    let (_, b) = coulomb_veff_parts(profile, d, n, l)?;
    let ell = l as f64 + (d as f64 - 3.0) / 2.0;
    let mut op = RadialOperator::coulomb(ell, sqdt_coulomb_energy(profile, d, n, l)?);
    op.centrifugal += b;
    Ok(op)
}

/// `−d² + ℓ(ℓ+1)/y² − 1/y + v_eff` including its constant, at the undeformed
/// energy `−1/(4(n+γ)²)`.
pub fn sqdt_coulomb_operator_full(profile: &CoulombDefectProfile, d: u32, n: u32, l: u32) -> Result<RadialOperator> {
    let (c, b) = coulomb_veff_parts(profile, d, n, l)?;
    let g = (d as f64 - 3.0) / 2.0;
    let nu = n as f64 + g;
    let mut op = RadialOperator::coulomb(l as f64 + g, -1.0 / (4.0 * nu * nu));
    op.centrifugal += b;
    op.constant += c;
    Ok(op)
}

/// `−d² + ℓ(ℓ+1)/Y² + Y² + V_eff + 4A` at the SQDT energy `2N+2Γ+4A+3`.
pub fn sqdt_oscillator_operator(profile: &OscillatorDefectProfile, dim: u32, n: u32, l: u32) -> Result<RadialOperator> {
    let s = oscillator_starred(profile, dim, n, l)?;
    let ells = s.l_star + s.gamma_star;
    let mut op = RadialOperator::oscillator(ells, sqdt_oscillator_energy(profile, dim, n, l)?);
    op.constant = 2.0 * s.a;
    Ok(op)
}

/// Classification of `a` (or `A`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SectorClass {
    Sector { tier: u32, name: &'static str },
    Deformed { value: f64 },
}

const INTEGER_TOL: f64 = 1e-12;

/// Nonnegative integer `a` gives SUSY tier `a`; anything else is deformed.
pub fn sector_classifier(a: f64) -> SectorClass {
    let r = a.round();
    if (a - r).abs() <= INTEGER_TOL && r >= 0.0 {
        let tier = r as u32;
        let name = match tier {
            0 => "bosonic",
            1 => "fermionic",
            2 => "second-fermionic",
            _ => "higher",
        };
        SectorClass::Sector { tier, name }
    } else {
        SectorClass::Deformed { value: a }
    }
}

/// Laguerre-weight normalization integral near the edge of the defect range.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryProbe {
    /// `(δ − i, ∫ y^{2ℓ*+1} e^{−y} dy)` at each approach point.
    pub points: Vec<(f64, f64)>,
    pub bound: f64,
    pub monotone_growth: bool,
}

/// Integrates `y^{2ℓ*+1} e^{−y}` (the weight whose integral normalizes the
/// Laguerre factor) at `δ − i = bound − gap` for each gap, where `bound =
/// l + γ + 1 + j/2`. The quadrature rule is a fixed-order one, so growth here
/// is the integral's own.
pub fn coulomb_boundary_probe(d: u32, l: u32, j: i32, gaps: &[f64]) -> Result<BoundaryProbe> {
    let gamma = (d as f64 - 3.0) / 2.0;
    let bound = l as f64 + gamma + 1.0 + j as f64 / 2.0;
    let mut points = Vec::new();
    for &gap in gaps {
        let profile = CoulombDefectProfile::uniform(0, bound - gap, j);
        profile.check_range(d, l)?;
        let s = coulomb_starred(&profile, d, l + 1, l)?;
        // ℓ* = gap − 1, so the power 2ℓ*+1 approaches −1
        let power = 2.0 * (s.l_star + s.gamma_star) + 1.0;
        let rule = QuadratureRule::gauss_laguerre(8, power, 1.0)?;
        let v = integrate_halfline(|y| y.powf(power) * (-y).exp(), &rule).value;
        points.push((bound - gap, v));
    }
    let monotone_growth = points.windows(2).all(|w| w[1].1 > w[0].1);
    Ok(BoundaryProbe { points, bound, monotone_growth })
}

/// Parses the line-oriented profile format:
///
/// ```text
/// # comment
/// j = 0
/// default_count = 0
/// default_defect = 0
/// [rows]
/// # l  i  delta
/// 0  2  1.35
/// ```
///
/// The scalar shift is `j` for Coulomb profiles and `J` for oscillator ones.
/// Rows with more than three columns would make the defect depend on the
/// principal number and are rejected.
pub fn parse_profile(text: &str, shift_key: &str) -> Result<(DefectTable, i32)> {
    let mut shift = 0i32;
    let mut default_count = 0u32;
    let mut default_defect = 0.0f64;
    let mut rows = Vec::new();
    let mut in_rows = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Error::Profile(format!("line {}: {msg}", lineno + 1));
        if line == "[rows]" {
            in_rows = true;
            continue;
        }
        if in_rows {
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() > 3 {
                return Err(at(format!(
                    "{} columns; defects may depend on angular momentum only, not on the principal number",
                    cols.len()
                )));
            }
            if cols.len() != 3 {
                return Err(at(format!("expected 3 columns (l, count, defect), got {}", cols.len())));
            }
            let l = cols[0].parse::<u32>().map_err(|e| at(format!("angular momentum: {e}")))?;
            let count = cols[1].parse::<u32>().map_err(|e| at(format!("level count: {e}")))?;
            let defect = cols[2].parse::<f64>().map_err(|e| at(format!("defect: {e}")))?;
            rows.push(DefectRow { l, count, defect });
        } else {
            let (k, v) = line.split_once('=').ok_or_else(|| at(format!("expected key = value, got '{line}'")))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                _ if k == shift_key => shift = v.parse().map_err(|e| at(format!("{k}: {e}")))?,
                "default_count" => default_count = v.parse().map_err(|e| at(format!("{k}: {e}")))?,
                "default_defect" => default_defect = v.parse().map_err(|e| at(format!("{k}: {e}")))?,
                "j" | "J" => return Err(at(format!("key {k} does not apply here; expected {shift_key}"))),
                _ => return Err(at(format!("unknown key {k}"))),
            }
        }
    }
    Ok((DefectTable::new(&rows, default_count, default_defect)?, shift))
}

pub fn parse_coulomb_profile(text: &str) -> Result<CoulombDefectProfile> {
    let (table, j) = parse_profile(text, "j")?;
    Ok(CoulombDefectProfile { table, j })
}

pub fn parse_oscillator_profile(text: &str) -> Result<OscillatorDefectProfile> {
    let (table, big_j) = parse_profile(text, "J")?;
    Ok(OscillatorDefectProfile { table, big_j })
}
