//! Named verification suites with JSON-serializable reports.

use std::time::Instant;

use serde::Serialize;

use crate::continuum::{continuum_map, repulsive_map};
use crate::error::Result;
use crate::mapping::{
    classic_map, classic_map_range, default_level_counts, general_map, sodium_table, three_dim_map, MapSpec,
    ThreeDimCase,
};
use crate::sqdt::{
    coulomb_starred, sqdt_coulomb_energy, sqdt_coulomb_operator, sqdt_coulomb_operator_full, sqdt_coulomb_state,
    sqdt_oscillator_operator, sqdt_oscillator_state, CoulombDefectProfile, OscillatorDefectProfile,
};
use crate::susy::{
    coulomb_tier_energy, ladder_down, oscillator_tier_energy, stack_correspondence, superpotential, tier_operator,
    tier_state, AnyQN, StackDirection, SusySystem,
};
use crate::systems::{
    coulomb_operator, coulomb_state, oscillator_operator, oscillator_state, CoulombQN, OscillatorQN, PhysicalScales,
    RadialFunction, RadialState,
};
use crate::verify::{
    compare_spectra, degeneracy_report, fd_eigensolve, overlap_matrix, residual_scan, GridSpec, SpectrumComparison,
};

/// One named check: passes when `value ≤ tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check { name: name.into(), value, tolerance, passed: value.is_finite() && value <= tolerance, detail: None }
    }

    fn failed(name: impl Into<String>, tolerance: f64, err: impl ToString) -> Self {
        Check { name: name.into(), value: f64::NAN, tolerance, passed: false, detail: Some(err.to_string()) }
    }

    fn run(name: impl Into<String>, tolerance: f64, f: impl FnOnce() -> Result<f64>) -> Self {
        let name = name.into();
        match f() {
            Ok(v) => Check::new(name, v, tolerance),
            Err(e) => Check::failed(name, tolerance, e),
        }
    }

    /// Pass/fail without a numeric measure.
    pub fn flag(name: impl Into<String>, ok: bool, detail: Option<String>) -> Self {
        Check { name: name.into(), value: if ok { 0.0 } else { 1.0 }, tolerance: 0.0, passed: ok, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub check_count: usize,
    /// Worst `value / tolerance` among numeric checks with nonzero tolerance.
    pub worst_ratio: f64,
    pub failures: Vec<Check>,
    pub checks: Vec<Check>,
    pub runtime_seconds: f64,
}

impl SuiteReport {
    fn finish(suite: &str, checks: Vec<Check>, started: Instant) -> Self {
        let failures: Vec<Check> = checks.iter().filter(|c| !c.passed).cloned().collect();
        let worst_ratio = checks
            .iter()
            .filter(|c| c.tolerance > 0.0 && c.value.is_finite())
            .map(|c| c.value / c.tolerance)
            .fold(0.0, f64::max);
        SuiteReport {
            suite: suite.to_string(),
            passed: failures.is_empty() && !checks.is_empty(),
            check_count: checks.len(),
            worst_ratio,
            failures,
            checks,
            runtime_seconds: started.elapsed().as_secs_f64(),
        }
    }

    /// Same report without the passing checks.
    pub fn summary(&self) -> SuiteReport {
        SuiteReport { checks: Vec::new(), ..self.clone() }
    }
}

fn unit() -> PhysicalScales {
    PhysicalScales::default()
}

pub const ORTHONORMALITY_TOL: f64 = 1e-8;
pub const RESIDUAL_TOL: f64 = 1e-8;
pub const SUSY_TOL: f64 = 1e-8;
pub const POINTWISE_TOL: f64 = 1e-10;
pub const ENERGY_TOL: f64 = 1e-12;
pub const FD_TOL: f64 = 1e-4;
pub const CONTINUUM_RESIDUAL_TOL: f64 = 1e-6;
pub const CONTINUUM_RATIO_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthonormalityParams {
    pub coulomb_dims: Vec<u32>,
    pub max_l: u32,
    /// States `n = l+1, …, l+max_n_offset`.
    pub max_n_offset: u32,
    pub oscillator_dims: Vec<u32>,
    pub max_big_l: u32,
    /// States with `(N−L)/2 = 0, …, max_degree`.
    pub max_degree: u32,
}

impl Default for OrthonormalityParams {
    fn default() -> Self {
        OrthonormalityParams {
            coulomb_dims: vec![2, 3, 5, 8],
            max_l: 3,
            max_n_offset: 6,
            oscillator_dims: vec![1, 2, 3, 4, 7],
            max_big_l: 3,
            max_degree: 5,
        }
    }
}

fn overlap_check(name: String, states: Result<Vec<RadialState>>) -> Check {
    Check::run(name, ORTHONORMALITY_TOL, || {
        let states = states?;
        let refs: Vec<&dyn RadialFunction> = states.iter().map(|s| s as &dyn RadialFunction).collect();
        Ok(overlap_matrix(&refs)?.max_identity_deviation)
    })
}

/// Gram matrices of each fixed-angular-momentum stack.
pub fn orthonormality_suite(p: &OrthonormalityParams) -> SuiteReport {
    let started = Instant::now();
    let mut checks = Vec::new();
    for &d in &p.coulomb_dims {
        for l in 0..=p.max_l {
            let states = (l + 1..=l + p.max_n_offset).map(|n| coulomb_state(CoulombQN::new(d, n, l)?, &unit())).collect();
            checks.push(overlap_check(format!("coulomb d={d} l={l}"), states));
        }
    }
    for &dim in &p.oscillator_dims {
        for big_l in 0..=p.max_big_l {
            if dim == 1 && big_l > 1 {
                continue;
            }
            let states = (0..=p.max_degree)
                .map(|k| oscillator_state(OscillatorQN::new(dim, big_l + 2 * k, big_l)?, &unit()))
                .collect();
            checks.push(overlap_check(format!("oscillator D={dim} L={big_l}"), states));
        }
    }
    SuiteReport::finish("orthonormality", checks, started)
}

/// Synthetic Coulomb profiles used alongside sodium.
pub fn synthetic_coulomb_profiles() -> Vec<(&'static str, CoulombDefectProfile)> {
    vec![
        ("uniform-0.3", CoulombDefectProfile::uniform(0, 0.3, 0)),
        ("filled-1-0.4", CoulombDefectProfile::uniform(1, 0.4, 0)),
        ("shifted-j1", CoulombDefectProfile::uniform(0, -0.2, 1)),
    ]
}

/// Synthetic oscillator profiles used alongside the sodium image.
pub fn synthetic_oscillator_profiles() -> Vec<(&'static str, OscillatorDefectProfile)> {
    vec![
        ("uniform-0.3", OscillatorDefectProfile::uniform(0, 0.3, 0)),
        ("filled-1-0.6", OscillatorDefectProfile::uniform(1, 0.6, 0)),
        ("shifted-J1", OscillatorDefectProfile::uniform(0, 0.25, 1)),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualParams {
    pub coulomb_dims: Vec<u32>,
    pub oscillator_dims: Vec<u32>,
    pub max_l: u32,
    pub max_n_offset: u32,
    pub max_tier: u32,
}

impl Default for ResidualParams {
    fn default() -> Self {
        ResidualParams { coulomb_dims: vec![2, 3, 5, 8], oscillator_dims: vec![1, 2, 3, 4, 7], max_l: 3, max_n_offset: 4, max_tier: 2 }
    }
}

fn coulomb_grid(state: &RadialState) -> GridSpec {
    let nu = match state.label() {
        crate::systems::StateLabel::Coulomb { d, n, .. } => n + (d - 3.0) / 2.0,
        _ => 1.0,
    };
    GridSpec::coulomb(nu)
}

/// Every constructed bound state against its radial equation.
pub fn residual_suite(p: &ResidualParams) -> SuiteReport {
    let started = Instant::now();
    let mut checks = Vec::new();
    for &d in &p.coulomb_dims {
        for l in 0..=p.max_l {
            for n in l + 1..=l + p.max_n_offset {
                checks.push(Check::run(format!("exact coulomb d={d} n={n} l={l}"), RESIDUAL_TOL, || {
                    let qn = CoulombQN::new(d, n, l)?;
                    let s = coulomb_state(qn, &unit())?;
                    Ok(residual_scan(&coulomb_operator(qn, s.energy())?, &s, &coulomb_grid(&s)).max_rel)
                }));
                for tier in 1..=p.max_tier {
                    let base = SusySystem::Coulomb { d, l };
                    if n < l + tier + 1 {
                        continue;
                    }
                    checks.push(Check::run(format!("susy coulomb d={d} l={l} tier={tier} n={n}"), RESIDUAL_TOL, || {
                        let (s, e) = tier_state(base, tier, n, &unit())?;
                        Ok(residual_scan(&tier_operator(base, tier, e.value)?, &s, &coulomb_grid(&s)).max_rel)
                    }));
                }
            }
        }
    }
    for &dim in &p.oscillator_dims {
        for big_l in 0..=p.max_l {
            if dim == 1 && big_l > 1 {
                continue;
            }
            for k in 0..p.max_n_offset {
                let big_n = big_l + 2 * k;
                checks.push(Check::run(format!("exact oscillator D={dim} N={big_n} L={big_l}"), RESIDUAL_TOL, || {
                    let qn = OscillatorQN::new(dim, big_n, big_l)?;
                    let s = oscillator_state(qn, &unit())?;
                    Ok(residual_scan(&oscillator_operator(qn, s.energy())?, &s, &GridSpec::oscillator()).max_rel)
                }));
                for tier in 1..=p.max_tier {
                    let base = SusySystem::Oscillator { dim, l: big_l };
                    let (n_t, l_t) = (big_n + tier, big_l + tier);
                    if n_t < l_t {
                        continue;
                    }
                    checks.push(Check::run(
                        format!("susy oscillator D={dim} L={big_l} tier={tier} N={n_t}"),
                        RESIDUAL_TOL,
                        || {
                            let (s, e) = tier_state(base, tier, n_t, &unit())?;
                            Ok(residual_scan(&tier_operator(base, tier, e.value)?, &s, &GridSpec::oscillator()).max_rel)
                        },
                    ));
                }
            }
        }
    }
    let mut coulomb_profiles = vec![("sodium", CoulombDefectProfile::sodium())];
    coulomb_profiles.extend(synthetic_coulomb_profiles());
    for (name, profile) in &coulomb_profiles {
        for l in 0..=p.max_l {
            for n in l + 1..=l + p.max_n_offset {
                checks.push(Check::run(format!("sqdt coulomb {name} d=3 n={n} l={l}"), RESIDUAL_TOL, || {
                    let s = sqdt_coulomb_state(profile, 3, n, l, &unit())?;
                    let grid = coulomb_grid(&s);
                    let r1 = residual_scan(&sqdt_coulomb_operator(profile, 3, n, l)?, &s, &grid).max_rel;
                    let r2 = residual_scan(&sqdt_coulomb_operator_full(profile, 3, n, l)?, &s, &grid).max_rel;
                    Ok(r1.max(r2))
                }));
            }
        }
    }
    let mut oscillator_profiles = vec![("sodium-image", OscillatorDefectProfile::sodium_image(), 2)];
    oscillator_profiles.extend(synthetic_oscillator_profiles().into_iter().map(|(n, p)| (n, p, 3)));
    for (name, profile, dim) in &oscillator_profiles {
        for big_l in 0..=2 * p.max_l + 1 {
            for k in 0..p.max_n_offset {
                let big_n = big_l + 2 * k;
                checks.push(Check::run(
                    format!("sqdt oscillator {name} D={dim} N={big_n} L={big_l}"),
                    RESIDUAL_TOL,
                    || {
                        let s = sqdt_oscillator_state(profile, *dim, big_n, big_l, &unit())?;
                        let op = sqdt_oscillator_operator(profile, *dim, big_n, big_l)?;
                        Ok(residual_scan(&op, &s, &GridSpec::oscillator()).max_rel)
                    },
                ));
            }
        }
    }
    SuiteReport::finish("residuals", checks, started)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SusyParams {
    pub systems: Vec<SusySystem>,
    /// Excited states checked per sector.
    pub levels: u32,
}

impl Default for SusyParams {
    fn default() -> Self {
        let mut systems = Vec::new();
        for d in [2, 3, 4, 5] {
            for l in 0..=2 {
                systems.push(SusySystem::Coulomb { d, l });
            }
        }
        for dim in [1, 2, 3, 4] {
            for l in 0..=2 {
                if dim == 1 && l > 1 {
                    continue;
                }
                systems.push(SusySystem::Oscillator { dim, l });
            }
        }
        SusyParams { systems, levels: 4 }
    }
}

fn sup_diff(f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64, grid: &GridSpec) -> f64 {
    let (mut diff, mut scale) = (0.0f64, 0.0f64);
    for x in grid.points() {
        let (a, b) = (f(x), g(x));
        diff = diff.max((a - b).abs());
        scale = scale.max(b.abs());
    }
    diff / scale
}

/// Ground-state annihilation, intertwining, and stack degeneracy.
pub fn susy_suite(p: &SusyParams) -> SuiteReport {
    let started = Instant::now();
    let mut checks = Vec::new();
    for &system in &p.systems {
        let tag = match system {
            SusySystem::Coulomb { d, l } => format!("coulomb d={d} l={l}"),
            SusySystem::Oscillator { dim, l } => format!("oscillator D={dim} L={l}"),
        };
        // bosonic principal numbers and the fermionic state each maps onto
        let (ground_n, step) = match system {
            SusySystem::Coulomb { l, .. } => (l + 1, 1),
            SusySystem::Oscillator { l, .. } => (l, 2),
        };
        let grid = |s: &RadialState| match system {
            SusySystem::Coulomb { .. } => coulomb_grid(s),
            SusySystem::Oscillator { .. } => GridSpec::oscillator(),
        };
        checks.push(Check::run(format!("{tag} ground annihilation"), SUSY_TOL, || {
            let sp = superpotential(system)?;
            let (w0, _) = tier_state(system, 0, ground_n, &unit())?;
            let img = ladder_down(&sp, &w0)?;
            Ok(grid(&w0).points().into_iter().map(|x| img.value(x).abs()).fold(0.0, f64::max))
        }));
        for level in 1..=p.levels {
            let n = ground_n + step * level;
            checks.push(Check::run(format!("{tag} intertwining n={n}"), SUSY_TOL, || {
                let sp = superpotential(system)?;
                let (w, eps) = tier_state(system, 0, n, &unit())?;
                let img = ladder_down(&sp, &w)?;
                // a: (n, l) ↦ (n, l+1) for Coulomb and (N, L) ↦ (N−1, L+1)
                let target_n = match system {
                    SusySystem::Coulomb { .. } => n,
                    SusySystem::Oscillator { .. } => n - 1,
                };
                let (target, _) = tier_state(system, 1, target_n, &unit())?;
                let sign = (img.value(1.0) * target.value(1.0)).signum();
                let shape = sup_diff(|x| sign * img.normalized_value(x), |x| target.value(x), &grid(&w));
                let norm = (img.norm * img.norm - eps.value).abs() / eps.value;
                Ok(shape.max(norm))
            }));
        }
        // degeneracy of bosonic and fermionic stacks
        let check = (|| -> Result<bool> {
            let mut bos = Vec::new();
            let mut fer = Vec::new();
            for level in 0..=p.levels + 1 {
                let n = ground_n + step * level;
                let e = match system {
                    SusySystem::Coulomb { d, l } => coulomb_tier_energy(SusySystem::Coulomb { d, l }, 0, n)?,
                    SusySystem::Oscillator { .. } => oscillator_tier_energy(system, 0, n)?,
                };
                bos.push((format!("n={n}"), e.value));
                // fermionic partner label: n′ = n (Coulomb), N′ = N − 1 (oscillator)
                if level >= 1 {
                    let (np, e) = match system {
                        SusySystem::Coulomb { .. } => (n, coulomb_tier_energy(system, 1, n)?),
                        SusySystem::Oscillator { .. } => (n - 1, oscillator_tier_energy(system, 1, n - 1)?),
                    };
                    fer.push((format!("n'={np}"), e.value));
                }
            }
            let rep = degeneracy_report(&[("bosonic".into(), bos), ("fermionic".into(), fer.clone())], 0.0);
            let all_paired = rep.unpaired.iter().all(|u| u.stack == "bosonic");
            Ok(all_paired && rep.unpaired.len() == 1 && rep.cross_stack == fer.len())
        })();
        checks.push(match check {
            Ok(ok) => Check::flag(format!("{tag} stack degeneracy"), ok, None),
            Err(e) => Check::flag(format!("{tag} stack degeneracy"), false, Some(e.to_string())),
        });
    }
    SuiteReport::finish("susy", checks, started)
}

fn map_checks(name: &str, spec: &MapSpec, checks: &mut Vec<Check>) {
    match general_map(spec, &unit()) {
        Ok((r, _)) => {
            checks.push(Check::new(format!("{name} pointwise"), r.max_pointwise_rel_error, POINTWISE_TOL));
            checks.push(Check::new(format!("{name} energy relation"), r.energy_relation_residual.abs(), ENERGY_TOL));
            checks.push(Check::new(format!("{name} norm"), r.norm_defect, crate::mapping::NORM_TOL));
            checks.push(Check::new(format!("{name} relations"), r.quantum_numbers.relation_residual, ENERGY_TOL));
        }
        Err(e) => checks.push(Check::failed(name, POINTWISE_TOL, e)),
    }
}

/// Classic map on `d ∈ {3, 4, 5}` for every admissible `λ` and `n ≤ 6`.
pub fn classic_map_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for d in [3u32, 4, 5] {
        for n in 1..=6u32 {
            for l in 0..n {
                let Ok(range) = classic_map_range(d, l, false) else { continue };
                for choice in range {
                    let name = format!("classic d={d} lambda={} n={n} l={l}", choice.lambda);
                    checks.push(Check::run(format!("{name} pointwise"), POINTWISE_TOL, || {
                        let m = classic_map(d, choice.lambda, n, l, &unit())?;
                        let w = oscillator_state(m.oscillator, &unit())?;
                        Ok(sup_diff(|y| m.state.value(y), |y| w.value(y), &GridSpec::oscillator()))
                    }));
                    checks.push(Check::run(format!("{name} energy"), ENERGY_TOL, || {
                        let m = classic_map(d, choice.lambda, n, l, &unit())?;
                        let e = crate::systems::coulomb_energy(CoulombQN::new(d, n, l)?)?;
                        Ok((m.state.energy() - 2.0 * (-1.0 / e).sqrt()).abs())
                    }));
                }
            }
        }
    }
    checks.push(Check::flag(
        "d=3 full-spectrum images are D=2 and D=4",
        classic_map_range(3, 0, true).map(|r| r.iter().map(|c| c.dim).collect::<Vec<_>>()) == Ok(vec![2, 4]),
        None,
    ));
    checks
}

/// The `d = 3, j = 0, J = 1` construction onto a three-dimensional
/// oscillator, at several states and Coulomb defects.
pub fn odd_dimension_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for delta in [0.0, 0.1, -0.3] {
        for n in 1..=4u32 {
            for l in 0..n {
                let spec = MapSpec {
                    lambda: 1,
                    d: 3,
                    n,
                    l,
                    coulomb: CoulombDefectProfile::uniform(0, delta, 0),
                    oscillator: OscillatorDefectProfile::uniform(0, 2.0 * delta + 0.5, 1),
                };
                let name = format!("odd-dimension delta={delta} n={n} l={l}");
                match spec.validate() {
                    Ok((_, o, _)) => checks.push(Check::flag(format!("{name} D*=3"), o.dim_star == 3.0, None)),
                    Err(e) => checks.push(Check::failed(format!("{name} D*=3"), 0.0, e)),
                }
                map_checks(&name, &spec, &mut checks);
            }
        }
    }
    checks
}

/// The two degenerate-ket examples of the three-dimensional special cases.
pub fn three_dim_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let cases: [(&str, i32, ThreeDimCase, u32, [(u32, f64, f64, f64, f64); 2]); 2] = [
        ("oscillator-exact", 1, ThreeDimCase::OscillatorExact, 2, [(0, 2.25, 0.25, 3.0, 1.0), (1, 2.25, 1.25, 3.0, 3.0)]),
        ("coulomb-exact", 0, ThreeDimCase::CoulombExact, 3, [(1, 3.0, 1.0, 4.5, 2.5), (2, 3.0, 2.0, 4.5, 4.5)]),
    ];
    for (name, lambda, case, n, kets) in cases {
        let mut energies = Vec::new();
        for (l, n_star, l_star, big_n, big_l) in kets {
            let tag = format!("{name} lambda={lambda} n={n} l={l}");
            let spec = match three_dim_map(lambda, &case, n, l) {
                Ok(s) => s,
                Err(e) => {
                    checks.push(Check::failed(tag, 0.0, e));
                    continue;
                }
            };
            match general_map(&spec, &unit()) {
                Ok((r, _)) => {
                    let q = r.quantum_numbers;
                    let got = (q.coulomb.n_star, q.coulomb.l_star, q.oscillator.n_star, q.oscillator.l_star, q.oscillator.dim_star);
                    checks.push(Check::flag(
                        format!("{tag} quantum numbers"),
                        got == (n_star, l_star, big_n, big_l, 3.0),
                        Some(format!("{got:?}")),
                    ));
                    energies.push((r.coulomb_energy, r.oscillator_energy));
                }
                Err(e) => checks.push(Check::failed(format!("{tag} quantum numbers"), 0.0, e)),
            }
            map_checks(&tag, &spec, &mut checks);
        }
        if energies.len() == 2 {
            let de = (energies[0].0 - energies[1].0).abs();
            let df = (energies[0].1 - energies[1].1).abs();
            checks.push(Check::new(format!("{name} degeneracy preserved"), de.max(df), ENERGY_TOL));
        }
    }
    for n in 1..=4u32 {
        checks.push(Check::run(format!("oscillator-exact lambda=1 eigenvalues n={n}"), ENERGY_TOL, || {
            let spec = three_dim_map(1, &ThreeDimCase::OscillatorExact, n, 0)?;
            let (r, _) = general_map(&spec, &unit())?;
            let e_want = -1.0 / (2.0 * n as f64 + 0.5).powi(2);
            let f_want = 2.0 * r.quantum_numbers.oscillator.n_star + 4.0;
            Ok((r.coulomb_energy - e_want).abs().max((r.oscillator_energy - f_want).abs()))
        }));
    }
    checks
}

/// Bosonic → fermionic → mapped versus mapped → second-fermionic, and the
/// direct `a = 1, A = 2` general map, for `d = 3`, `λ ∈ {0, 1}`, `n ≤ 5`.
pub fn commutativity_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for lambda in [0, 1] {
        for n in 1..=5u32 {
            for l in 0..n {
                let tag = format!("commutativity lambda={lambda} n={n} l={l}");
                let result = (|| -> Result<(bool, f64)> {
                    // path 1: SUSY relabel, then map
                    let AnyQN::Coulomb(f) = stack_correspondence(AnyQN::Coulomb(CoulombQN::new(3, n, l)?), StackDirection::BosonicToFermionic) else {
                        unreachable!()
                    };
                    let m1 = classic_map(3, lambda, f.n, f.l, &unit())?;
                    // path 2: map, then second-fermionic relabel
                    let m0 = classic_map(3, lambda, n, l, &unit())?;
                    let AnyQN::Oscillator(o2) = stack_correspondence(AnyQN::Oscillator(m0.oscillator), StackDirection::BosonicToSecondFermionic) else {
                        unreachable!()
                    };
                    // path 3: general map with a = 1, A = 2
                    let spec = MapSpec {
                        lambda,
                        d: 3,
                        n,
                        l,
                        coulomb: CoulombDefectProfile::uniform(1, 0.0, 0),
                        oscillator: OscillatorDefectProfile::uniform(2, 0.0, 0),
                    };
                    let (r3, t3) = general_map(&spec, &unit())?;
                    let q3 = r3.quantum_numbers.oscillator;
                    let same = m1.oscillator == o2
                        && (q3.dim_star, q3.n_star, q3.l_star) == (o2.dim as f64, o2.n as f64, o2.l as f64);
                    // second-fermionic oscillator state over the base L
                    let base = SusySystem::Oscillator { dim: m0.oscillator.dim, l: m0.oscillator.l };
                    let (w2, _) = tier_state(base, 2, o2.n, &unit())?;
                    let g = GridSpec::oscillator();
                    let e1 = sup_diff(|y| m1.state.value(y), |y| w2.value(y), &g);
                    let e3 = sup_diff(|y| t3.value(y), |y| w2.value(y), &g);
                    Ok((same, e1.max(e3)))
                })();
                match result {
                    Ok((same, err)) => {
                        checks.push(Check::flag(format!("{tag} quantum-number paths"), same, None));
                        checks.push(Check::new(format!("{tag} pointwise"), err, POINTWISE_TOL));
                    }
                    Err(e) => checks.push(Check::failed(tag, POINTWISE_TOL, e)),
                }
            }
        }
    }
    checks
}

/// Sodium table reproduction and the sodium map at a few states.
pub fn table_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    match sodium_table(1, &default_level_counts()) {
        Ok(t) => {
            let diffs = t.check_reference();
            checks.push(Check::flag("sodium table", diffs.is_empty(), (!diffs.is_empty()).then(|| diffs.join("; "))));
        }
        Err(e) => checks.push(Check::failed("sodium table", 0.0, e)),
    }
    let case = ThreeDimCase::Custom { coulomb: CoulombDefectProfile::sodium(), counts: default_level_counts() };
    for l in 0..=4u32 {
        for n in l + 1..=l + 2 {
            match three_dim_map(1, &case, n, l) {
                Ok(spec) => map_checks(&format!("sodium map n={n} l={l}"), &spec, &mut checks),
                Err(e) => checks.push(Check::failed(format!("sodium map n={n} l={l}"), 0.0, e)),
            }
        }
    }
    checks
}

/// Continuum maps for `d = 3`, `λ ∈ {0, 1}`, `E ∈ {0.25, 1, 4}`, attractive
/// and repulsive.
pub fn continuum_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for lambda in [0, 1] {
        for e in [0.25, 1.0, 4.0] {
            for repulsive in [false, true] {
                let tag = format!("continuum {} lambda={lambda} E={e}", if repulsive { "repulsive" } else { "attractive" });
                let r = if repulsive { repulsive_map(3, e, 0, lambda) } else { continuum_map(3, e, 0, lambda) };
                match r {
                    Ok((r, _)) => {
                        checks.push(Check::new(format!("{tag} residual"), r.residual.max_rel, CONTINUUM_RESIDUAL_TOL));
                        checks.push(Check::new(format!("{tag} ratio"), r.fit.ratio_spread, CONTINUUM_RATIO_TOL));
                        checks.push(Check::new(format!("{tag} energy relation"), r.energy_relation_residual.abs(), ENERGY_TOL));
                        checks.push(Check::flag(format!("{tag} sign of F"), (r.big_f < 0.0) == repulsive, None));
                    }
                    Err(e) => checks.push(Check::failed(tag, 0.0, e)),
                }
            }
        }
    }
    checks
}

/// All map checks: classic, odd dimension, three-dimensional cases,
/// commutativity, the sodium table and the continuum.
pub fn maps_suite() -> SuiteReport {
    let started = Instant::now();
    let mut checks = classic_map_checks();
    checks.extend(odd_dimension_checks());
    checks.extend(three_dim_checks());
    checks.extend(commutativity_checks());
    checks.extend(table_checks());
    checks.extend(continuum_checks());
    SuiteReport::finish("maps", checks, started)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FdParams {
    pub profile: CoulombDefectProfile,
    pub d: u32,
    pub l: u32,
    pub count: usize,
    pub grid_points: usize,
    pub y_max: f64,
}

impl Default for FdParams {
    fn default() -> Self {
        FdParams { profile: CoulombDefectProfile::sodium(), d: 3, l: 0, count: 3, grid_points: 4000, y_max: 200.0 }
    }
}

/// Finite-difference spectrum of the SQDT potential together with the
/// convergence ratio between `grid_points/2` and `grid_points`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FdOracleRun {
    pub comparison: SpectrumComparison,
    pub coarse: SpectrumComparison,
    pub convergence_ratio: f64,
}

pub fn fd_oracle_run(p: &FdParams) -> Result<FdOracleRun> {
    let s = coulomb_starred(&p.profile, p.d, p.l + 1, p.l)?;
    let analytic: Vec<f64> = (0..p.count as u32)
        .map(|k| sqdt_coulomb_energy(&p.profile, p.d, p.l + 1 + k, p.l))
        .collect::<Result<_>>()?;
    // the y-dependent part of v_eff does not depend on n
    let op = sqdt_coulomb_operator(&p.profile, p.d, s.degree + p.l + 1, p.l)?;
    let v = move |y: f64| op.potential(y);
    let fine = fd_eigensolve(&v, p.y_max, p.count, p.grid_points)?;
    let coarse = fd_eigensolve(&v, p.y_max, p.count, p.grid_points / 2)?;
    let comparison = compare_spectra(&analytic, &fine, 0.0);
    let coarse = compare_spectra(&analytic, &coarse, 0.0);
    let convergence_ratio = coarse.rows[0].absolute_error / comparison.rows[0].absolute_error;
    Ok(FdOracleRun { comparison, coarse, convergence_ratio })
}

/// The oscillator benchmark `−f″ + Y² f` with `L = 0`: levels 3, 7, 11.
pub fn fd_oscillator_run() -> Result<FdOracleRun> {
    let v = |y: f64| y * y;
    let analytic = [3.0, 7.0, 11.0];
    let fine = fd_eigensolve(&v, 10.0, 3, 2000)?;
    let coarse = fd_eigensolve(&v, 10.0, 3, 1000)?;
    let comparison = compare_spectra(&analytic, &fine, 0.0);
    let coarse = compare_spectra(&analytic, &coarse, 0.0);
    let convergence_ratio = coarse.rows[0].absolute_error / comparison.rows[0].absolute_error;
    Ok(FdOracleRun { comparison, coarse, convergence_ratio })
}

/// Bosonic partner of the `d = 3, l = 0` Coulomb problem, levels `0` and
/// `3/16`, at 4000 points on `(0, 200)`.
pub fn fd_hydrogen_susy_run() -> Result<SpectrumComparison> {
    let (v_plus, _) = crate::susy::partner_potentials(&superpotential(SusySystem::Coulomb { d: 3, l: 0 })?);
    let v = move |y: f64| v_plus.potential(y);
    let analytic: Vec<f64> = (1..=2).map(|n| crate::susy::susy_energy_coulomb(3, n, 0).map(|e| e.value)).collect::<Result<_>>()?;
    Ok(compare_spectra(&analytic, &fd_eigensolve(&v, 200.0, 2, 4000)?, 0.0))
}

/// Finite-difference oracle against the analytic SQDT spectrum.
pub fn fd_oracle_suite(p: &FdParams) -> SuiteReport {
    let started = Instant::now();
    let mut checks = Vec::new();
    match fd_oracle_run(p) {
        Ok(run) => {
            checks.push(Check::new("sqdt spectrum relative error", run.comparison.max_relative_error(), FD_TOL));
            let r = run.convergence_ratio;
            checks.push(Check::flag("sqdt convergence ratio in [3, 5]", (3.0..=5.0).contains(&r), Some(format!("{r}"))));
        }
        Err(e) => checks.push(Check::failed("sqdt spectrum", FD_TOL, e)),
    }
    match fd_oscillator_run() {
        Ok(run) => {
            checks.push(Check::new("oscillator spectrum relative error", run.comparison.max_relative_error(), 1e-5));
            let r = run.convergence_ratio;
            checks.push(Check::flag("oscillator convergence ratio in [3, 5]", (3.0..=5.0).contains(&r), Some(format!("{r}"))));
        }
        Err(e) => checks.push(Check::failed("oscillator spectrum", 1e-5, e)),
    }
    match fd_hydrogen_susy_run() {
        Ok(c) => {
            // a zero level has no relative scale; its error is absolute
            checks.push(Check::new("hydrogen bosonic ground level (absolute)", c.rows[0].absolute_error, FD_TOL));
            checks.push(Check::new("hydrogen bosonic first excited level", c.rows[1].relative_error, FD_TOL));
        }
        Err(e) => checks.push(Check::failed("hydrogen bosonic spectrum", FD_TOL, e)),
    }
    SuiteReport::finish("fd-oracle", checks, started)
}

/// Every suite at its default parameters.
pub fn all_suites() -> Vec<SuiteReport> {
    vec![
        orthonormality_suite(&OrthonormalityParams::default()),
        residual_suite(&ResidualParams::default()),
        susy_suite(&SusyParams::default()),
        maps_suite(),
        fd_oracle_suite(&FdParams::default()),
    ]
}
