use std::fmt::Write as _;

use radmap::continuum::{
    continuum_map, coulomb_continuum_wave, coulomb_grid, inverted_oscillator_wave, oscillator_grid, repulsive_coulomb_wave,
    repulsive_map, ComplexSample, ContinuumMapReport, ContinuumWave, TransportedWave, WaveSign,
};
use radmap::mapping::{
    classic_map, default_level_counts, general_map, sodium_table, three_dim_map, MapReport, MapSpec, ThreeDimCase,
    NORM_TOL,
};
use radmap::sqdt::{
    coulomb_starred, oscillator_starred, parse_coulomb_profile, parse_oscillator_profile, sqdt_coulomb_energy,
    sqdt_coulomb_state, sqdt_oscillator_energy, sqdt_oscillator_state, CoulombDefectProfile, OscillatorDefectProfile,
};
use radmap::suites::{
    fd_oracle_suite, maps_suite, orthonormality_suite, residual_suite, susy_suite, Check, FdParams, OrthonormalityParams,
    ResidualParams, SuiteReport, SusyParams, CONTINUUM_RATIO_TOL, CONTINUUM_RESIDUAL_TOL, ENERGY_TOL, POINTWISE_TOL,
};
use radmap::susy::SusySystem;
use radmap::systems::{
    coulomb_energy, coulomb_state, oscillator_energy, oscillator_state, CoulombQN, OscillatorQN, PhysicalScales,
    RadialFunction, RadialState,
};
use radmap::verify::GridSpec;
use serde::Serialize;
use serde_json::json;

use crate::cli::*;
use crate::output::{num, to_value, CliError, CliResult, Failure, Outcome};

/// The command-line spelling of an enum value.
fn tag<T: clap::ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn unit() -> PhysicalScales {
    PhysicalScales::default()
}

fn read_profile_file(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read profile {path}: {e}")))
}

/// Preset name (`sodium`, `zero`) or a profile file.
pub fn coulomb_profile(arg: Option<&str>) -> CliResult<CoulombDefectProfile> {
    match arg {
        None | Some("zero") => Ok(CoulombDefectProfile::zero()),
        Some("sodium") => Ok(CoulombDefectProfile::sodium()),
        Some("sodium-image") => Err(CliError::Input("sodium-image is an oscillator profile; use sodium".into())),
        Some(path) => Ok(parse_coulomb_profile(&read_profile_file(path)?)?),
    }
}

/// Preset name (`sodium-image`, `zero`) or a profile file.
pub fn oscillator_profile(arg: Option<&str>) -> CliResult<OscillatorDefectProfile> {
    match arg {
        None | Some("zero") => Ok(OscillatorDefectProfile::zero()),
        Some("sodium-image") => Ok(OscillatorDefectProfile::sodium_image()),
        Some("sodium") => Err(CliError::Input("sodium is a Coulomb profile; use sodium-image".into())),
        Some(path) => Ok(parse_oscillator_profile(&read_profile_file(path)?)?),
    }
}

fn failures_of(prefix: &str, checks: &[Check]) -> Vec<Failure> {
    checks.iter().filter(|c| !c.passed).map(|c| Failure::from_check(prefix, c)).collect()
}

fn checks_csv(rows: impl IntoIterator<Item = (String, Check)>) -> String {
    let mut s = String::from("suite,check,value,tolerance,passed\n");
    for (suite, c) in rows {
        let _ = writeln!(s, "{suite},\"{}\",{},{},{}", c.name.replace('"', "'"), num(c.value), num(c.tolerance), c.passed);
    }
    s
}

// ---------------------------------------------------------------- spectrum

#[derive(Debug, Serialize)]
struct Level {
    n: u32,
    l: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_s: Option<u32>,
    energy: f64,
}

pub fn spectrum(a: &SpectrumArgs) -> CliResult<Outcome> {
    let coulomb_side = matches!(a.system, SpectrumSystem::Coulomb | SpectrumSystem::SqdtCoulomb);
    if a.n_max.is_some() && !coulomb_side {
        return Err(CliError::Input("--n-max applies to Coulomb systems; use --count for oscillators".into()));
    }
    let coulomb_ns: Vec<u32> = match a.n_max {
        Some(n_max) => (a.l + 1..=n_max).collect(),
        None => (a.l + 1..a.l + 1 + a.count).collect(),
    };
    let oscillator_ns: Vec<u32> = (0..a.count).map(|k| a.big_l + 2 * k).collect();
    let mut levels = Vec::new();
    let (name, dim, unit_name) = match a.system {
        SpectrumSystem::Coulomb => {
            for &n in &coulomb_ns {
                levels.push(Level { n, l: a.l, n_star: None, n_s: None, energy: coulomb_energy(CoulombQN::new(a.d, n, a.l)?)? });
            }
            ("coulomb", a.d, "E0")
        }
        SpectrumSystem::Oscillator => {
            for &n in &oscillator_ns {
                let e = oscillator_energy(OscillatorQN::new(a.big_d, n, a.big_l)?)?;
                levels.push(Level { n, l: a.big_l, n_star: None, n_s: None, energy: e });
            }
            ("oscillator", a.big_d, "F0")
        }
        SpectrumSystem::SqdtCoulomb => {
            let p = coulomb_profile(a.profile.as_deref())?;
            for &n in &coulomb_ns {
                let s = coulomb_starred(&p, a.d, n, a.l)?;
                let e = sqdt_coulomb_energy(&p, a.d, n, a.l)?;
                levels.push(Level { n, l: a.l, n_star: Some(s.n_star), n_s: Some(s.n_s), energy: e });
            }
            ("sqdt-coulomb", a.d, "E0")
        }
        SpectrumSystem::SqdtOscillator => {
            let p = oscillator_profile(a.profile.as_deref())?;
            for &n in &oscillator_ns {
                let s = oscillator_starred(&p, a.big_d, n, a.big_l)?;
                let e = sqdt_oscillator_energy(&p, a.big_d, n, a.big_l)?;
                levels.push(Level { n, l: a.big_l, n_star: Some(s.n_star), n_s: Some(s.n_s), energy: e });
            }
            ("sqdt-oscillator", a.big_d, "F0")
        }
    };
    let (nh, lh) = if coulomb_side { ("n", "l") } else { ("N", "L") };
    let mut csv = format!("{nh},{lh},{nh}_star,{nh}_s,energy\n");
    let mut text = format!("{name} spectrum, dimension {dim}, energies in {unit_name}\n");
    for lv in &levels {
        let star = lv.n_star.map(num).unwrap_or_default();
        let ns = lv.n_s.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(csv, "{},{},{star},{ns},{}", lv.n, lv.l, num(lv.energy));
        let _ = writeln!(text, "{nh}={:<3} {lh}={:<3} {:>22.15e}", lv.n, lv.l, lv.energy);
    }
    let dim_key = if coulomb_side { "d" } else { "D" };
    Ok(Outcome {
        command: format!("spectrum {name}"),
        failures: Vec::new(),
        result: json!({ "system": name, dim_key: dim, "units": unit_name, "levels": to_value(&levels) }),
        csv,
        text,
    })
}

// ---------------------------------------------------------------- wavefn

fn sign_of(s: SignArg) -> WaveSign {
    match s {
        SignArg::Outgoing => WaveSign::Outgoing,
        SignArg::Incoming => WaveSign::Incoming,
    }
}

fn bound_state(a: &WavefnArgs) -> CliResult<(RadialState, GridSpec)> {
    let scales = unit();
    let state = match a.system {
        WaveSystem::Coulomb => coulomb_state(CoulombQN::new(a.d, a.n, a.l)?, &scales)?,
        WaveSystem::Oscillator => oscillator_state(OscillatorQN::new(a.big_d, a.big_n, a.big_l)?, &scales)?,
        WaveSystem::SqdtCoulomb => sqdt_coulomb_state(&coulomb_profile(a.profile.as_deref())?, a.d, a.n, a.l, &scales)?,
        WaveSystem::SqdtOscillator => {
            sqdt_oscillator_state(&oscillator_profile(a.profile.as_deref())?, a.big_d, a.big_n, a.big_l, &scales)?
        }
        _ => unreachable!(),
    };
    let grid = match a.system {
        // ν from E = −1/(4ν²)
        WaveSystem::Coulomb | WaveSystem::SqdtCoulomb => GridSpec::coulomb(0.5 / (-state.energy()).sqrt()),
        _ => GridSpec::oscillator(),
    };
    let grid = match a.grid {
        Some((lo, hi, points)) => GridSpec::geometric(lo, hi, points),
        None => grid,
    };
    Ok((state, grid))
}

fn continuum_wave(a: &WavefnArgs) -> CliResult<(ContinuumWave, GridSpec)> {
    let sign = sign_of(a.sign);
    let need_e = || a.energy.ok_or_else(|| CliError::Input("--E is required for Coulomb continuum waves".into()));
    let (wave, grid) = match a.system {
        WaveSystem::CoulombContinuum => (coulomb_continuum_wave(a.d, need_e()?, a.l, sign)?, coulomb_grid()),
        WaveSystem::RepulsiveContinuum => (repulsive_coulomb_wave(a.d, need_e()?, a.l, sign)?, coulomb_grid()),
        WaveSystem::InvertedOscillator => {
            let f = a.big_f.ok_or_else(|| CliError::Input("--F is required for inverted-oscillator waves".into()))?;
            (inverted_oscillator_wave(a.big_d, f, a.big_l, sign)?, oscillator_grid())
        }
        _ => unreachable!(),
    };
    let grid = match a.grid {
        Some((lo, hi, points)) => GridSpec::uniform(lo, hi, points),
        None => grid,
    };
    Ok((wave, grid))
}

pub fn wavefn(a: &WavefnArgs) -> CliResult<Outcome> {
    let complex = matches!(
        a.system,
        WaveSystem::CoulombContinuum | WaveSystem::RepulsiveContinuum | WaveSystem::InvertedOscillator
    );
    if let Some(at) = &a.at {
        if let Some(x) = at.iter().find(|x| !x.is_finite() || **x <= 0.0) {
            return Err(CliError::Input(format!("radii must be positive, got {x}")));
        }
    }
    let command = format!("wavefn {}", tag(&a.system));
    if complex {
        let (wave, grid) = continuum_wave(a)?;
        let radii = a.at.clone().unwrap_or_else(|| grid.points());
        let mut rows = Vec::with_capacity(radii.len());
        let mut csv = String::from("radius,re,im\n");
        for &x in &radii {
            let v = wave.value(x)?;
            rows.push(json!({"radius": x, "re": v.re, "im": v.im}));
            let _ = writeln!(csv, "{},{},{}", num(x), num(v.re), num(v.im));
        }
        let label = to_value(&wave.label());
        let text = format!("{label}\n{}", csv.replace(',', "\t"));
        let grid_value = if a.at.is_some() { serde_json::Value::Null } else { to_value(&grid) };
        return Ok(Outcome {
            command,
            failures: Vec::new(),
            result: json!({"label": label, "grid": grid_value, "samples": rows}),
            csv,
            text,
        });
    }
    let (state, grid) = bound_state(a)?;
    let radii = a.at.clone().unwrap_or_else(|| grid.points());
    let mut rows = Vec::with_capacity(radii.len());
    let mut csv = String::from("radius,value,derivative\n");
    for &x in &radii {
        let s = state.sample(x);
        rows.push(json!({"radius": x, "value": s.value, "derivative": s.d1}));
        let _ = writeln!(csv, "{},{},{}", num(x), num(s.value), num(s.d1));
    }
    let label = to_value(&state.label());
    let text = format!("{label} energy {}\n{}", num(state.energy()), csv.replace(',', "\t"));
    let grid_value = if a.at.is_some() { serde_json::Value::Null } else { to_value(&grid) };
    Ok(Outcome {
        command,
        failures: Vec::new(),
        result: json!({"label": label, "energy": state.energy(), "grid": grid_value, "samples": rows}),
        csv,
        text,
    })
}

// ---------------------------------------------------------------- map

fn report_checks(r: &MapReport) -> Vec<Check> {
    vec![
        Check::new("pointwise", r.max_pointwise_rel_error, POINTWISE_TOL),
        Check::new("energy relation", r.energy_relation_residual.abs(), ENERGY_TOL),
        Check::new("norm", r.norm_defect, NORM_TOL),
        Check::new("quantum-number relations", r.quantum_numbers.relation_residual, ENERGY_TOL),
    ]
}

fn map_report_csv(r: &MapReport) -> String {
    let q = &r.quantum_numbers;
    let rows: [(&str, f64); 20] = [
        ("lambda", r.lambda as f64),
        ("a", r.a),
        ("A", r.big_a),
        ("D", q.underlying.dim as f64),
        ("N", q.underlying.n as f64),
        ("L", q.underlying.l as f64),
        ("d_star", q.coulomb.d_star),
        ("n_star", q.coulomb.n_star),
        ("l_star", q.coulomb.l_star),
        ("D_star", q.oscillator.dim_star),
        ("N_star", q.oscillator.n_star),
        ("L_star", q.oscillator.l_star),
        ("K", r.k),
        ("transported_norm", r.transported_norm),
        ("max_pointwise_rel_error", r.max_pointwise_rel_error),
        ("coulomb_energy", r.coulomb_energy),
        ("oscillator_energy", r.oscillator_energy),
        ("energy_relation_residual", r.energy_relation_residual),
        ("relation_residual", q.relation_residual),
        ("residual_max_rel", r.residual.max_rel),
    ];
    let mut s = String::from("quantity,value\n");
    for (k, v) in rows {
        let _ = writeln!(s, "{k},{}", num(v));
    }
    s
}

fn map_report_text(r: &MapReport) -> String {
    let q = &r.quantum_numbers;
    let mut s = String::new();
    let _ = writeln!(s, "lambda {}  a {}  A {}", r.lambda, r.a, r.big_a);
    let _ = writeln!(s, "underlying  D={} N={} L={}", q.underlying.dim, q.underlying.n, q.underlying.l);
    let _ = writeln!(s, "coulomb     d*={} n*={} l*={}", q.coulomb.d_star, q.coulomb.n_star, q.coulomb.l_star);
    let _ = writeln!(s, "oscillator  D*={} N*={} L*={}", q.oscillator.dim_star, q.oscillator.n_star, q.oscillator.l_star);
    let _ = writeln!(s, "E/E0 {}  F/F0 {}", num(r.coulomb_energy), num(r.oscillator_energy));
    let _ = writeln!(s, "pointwise error {:e}", r.max_pointwise_rel_error);
    let _ = writeln!(s, "energy relation residual {:e}", r.energy_relation_residual);
    let _ = writeln!(s, "norm defect {:e}", r.norm_defect);
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn map_outcome(command: &str, report: MapReport, mut checks: Vec<Check>, extra: serde_json::Value) -> Outcome {
    checks.extend(report_checks(&report));
    let mut result = json!({"report": to_value(&report), "checks": to_value(&checks)});
    if let (Some(obj), serde_json::Value::Object(more)) = (result.as_object_mut(), extra) {
        obj.extend(more);
    }
    Outcome {
        command: command.into(),
        failures: failures_of("", &checks),
        csv: map_report_csv(&report),
        text: map_report_text(&report),
        result,
    }
}

fn continuum_outcome(command: &str, r: ContinuumMapReport, t: &TransportedWave, samples: bool) -> CliResult<Outcome> {
    let checks = vec![
        Check::new("residual", r.residual.max_rel, CONTINUUM_RESIDUAL_TOL),
        Check::new("ratio constancy", r.fit.ratio_spread, CONTINUUM_RATIO_TOL),
        Check::new("energy relation", r.energy_relation_residual.abs(), ENERGY_TOL),
        Check::flag("sign of F", (r.big_f < 0.0) == r.repulsive, None),
    ];
    let mut result = json!({"report": to_value(&r), "checks": to_value(&checks)});
    let mut csv = String::from("quantity,value\n");
    for (k, v) in [
        ("d", r.d as f64),
        ("l", r.l as f64),
        ("lambda", r.lambda as f64),
        ("E", r.energy),
        ("D", r.dim as f64),
        ("L", r.big_l as f64),
        ("F", r.big_f),
        ("residual_max_rel", r.residual.max_rel),
        ("ratio_spread", r.fit.ratio_spread),
        ("constant_re", r.fit.constant.re),
        ("constant_im", r.fit.constant.im),
        ("energy_relation_residual", r.energy_relation_residual),
    ] {
        let _ = writeln!(csv, "{k},{}", num(v));
    }
    if samples {
        let mut rows = Vec::new();
        for y in oscillator_grid().points() {
            let ComplexSample { value, .. } = t.sample(y)?;
            rows.push(json!({"radius": y, "re": value.re, "im": value.im}));
        }
        result["samples"] = serde_json::Value::Array(rows);
    }
    let text = format!(
        "d={} l={} lambda={} E/E0={} -> D={} L={} F/F0={}\nresidual {:e}  ratio spread {:e}  energy relation {:e}\n",
        r.d,
        r.l,
        r.lambda,
        r.energy,
        r.dim,
        r.big_l,
        r.big_f,
        r.residual.max_rel,
        r.fit.ratio_spread,
        r.energy_relation_residual
    );
    Ok(Outcome { command: command.into(), failures: failures_of("", &checks), result, csv, text })
}

pub fn map(kind: &MapKind) -> CliResult<Outcome> {
    let scales = unit();
    match kind {
        MapKind::Classic(a) => {
            let m = classic_map(a.d, a.lambda, a.n, a.l, &scales)?;
            let w = oscillator_state(m.oscillator, &scales)?;
            // closed-form transported state against the closed-form oscillator state
            let (mut diff, mut peak) = (0.0f64, 0.0f64);
            for y in GridSpec::oscillator().points() {
                let (t, o) = (m.state.value(y), w.value(y));
                diff = diff.max((t - o).abs());
                peak = peak.max(o.abs());
            }
            let direct = Check::new("classic transported state", diff / peak, POINTWISE_TOL);
            let (report, _) = general_map(&MapSpec::classic(a.d, a.lambda, a.n, a.l), &scales)?;
            let extra = json!({"oscillator": {"D": m.oscillator.dim, "N": m.oscillator.n, "L": m.oscillator.l}});
            Ok(map_outcome("map classic", report, vec![direct], extra))
        }
        MapKind::General(a) => {
            let coulomb = match &a.coulomb_profile {
                Some(p) => coulomb_profile(Some(p))?,
                None => CoulombDefectProfile::uniform(a.i, a.delta, a.j),
            };
            let oscillator = match &a.oscillator_profile {
                Some(p) => oscillator_profile(Some(p))?,
                None => OscillatorDefectProfile::uniform(a.big_i, a.big_delta, a.big_j),
            };
            let spec = MapSpec { lambda: a.lambda, d: a.d, n: a.n, l: a.l, coulomb, oscillator };
            let (report, _) = general_map(&spec, &scales)?;
            Ok(map_outcome("map general", report, Vec::new(), json!({})))
        }
        MapKind::ThreeDim(a) => {
            let case = match a.case {
                ThreeDimCaseArg::OscillatorExact => ThreeDimCase::OscillatorExact,
                ThreeDimCaseArg::CoulombExact => ThreeDimCase::CoulombExact,
                ThreeDimCaseArg::Sodium => {
                    ThreeDimCase::Custom { coulomb: CoulombDefectProfile::sodium(), counts: default_level_counts() }
                }
            };
            let spec = three_dim_map(a.lambda, &case, a.n, a.l)?;
            let (report, _) = general_map(&spec, &scales)?;
            let dim_ok = report.quantum_numbers.oscillator.dim_star == 3.0 && report.quantum_numbers.coulomb.d_star == 3.0;
            let checks = vec![Check::flag("both sides three-dimensional", dim_ok, None)];
            Ok(map_outcome("map three-dim", report, checks, json!({})))
        }
        MapKind::Continuum(a) => {
            let (r, t) = continuum_map(a.d, a.energy, a.l, a.lambda)?;
            continuum_outcome("map continuum", r, &t, a.samples)
        }
        MapKind::Repulsive(a) => {
            let (r, t) = repulsive_map(a.d, a.energy, a.l, a.lambda)?;
            continuum_outcome("map repulsive", r, &t, a.samples)
        }
    }
}

// ---------------------------------------------------------------- table1

pub fn table1(a: &Table1Args) -> CliResult<Outcome> {
    let table = sodium_table(a.lambda, &default_level_counts())?;
    let failures = if a.check {
        table.check_reference().into_iter().map(|d| Failure::message("reference", d)).collect()
    } else {
        Vec::new()
    };
    Ok(Outcome {
        command: "table1".into(),
        failures,
        result: json!({"table": to_value(&table), "checked": a.check}),
        csv: table.to_csv(),
        text: table.to_text(),
    })
}

// ---------------------------------------------------------------- verify

fn susy_params(a: &VerifyArgs) -> CliResult<SusyParams> {
    let mut p = SusyParams::default();
    if a.d.is_none() && a.big_d.is_none() {
        if a.l.is_some() || a.big_l.is_some() {
            return Err(CliError::Input("--l needs --d and --L needs --D".into()));
        }
        return Ok(p);
    }
    let mut systems = Vec::new();
    if let Some(d) = a.d {
        let ls: Vec<u32> = a.l.map(|l| vec![l]).unwrap_or_else(|| (0..=2).collect());
        systems.extend(ls.into_iter().map(|l| SusySystem::Coulomb { d, l }));
    }
    if let Some(dim) = a.big_d {
        let ls: Vec<u32> = a.big_l.map(|l| vec![l]).unwrap_or_else(|| (0..=2).collect());
        systems.extend(ls.into_iter().filter(|&l| dim != 1 || l <= 1).map(|l| SusySystem::Oscillator { dim, l }));
    }
    p.systems = systems;
    Ok(p)
}

pub fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let restricted = a.d.is_some() || a.big_d.is_some() || a.l.is_some() || a.big_l.is_some();
    if restricted && !matches!(a.suite, Suite::Susy | Suite::All) {
        return Err(CliError::Input("--d/--l/--D/--L restrict the susy suite only".into()));
    }
    if a.profile.is_some() && !matches!(a.suite, Suite::FdOracle | Suite::All) {
        return Err(CliError::Input("--profile applies to the fd-oracle suite only".into()));
    }
    let fd = || -> CliResult<FdParams> {
        Ok(FdParams {
            profile: coulomb_profile(Some(a.profile.as_deref().unwrap_or("sodium")))?,
            grid_points: a.grid_points,
            y_max: a.y_max,
            ..FdParams::default()
        })
    };
    let reports: Vec<SuiteReport> = match a.suite {
        Suite::Orthonormality => vec![orthonormality_suite(&OrthonormalityParams::default())],
        Suite::Residuals => vec![residual_suite(&ResidualParams::default())],
        Suite::Susy => vec![susy_suite(&susy_params(a)?)],
        Suite::Maps => vec![maps_suite()],
        Suite::FdOracle => vec![fd_oracle_suite(&fd()?)],
        Suite::All => vec![
            orthonormality_suite(&OrthonormalityParams::default()),
            residual_suite(&ResidualParams::default()),
            susy_suite(&susy_params(a)?),
            maps_suite(),
            fd_oracle_suite(&fd()?),
        ],
    };
    let mut failures = Vec::new();
    let mut csv_rows = Vec::new();
    let mut text = String::new();
    for r in &reports {
        failures.extend(r.failures.iter().map(|c| Failure::from_check(&r.suite, c)));
        if r.checks.is_empty() {
            failures.push(Failure::message(r.suite.clone(), "suite ran no checks"));
        }
        let shown = if a.full { &r.checks } else { &r.failures };
        csv_rows.extend(shown.iter().map(|c| (r.suite.clone(), c.clone())));
        let _ = writeln!(
            text,
            "{:<15} {}  {} checks  worst ratio {:.3e}  {:.2} s",
            r.suite,
            if r.passed { "PASS" } else { "FAIL" },
            r.check_count,
            r.worst_ratio,
            r.runtime_seconds
        );
    }
    let shown: Vec<SuiteReport> = reports.iter().map(|r| if a.full { r.clone() } else { r.summary() }).collect();
        Ok(Outcome {
        command: format!("verify {}", tag(&a.suite)),
        failures,
        result: json!({"suites": to_value(&shown)}),
        csv: checks_csv(csv_rows),
        text,
    })
}

pub fn run(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Spectrum(a) => spectrum(a),
        Command::Wavefn(a) => wavefn(a),
        Command::Map { kind } => map(kind),
        Command::Table1(a) => table1(a),
        Command::Verify(a) => verify(a),
    }
}

/// Name used in the error envelope before a command has run.
pub fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Spectrum(a) => format!("spectrum {}", tag(&a.system)),
        Command::Wavefn(a) => format!("wavefn {}", tag(&a.system)),
        Command::Map { kind } => format!(
            "map {}",
            match kind {
                MapKind::Classic(_) => "classic",
                MapKind::General(_) => "general",
                MapKind::ThreeDim(_) => "three-dim",
                MapKind::Continuum(_) => "continuum",
                MapKind::Repulsive(_) => "repulsive",
            }
        ),
        Command::Table1(_) => "table1".into(),
        Command::Verify(a) => format!("verify {}", tag(&a.suite)),
    }
}
