//! Command-line behaviour and JSON schema.

use std::process::Command;

use serde_json::Value;

fn radmap(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_radmap")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = radmap(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}\n{stderr}"));
    (code, v)
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().expect("object").keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

fn close(a: &Value, b: f64, tol: f64) -> bool {
    (a.as_f64().expect("number") - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn envelope_keys() {
    let (code, v) = json(&["spectrum", "coulomb", "--d", "3", "--n-max", "2"]);
    assert_eq!(code, 0);
    assert_eq!(keys(&v), ["command", "failures", "passed", "result"]);
    assert_eq!(v["command"], "spectrum coulomb");
    assert_eq!(v["passed"], true);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn error_envelope_and_exit_status() {
    let (code, v) = json(&[
        "map", "general", "--d", "3", "--lambda", "1", "--n", "2", "--l", "1", "--delta", "0.1", "--Delta", "0.5", "--J",
        "1",
    ]);
    assert_eq!(code, 2);
    assert_eq!(keys(&v), ["command", "error", "passed"]);
    assert_eq!(keys(&v["error"]), ["kind", "message"]);
    assert_eq!(v["error"]["kind"], "consistency");
    assert!(v["error"]["message"].as_str().unwrap().contains("A = 2a"));
    assert_eq!(v["passed"], false);

    let (code, v) = json(&["spectrum", "coulomb", "--d", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "domain");

    let (code, _, stderr) = radmap(&["spectrum", "nonsense"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn coulomb_spectrum() {
    let (_, v) = json(&["spectrum", "coulomb", "--d", "3", "--l", "0", "--n-max", "3"]);
    let r = &v["result"];
    assert_eq!(keys(r), ["d", "levels", "system", "units"]);
    let levels = r["levels"].as_array().unwrap();
    assert_eq!(keys(&levels[0]), ["energy", "l", "n"]);
    for (lv, want) in levels.iter().zip([-0.25, -1.0 / 16.0, -1.0 / 36.0]) {
        assert!(close(&lv["energy"], want, 1e-15));
    }
}

#[test]
fn sodium_spectrum() {
    let (_, v) = json(&["spectrum", "sqdt-coulomb", "--d", "3", "--l", "0", "--profile", "sodium", "--count", "3"]);
    let levels = v["result"]["levels"].as_array().unwrap();
    assert_eq!(keys(&levels[0]), ["energy", "l", "n", "n_s", "n_star"]);
    for (lv, nu) in levels.iter().zip([1.65, 2.65, 3.65]) {
        assert!(close(&lv["energy"], -1.0 / (4.0 * nu * nu), 1e-14));
    }
    assert_eq!(levels[0]["n_s"], 3);
}

#[test]
fn oscillator_profile_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("osc.txt");
    std::fs::write(&path, "# test profile\nJ = 0\n[rows]\n0 1 0.35\n").unwrap();
    let (code, v) = json(&[
        "spectrum", "sqdt-oscillator", "--D", "3", "--L", "0", "--profile", path.to_str().unwrap(), "--count", "3",
    ]);
    assert_eq!(code, 0, "{v}");
    let e: Vec<f64> = v["result"]["levels"].as_array().unwrap().iter().map(|l| l["energy"].as_f64().unwrap()).collect();
    assert!((e[1] - e[0] - 4.0).abs() < 1e-12 && (e[2] - e[1] - 4.0).abs() < 1e-12);
    // A = 1 − 0.35
    assert!((e[0] - (3.0 + 4.0 * 0.65)).abs() < 1e-12);

    std::fs::write(&path, "[rows]\n0 1 0.35 2\n").unwrap();
    let (code, v) = json(&["spectrum", "sqdt-oscillator", "--profile", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "profile");
}

#[test]
fn wavefn_values() {
    let (_, v) = json(&["wavefn", "coulomb", "--d", "3", "--n", "1", "--l", "0", "--at", "1,2,3"]);
    let r = &v["result"];
    assert_eq!(keys(r), ["energy", "grid", "label", "samples"]);
    let s = r["samples"].as_array().unwrap();
    assert_eq!(keys(&s[0]), ["derivative", "radius", "value"]);
    for (row, y) in s.iter().zip([1.0f64, 2.0, 3.0]) {
        assert!(close(&row["value"], 2f64.sqrt() * y * (-y / 2.0).exp() / 2.0, 1e-14));
    }

    let (_, v) = json(&["wavefn", "oscillator", "--D", "3", "--N", "0", "--L", "0", "--at", "1"]);
    let want = (4.0 / std::f64::consts::PI.sqrt()).sqrt() * (-0.5f64).exp();
    assert!(close(&v["result"]["samples"][0]["value"], want, 1e-14));
}

#[test]
fn wavefn_default_grid_and_csv() {
    let (_, v) = json(&["wavefn", "coulomb", "--d", "3", "--n", "2", "--l", "1"]);
    let g = &v["result"]["grid"];
    assert_eq!(g["kind"], "geometric");
    assert_eq!(g["points"], 200);
    assert!(close(&g["hi"], 80.0, 1e-14));

    let (code, csv, _) = radmap(&["--format", "csv", "wavefn", "coulomb-continuum", "--E", "1", "--at", "1,2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "radius,re,im");
    assert_eq!(lines.len(), 3);

    let (code, v) = json(&["wavefn", "coulomb-continuum"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "input");
}

#[test]
fn map_classic_report() {
    let (code, v) = json(&["map", "classic", "--d", "3", "--lambda", "0", "--n", "2", "--l", "1"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(keys(r), ["checks", "oscillator", "report"]);
    assert_eq!(r["oscillator"]["D"], 4);
    assert_eq!(r["oscillator"]["N"], 2);
    assert_eq!(r["oscillator"]["L"], 2);
    let rep = &r["report"];
    assert_eq!(
        keys(rep),
        [
            "A",
            "a",
            "coulomb_energy",
            "energy_relation_residual",
            "grid",
            "k",
            "lambda",
            "max_pointwise_rel_error",
            "norm_defect",
            "notes",
            "oscillator_energy",
            "quantum_numbers",
            "residual",
            "transported_norm",
            "warnings",
        ]
    );
    assert_eq!(keys(&rep["quantum_numbers"]), ["coulomb", "oscillator", "relation_residual", "underlying"]);
    assert_eq!(keys(&rep["quantum_numbers"]["oscillator"]), ["D_star", "L_star", "N_star"]);
    assert!(rep["max_pointwise_rel_error"].as_f64().unwrap() < 1e-10);
    assert_eq!(keys(&r["checks"][0]), ["name", "passed", "tolerance", "value"]);
}

#[test]
fn map_general_odd_dimension() {
    let (code, v) = json(&[
        "map", "general", "--d", "3", "--lambda", "1", "--n", "2", "--l", "1", "--delta", "0.1", "--Delta", "0.7", "--J",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["quantum_numbers"]["oscillator"]["D_star"], 3.0);
}

#[test]
fn map_three_dim_and_continuum() {
    let (code, v) = json(&["map", "three-dim", "--lambda", "0", "--case", "coulomb-exact", "--n", "3", "--l", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["quantum_numbers"]["oscillator"]["N_star"], 4.5);

    let (code, v) = json(&["map", "repulsive", "--E", "1", "--samples"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(keys(r), ["checks", "report", "samples"]);
    assert!(r["report"]["F"].as_f64().unwrap() < 0.0);
    assert_eq!(
        keys(&r["report"]),
        ["D", "E", "F", "L", "d", "energy_relation_residual", "fit", "l", "lambda", "notes", "repulsive", "residual"]
    );
}

#[test]
fn table1_check() {
    let (code, v) = json(&["table1", "--check"]);
    assert_eq!(code, 0);
    let rows = v["result"]["table"]["rows"].as_array().unwrap();
    let got: Vec<&str> = rows.iter().map(|r| r["Delta_text"].as_str().unwrap()).collect();
    assert_eq!(got, ["1.20", "1.218", "0.52", "0.50", "0.5"]);

    let (code, csv, _) = radmap(&["table1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().next().unwrap(), "l,i,n,n_s,delta,L,I,N,N_s,Delta");
    assert_eq!(csv.lines().count(), 6);

    // the reference values belong to λ = 1
    let (code, v) = json(&["table1", "--check", "--lambda", "0"]);
    assert_eq!(code, 1);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_suites() {
    let (code, v) = json(&["verify", "susy", "--d", "3", "--l", "0"]);
    assert_eq!(code, 0);
    let suites = v["result"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(
        keys(&suites[0]),
        ["check_count", "checks", "failures", "passed", "runtime_seconds", "suite", "worst_ratio"]
    );
    assert_eq!(suites[0]["check_count"], 6);

    let (code, v) = json(&["verify", "fd-oracle", "--profile", "sodium"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["suites"][0]["passed"], true);

    // too coarse a grid misses the oracle tolerance
    let (code, v) = json(&["verify", "fd-oracle", "--grid-points", "200"]);
    assert_eq!(code, 1);
    let f = &v["failures"][0];
    assert_eq!(keys(f), ["check", "tolerance", "value"]);
    assert!(f["check"].as_str().unwrap().starts_with("fd-oracle: "));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let (code, stdout, _) = radmap(&["table1", "--format", "text", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("1.218"));
}
