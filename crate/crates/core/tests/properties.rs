use proptest::prelude::*;
use radmap::continuum::continuum_map;
use radmap::mapping::{classic_map, general_map, MapSpec};
use radmap::sqdt::{
    coulomb_starred, sqdt_coulomb_operator, sqdt_coulomb_state, sqdt_oscillator_energy, CoulombDefectProfile,
    OscillatorDefectProfile,
};
use radmap::susy::{coulomb_tier_energy, oscillator_tier_energy, SusySystem};
use radmap::systems::{
    coulomb_energy, coulomb_operator, coulomb_state, oscillator_operator, oscillator_state, CoulombQN, OscillatorQN,
    PhysicalScales, RadialFunction,
};
use radmap::verify::{residual_scan, GridSpec};

fn unit() -> PhysicalScales {
    PhysicalScales::default()
}

fn sign_changes(f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> usize {
    let h = (hi - lo) / (points - 1) as f64;
    let mut count = 0;
    let mut prev = f(lo);
    for i in 1..points {
        let v = f(lo + h * i as f64);
        if v != 0.0 && prev != 0.0 && (v > 0.0) != (prev > 0.0) {
            count += 1;
        }
        if v != 0.0 {
            prev = v;
        }
    }
    count
}

// Laguerre L_k^{(α)}(x) from its explicit series.
fn laguerre_series(k: u32, alpha: f64, x: f64) -> f64 {
    let mut term = 1.0; // binomial(k+α, k) built up below
    for m in 1..=k {
        term *= (alpha + m as f64) / m as f64;
    }
    let mut sum = term;
    for m in 1..=k {
        term *= -((k - m + 1) as f64) / ((alpha + m as f64) * m as f64) * x;
        sum += term;
    }
    sum
}

fn simpson(f: impl Fn(f64) -> f64, hi: f64, panels: usize) -> f64 {
    let h = hi / panels as f64;
    let mut s = f(0.0) + f(hi);
    for i in 1..panels {
        s += f(h * i as f64) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coulomb_levels_depend_on_n_and_d_only(d in 2u32..10, n in 1u32..12, l1 in 0u32..12, l2 in 0u32..12) {
        prop_assume!(l1 < n && l2 < n);
        let e1 = coulomb_energy(CoulombQN::new(d, n, l1).unwrap()).unwrap();
        let e2 = coulomb_energy(CoulombQN::new(d, n, l2).unwrap()).unwrap();
        prop_assert_eq!(e1, e2);
    }

    #[test]
    fn node_counts(d in 2u32..7, l in 0u32..4, k in 0u32..6, dim in 1u32..7, big_l in 0u32..4) {
        let w = coulomb_state(CoulombQN::new(d, l + 1 + k, l).unwrap(), &unit()).unwrap();
        let nu = (l + 1 + k) as f64 + (d as f64 - 3.0) / 2.0;
        prop_assert_eq!(sign_changes(|y| w.value(y), 1e-3, 40.0 * nu, 8000), k as usize);
        prop_assume!(dim != 1 || big_l <= 1);
        let o = oscillator_state(OscillatorQN::new(dim, big_l + 2 * k, big_l).unwrap(), &unit()).unwrap();
        prop_assert_eq!(sign_changes(|y| o.value(y), 1e-3, 9.0, 8000), k as usize);
    }

    #[test]
    fn exact_state_residuals(d in 2u32..9, l in 0u32..4, k in 0u32..6, dim in 1u32..8, big_l in 0u32..4) {
        let qn = CoulombQN::new(d, l + 1 + k, l).unwrap();
        let w = coulomb_state(qn, &unit()).unwrap();
        let e = coulomb_energy(qn).unwrap();
        let nu = qn.n as f64 + qn.gamma();
        let r = residual_scan(&coulomb_operator(qn, e).unwrap(), &w, &GridSpec::coulomb(nu));
        prop_assert!(r.max_rel < 1e-9, "coulomb residual {}", r.max_rel);
        prop_assume!(dim != 1 || big_l <= 1);
        let oq = OscillatorQN::new(dim, big_l + 2 * k, big_l).unwrap();
        let o = oscillator_state(oq, &unit()).unwrap();
        let op = oscillator_operator(oq, o.energy()).unwrap();
        let r = residual_scan(&op, &o, &GridSpec::oscillator());
        prop_assert!(r.max_rel < 1e-9, "oscillator residual {}", r.max_rel);
    }

    #[test]
    fn sqdt_oscillator_spacing_is_four(
        dim in 1u32..6, big_l in 0u32..4, big_i in 0u32..3, delta in -1.0f64..2.0, big_j in 0i32..2,
    ) {
        prop_assume!(dim != 1 || big_l <= 1);
        let p = OscillatorDefectProfile::uniform(big_i, delta, big_j);
        prop_assume!(p.check_range(dim, big_l).is_ok());
        let e: Vec<f64> = (0..4).map(|k| sqdt_oscillator_energy(&p, dim, big_l + 2 * k, big_l).unwrap()).collect();
        for w in e.windows(2) {
            prop_assert!((w[1] - w[0] - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sqdt_state_is_the_starred_closed_form(l in 0u32..3, k in 0u32..4, i in 0u32..2, delta in -0.4f64..1.4, j in 0i32..2) {
        let p = CoulombDefectProfile::uniform(i, delta, j);
        prop_assume!(p.check_range(3, l).is_ok());
        let n = l + 1 + k;
        let s = coulomb_starred(&p, 3, n, l).unwrap();
        let state = sqdt_coulomb_state(&p, 3, n, l, &unit()).unwrap();
        let (ell, nu) = (s.l_star + s.gamma_star, s.n_star + s.gamma_star);
        prop_assume!(ell > -0.4);
        let shape = |y: f64| y.powf(ell + 1.0) * (-y / (2.0 * nu)).exp() * laguerre_series(k, 2.0 * ell + 1.0, y / nu);
        let hi = 60.0 * nu;
        let norm = simpson(|y| shape(y).powi(2), hi, 20000).sqrt();
        let sign = state.value(nu).signum() * shape(nu).signum();
        let mut worst = 0.0f64;
        for y in GridSpec::coulomb(nu).points() {
            worst = worst.max((state.value(y) - sign * shape(y) / norm).abs());
        }
        prop_assert!(worst < 1e-8, "deviation {worst}");
        let op = sqdt_coulomb_operator(&p, 3, n, l).unwrap();
        let r = residual_scan(&op, &state, &GridSpec::coulomb(nu));
        prop_assert!(r.max_rel < 1e-8);
    }

    #[test]
    fn general_map_identities(
        d in 3u32..6, lambda in 0i32..2, n in 1u32..5, l in 0u32..4, i in 0u32..2,
        delta in -0.5f64..0.5, big_i in 0u32..2, big_j in 0i32..3,
    ) {
        prop_assume!(l < n);
        let coulomb = CoulombDefectProfile::uniform(i, delta, 0);
        let a = coulomb.a(l);
        // A = I − Δ + J/2 = 2a
        let big_delta = big_i as f64 + big_j as f64 / 2.0 - 2.0 * a;
        let spec = MapSpec { lambda, d, n, l, coulomb, oscillator: OscillatorDefectProfile::uniform(big_i, big_delta, big_j) };
        let result = general_map(&spec, &unit());
        prop_assume!(result.is_ok());
        let (r, _) = result.unwrap();
        prop_assert!(r.max_pointwise_rel_error < 1e-10, "pointwise {}", r.max_pointwise_rel_error);
        prop_assert!(r.energy_relation_residual.abs() < 1e-12);
        prop_assert!(r.norm_defect < 1e-8);
    }

    #[test]
    fn degenerate_coulomb_states_map_to_degenerate_oscillator_states(d in 3u32..6, lambda in 0i32..2, n in 2u32..7) {
        let f: Vec<f64> = (0..n)
            .filter_map(|l| classic_map(d, lambda, n, l, &unit()).ok())
            .map(|m| m.state.energy())
            .collect();
        prop_assert!(!f.is_empty());
        prop_assert!(f.iter().all(|&x| x == f[0]));
    }

    #[test]
    fn zero_profiles_reduce_to_classic(d in 3u32..6, lambda in 0i32..2, n in 1u32..6, l in 0u32..5) {
        prop_assume!(l < n);
        let m = classic_map(d, lambda, n, l, &unit()).unwrap();
        let (r, _) = general_map(&MapSpec::classic(d, lambda, n, l), &unit()).unwrap();
        let o = r.quantum_numbers.oscillator;
        prop_assert_eq!((o.dim_star, o.n_star, o.l_star), (m.oscillator.dim as f64, m.oscillator.n as f64, m.oscillator.l as f64));
        // successive l land on every second L
        prop_assert_eq!(m.oscillator.l, 2 * l + lambda as u32);
    }

    #[test]
    fn susy_pairings(d in 2u32..8, l in 0u32..4, n in 1u32..8, dim in 1u32..8) {
        let c = SusySystem::Coulomb { d, l };
        let nn = l + 1 + n;
        // fermionic n' = n pairs with bosonic n
        let bos = coulomb_tier_energy(c, 0, nn).unwrap().value;
        let fer = coulomb_tier_energy(c, 1, nn).unwrap().value;
        prop_assert!((bos - fer).abs() <= 1e-15 * bos.abs().max(1.0));
        prop_assume!(dim != 1 || l <= 1);
        let o = SusySystem::Oscillator { dim, l };
        let big_n = l + 2 * n;
        let bos = oscillator_tier_energy(o, 0, big_n).unwrap().value;
        let fer = oscillator_tier_energy(o, 1, big_n - 1).unwrap().value;
        prop_assert_eq!(bos, fer);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn continuum_map_proportionality(energy in 0.1f64..5.0, lambda in 0i32..2, l in 0u32..3) {
        let (r, _) = continuum_map(3, energy, l, lambda).unwrap();
        prop_assert!(r.residual.max_rel < 1e-6);
        prop_assert!(r.fit.ratio_spread < 1e-8, "spread {}", r.fit.ratio_spread);
        prop_assert!(r.energy_relation_residual.abs() < 1e-12);
    }
}
