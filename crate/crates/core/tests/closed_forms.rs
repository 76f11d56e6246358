//! Hand-derived closed forms checked through the public API.

use approx::assert_relative_eq;
use radmap::mapping::{classic_map, general_map, MapSpec};
use radmap::sqdt::{sqdt_coulomb_energy, sqdt_oscillator_energy, CoulombDefectProfile, OscillatorDefectProfile};
use radmap::systems::{
    coulomb_energy, coulomb_state, oscillator_energy, oscillator_state, CoulombQN, OscillatorQN, PhysicalScales,
    RadialFunction,
};

fn unit() -> PhysicalScales {
    PhysicalScales::default()
}

#[test]
fn hydrogen_ground_state_values() {
    let w = coulomb_state(CoulombQN::new(3, 1, 0).unwrap(), &unit()).unwrap();
    for y in [1.0f64, 2.0, 3.0] {
        let want = 2f64.sqrt() * y * (-y / 2.0).exp() / 2.0;
        assert_relative_eq!(w.value(y), want, max_relative = 1e-14);
    }
}

#[test]
fn hydrogen_2s_values() {
    // y e^{−y/4} (2 − y/2) has squared norm 64
    let w = coulomb_state(CoulombQN::new(3, 2, 0).unwrap(), &unit()).unwrap();
    for y in [0.5f64, 1.0, 3.0, 7.0] {
        let want = y * (-y / 4.0).exp() * (2.0 - y / 2.0) / 8.0;
        assert_relative_eq!(w.value(y).abs(), want.abs(), max_relative = 1e-13);
    }
}

#[test]
fn oscillator_ground_state_value() {
    let w = oscillator_state(OscillatorQN::new(3, 0, 0).unwrap(), &unit()).unwrap();
    let want = (4.0 / std::f64::consts::PI.sqrt()).sqrt() * (-0.5f64).exp();
    assert_relative_eq!(w.value(1.0), want, max_relative = 1e-14);
}

#[test]
fn spectra() {
    for (n, want) in [(1, -0.25), (2, -1.0 / 16.0), (3, -1.0 / 36.0)] {
        assert_relative_eq!(coulomb_energy(CoulombQN::new(3, n, 0).unwrap()).unwrap(), want, max_relative = 1e-15);
    }
    // F = 2N + D
    assert_eq!(oscillator_energy(OscillatorQN::new(4, 2, 0).unwrap()).unwrap(), 8.0);
    assert_eq!(oscillator_energy(OscillatorQN::new(1, 1, 1).unwrap()).unwrap(), 3.0);
}

#[test]
fn sodium_s_series() {
    let p = CoulombDefectProfile::sodium();
    for (n, nu) in [(1, 1.65), (2, 2.65), (3, 3.65)] {
        let want = -1.0 / (4.0 * nu * nu);
        assert_relative_eq!(sqdt_coulomb_energy(&p, 3, n, 0).unwrap(), want, max_relative = 1e-14);
    }
}

#[test]
fn sqdt_oscillator_steps_by_four() {
    let p = OscillatorDefectProfile::uniform(1, 0.6, 0);
    let e: Vec<f64> = (0..4).map(|k| sqdt_oscillator_energy(&p, 3, 2 * k, 0).unwrap()).collect();
    for w in e.windows(2) {
        assert_relative_eq!(w[1] - w[0], 4.0, epsilon = 1e-12);
    }
}

#[test]
fn classic_map_hydrogen_2p_lands_on_four_dimensions() {
    let m = classic_map(3, 0, 2, 1, &unit()).unwrap();
    assert_eq!((m.oscillator.dim, m.oscillator.n, m.oscillator.l), (4, 2, 2));
    // F = 2√(−1/E) at E = −1/16
    assert_relative_eq!(m.state.energy(), 8.0, max_relative = 1e-15);
    let (r, _) = general_map(&MapSpec::classic(3, 0, 2, 1), &unit()).unwrap();
    assert!(r.max_pointwise_rel_error < 1e-10);
    assert!(r.energy_relation_residual.abs() < 1e-12);
}

#[test]
fn odd_dimension_demo() {
    let spec = MapSpec {
        lambda: 1,
        d: 3,
        n: 2,
        l: 1,
        coulomb: CoulombDefectProfile::uniform(0, 0.1, 0),
        oscillator: OscillatorDefectProfile::uniform(0, 0.7, 1),
    };
    let (r, _) = general_map(&spec, &unit()).unwrap();
    let o = r.quantum_numbers.oscillator;
    assert_eq!(o.dim_star, 3.0);
    assert_relative_eq!(o.n_star, 2.3, epsilon = 1e-12);
    assert_relative_eq!(o.l_star, 2.3, epsilon = 1e-12);
    // 2N + 2Γ + 4A + 3 with N = 3, D = 2, A = −0.2
    assert_relative_eq!(r.oscillator_energy, 6.0 - 1.0 - 0.8 + 3.0, epsilon = 1e-12);
    // 2√(−1/E) + 4a with n + a = 1.9
    assert_relative_eq!(r.oscillator_energy, 4.0 * 1.9 - 0.4, epsilon = 1e-12);
    assert!(r.max_pointwise_rel_error < 1e-10);
}
