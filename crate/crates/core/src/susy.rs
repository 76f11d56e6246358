//! Supersymmetric structure at fixed angular momentum.
//!
//! The ladder operator is the real `a = d/dx + u′(x)`; the superpotential
//! `u` is chosen so that `e^{−u}` is the nodeless bosonic ground state.
//! Sector `tier = 0` is the bosonic Hamiltonian `−d² + v⁺`, tier 1 the
//! fermionic `−d² + v⁻`, and tier `q ≥ 2` is the `v⁻` of the superpotential
//! built at angular momentum `base + q − 1`.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::systems::{
    CoulombQN, Jet, OscillatorQN, PhysicalScales, RadialFunction, RadialOperator, RadialState, Sample, StateLabel,
};
use crate::verify::{norm_squared, DecayClass};

/// A sector of fixed angular momentum, the bosonic base of a SUSY.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "system", rename_all = "snake_case")]
pub enum SusySystem {
    Coulomb { d: u32, l: u32 },
    Oscillator {
        #[serde(rename = "D")]
        dim: u32,
        #[serde(rename = "L")]
        l: u32,
    },
}

impl SusySystem {
    fn validate(&self) -> Result<()> {
        match *self {
            SusySystem::Coulomb { d, l } => CoulombQN::new(d, l + 1, l).map(|_| ()),
            SusySystem::Oscillator { dim, l } => OscillatorQN::new(dim, l, l).map(|_| ()),
        }
    }

    /// `ℓ = l + γ` (or `L + Γ`) of the bosonic base.
    pub fn effective_l(&self) -> f64 {
        match *self {
            SusySystem::Coulomb { d, l } => l as f64 + (d as f64 - 3.0) / 2.0,
            SusySystem::Oscillator { dim, l } => l as f64 + (dim as f64 - 3.0) / 2.0,
        }
    }

    fn shifted(&self, by: u32) -> SusySystem {
        match *self {
            SusySystem::Coulomb { d, l } => SusySystem::Coulomb { d, l: l + by },
            SusySystem::Oscillator { dim, l } => SusySystem::Oscillator { dim, l: l + by },
        }
    }
}

/// `u(y) = y/(2(ℓ+1)) − (ℓ+1) ln y` (Coulomb) or `U(Y) = Y²/2 − (ℓ+1) ln Y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Superpotential {
    pub system: SusySystem,
    pub ell: f64,
}

pub fn superpotential(system: SusySystem) -> Result<Superpotential> {
    system.validate()?;
    Ok(Superpotential { system, ell: system.effective_l() })
}

impl Superpotential {
    // (u, u′, u″, u‴)
    pub(crate) fn jet(&self, x: f64) -> Jet {
        let p = self.ell + 1.0;
        match self.system {
            SusySystem::Coulomb { .. } => Jet {
                v: x / (2.0 * p) - p * x.ln(),
                d1: 1.0 / (2.0 * p) - p / x,
                d2: p / (x * x),
                d3: -2.0 * p / (x * x * x),
            },
            SusySystem::Oscillator { .. } => Jet {
                v: 0.5 * x * x - p * x.ln(),
                d1: x - p / x,
                d2: 1.0 + p / (x * x),
                d3: -2.0 * p / (x * x * x),
            },
        }
    }

    /// `(u, u′, u″)` at `x`.
    pub fn sample(&self, x: f64) -> Sample {
        self.jet(x).sample()
    }

    /// Unnormalized ground state `e^{−u}`.
    pub fn ground(&self, x: f64) -> f64 {
        (-self.jet(x).v).exp()
    }
}

/// The partner potentials `v± = u′² ∓ u″`, returned as radial operators at
/// zero energy so that `potential(x)` evaluates them.
pub fn partner_potentials(sp: &Superpotential) -> (RadialOperator, RadialOperator) {
    let ell = sp.ell;
    let p = ell + 1.0;
    match sp.system {
        SusySystem::Coulomb { .. } => {
            let c = 1.0 / (4.0 * p * p);
            (
                RadialOperator { centrifugal: ell * p, coulomb: -1.0, quadratic: 0.0, constant: c, energy: 0.0 },
                RadialOperator { centrifugal: p * (p + 1.0), coulomb: -1.0, quadratic: 0.0, constant: c, energy: 0.0 },
            )
        }
        SusySystem::Oscillator { .. } => (
            RadialOperator { centrifugal: ell * p, coulomb: 0.0, quadratic: 1.0, constant: -(2.0 * ell + 3.0), energy: 0.0 },
            RadialOperator { centrifugal: p * (p + 1.0), coulomb: 0.0, quadratic: 1.0, constant: -(2.0 * ell + 1.0), energy: 0.0 },
        ),
    }
}

/// `a w = w′ + u′ w`, unnormalized, with its norm.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderImage {
    pub superpotential: Superpotential,
    pub source: RadialState,
    /// `‖a w‖`, which squares to the SUSY eigenvalue of the source.
    pub norm: f64,
}

impl RadialFunction for LadderImage {
    fn sample(&self, x: f64) -> Sample {
        let w = self.source.jet(x);
        let u = self.superpotential.jet(x);
        Sample {
            value: w.d1 + u.d1 * w.v,
            d1: w.d2 + u.d2 * w.v + u.d1 * w.d1,
            d2: w.d3 + u.d3 * w.v + 2.0 * u.d2 * w.d1 + u.d1 * w.d2,
        }
    }

    fn decay(&self) -> DecayClass {
        self.source.decay()
    }
}

impl LadderImage {
    /// Value of the image divided by its norm.
    pub fn normalized_value(&self, x: f64) -> f64 {
        self.value(x) / self.norm
    }
}

/// Applies `a` to a bosonic state of the superpotential's sector.
pub fn ladder_down(sp: &Superpotential, state: &RadialState) -> Result<LadderImage> {
    let ok = match (sp.system, state.label()) {
        (SusySystem::Coulomb { d, l }, StateLabel::Coulomb { d: sd, l: sl, .. }) => d as f64 == sd && l as f64 == sl,
        (SusySystem::Oscillator { dim, l }, StateLabel::Oscillator { dim: sd, l: sl, .. }) => {
            if dim == 1 && sd == 1.0 && l as f64 != sl {
                return Err(Error::SectorMismatch(format!(
                    "D=1 parity substacks carry separate supersymmetries: superpotential L={l}, state L={sl}"
                )));
            }
            dim as f64 == sd && l as f64 == sl
        }
        _ => false,
    };
    if !ok {
        return Err(Error::SectorMismatch(format!(
            "state {:?} is not in the bosonic sector of {:?}",
            state.label(),
            sp.system
        )));
    }
    let mut image = LadderImage { superpotential: *sp, source: state.clone(), norm: 1.0 };
    image.norm = norm_squared(&image)?.max(0.0).sqrt();
    Ok(image)
}

/// Sector tier: 0 bosonic, 1 fermionic, 2 second fermionic, …
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SectorLabel {
    pub tier: u32,
}

impl SectorLabel {
    pub fn name(&self) -> String {
        match self.tier {
            0 => "bosonic".into(),
            1 => "fermionic".into(),
            2 => "second-fermionic".into(),
            q => format!("tier-{q}"),
        }
    }
}

/// Energy measured from the bosonic ground level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SusyEnergy {
    pub value: f64,
}

/// Bosonic `ε = 1/(4(l+1+γ)²) − 1/(4(n+γ)²)`.
pub fn susy_energy_coulomb(d: u32, n: u32, l: u32) -> Result<SusyEnergy> {
    coulomb_tier_energy(SusySystem::Coulomb { d, l }, 0, n)
}

/// Bosonic `ε = 2(N − L)`.
pub fn susy_energy_oscillator(dim: u32, n: u32, l: u32) -> Result<SusyEnergy> {
    oscillator_tier_energy(SusySystem::Oscillator { dim, l }, 0, n)
}

/// Tier `q` energy of the state with principal number `n` and angular
/// momentum `l + q` (Coulomb).
pub fn coulomb_tier_energy(base: SusySystem, tier: u32, n: u32) -> Result<SusyEnergy> {
    let SusySystem::Coulomb { d, l } = base else {
        return Err(domain("coulomb_tier_energy needs a Coulomb sector"));
    };
    let qn = CoulombQN::new(d, n, l + tier)?;
    let g = qn.gamma();
    let ell = l as f64 + g;
    let c = tier_constant_coulomb(ell, tier);
    let nu = n as f64 + g;
    Ok(SusyEnergy { value: c - 1.0 / (4.0 * nu * nu) })
}

/// Tier `q` energy of the oscillator state `(N, L+q)`:
/// `2(N−L)` for `q = 0`, `2(N − L − q + 2)` otherwise.
pub fn oscillator_tier_energy(base: SusySystem, tier: u32, n: u32) -> Result<SusyEnergy> {
    let SusySystem::Oscillator { dim, l } = base else {
        return Err(domain("oscillator_tier_energy needs an oscillator sector"));
    };
    check_oscillator_tier(dim, n, l + tier)?;
    let (n, l, q) = (n as f64, l as f64, tier as f64);
    let value = if tier == 0 { 2.0 * (n - l) } else { 2.0 * (n - l - q + 2.0) };
    Ok(SusyEnergy { value })
}

fn tier_constant_coulomb(ell: f64, tier: u32) -> f64 {
    let p = if tier == 0 { ell + 1.0 } else { ell + tier as f64 };
    1.0 / (4.0 * p * p)
}

// Tier states above the bosonic one may leave the D=1 pair {0, 1}; only the
// stack conditions are imposed.
fn check_oscillator_tier(dim: u32, n: u32, l: u32) -> Result<()> {
    if dim < 1 || n < l || !(n - l).is_multiple_of(2) {
        return Err(domain(format!("no oscillator state with D={dim}, N={n}, L={l}")));
    }
    Ok(())
}

/// The radial operator of sector `tier` over the given base.
pub fn tier_operator(base: SusySystem, tier: u32, energy: f64) -> Result<RadialOperator> {
    base.validate()?;
    let op = if tier == 0 {
        partner_potentials(&superpotential(base)?).0
    } else {
        let sp = Superpotential { system: base.shifted(tier - 1), ell: base.effective_l() + (tier - 1) as f64 };
        partner_potentials(&sp).1
    };
    Ok(op.with_energy(energy))
}

/// Eigenstate of sector `tier` with principal number `n`: the ordinary closed
/// form with angular momentum raised by `tier`, with its SUSY energy.
pub fn tier_state(base: SusySystem, tier: u32, n: u32, scales: &PhysicalScales) -> Result<(RadialState, SusyEnergy)> {
    base.validate()?;
    match base {
        SusySystem::Coulomb { d, l } => {
            let state = crate::systems::coulomb_state(CoulombQN::new(d, n, l + tier)?, scales)?;
            Ok((state, coulomb_tier_energy(base, tier, n)?))
        }
        SusySystem::Oscillator { dim, l } => {
            let lq = l + tier;
            check_oscillator_tier(dim, n, lq)?;
            let g = (dim as f64 - 3.0) / 2.0;
            let label = StateLabel::Oscillator { dim: dim as f64, n: n as f64, l: lq as f64 };
            let energy = 2.0 * n as f64 + 2.0 * g + 3.0;
            let state = RadialState::oscillator_form(label, energy, dim as f64, lq as f64 + g, (n - lq) / 2, scales.osc_r0)?;
            Ok((state, oscillator_tier_energy(base, tier, n)?))
        }
    }
}

/// Fermionic (`tier = 1`) or second-fermionic (`tier = 2`) eigenstate with
/// primed quantum numbers; these are the ordinary closed forms.
pub fn fermionic_state(base: SusySystem, tier: u32, n_primed: u32, scales: &PhysicalScales) -> Result<RadialState> {
    if tier == 0 {
        return Err(domain("fermionic_state needs tier >= 1"));
    }
    tier_state(base, tier, n_primed, scales).map(|(s, _)| s)
}

/// Quantum numbers of either system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "system", rename_all = "snake_case")]
pub enum AnyQN {
    Coulomb(CoulombQN),
    Oscillator(OscillatorQN),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StackDirection {
    BosonicToFermionic,
    FermionicToSecondFermionic,
    BosonicToSecondFermionic,
}

/// Relabels the lowest-state identification between stacks:
/// `(n, l) ↦ (n+1, l+1)` per step, and `(N, L) ↦ (N+1, L+1)` per step.
pub fn stack_correspondence(qn: AnyQN, direction: StackDirection) -> AnyQN {
    let k = match direction {
        StackDirection::BosonicToFermionic | StackDirection::FermionicToSecondFermionic => 1,
        StackDirection::BosonicToSecondFermionic => 2,
    };
    match qn {
        AnyQN::Coulomb(q) => AnyQN::Coulomb(CoulombQN { d: q.d, n: q.n + k, l: q.l + k }),
        AnyQN::Oscillator(q) => AnyQN::Oscillator(OscillatorQN { dim: q.dim, n: q.n + k, l: q.l + k }),
    }
}
