use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "radmap", version, about = "Radial Coulomb and oscillator systems and the quadratic maps between them")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels of one angular-momentum stack.
    Spectrum(SpectrumArgs),
    /// Sample a state on a grid.
    Wavefn(WavefnArgs),
    /// Run a Coulomb to oscillator map and check it.
    Map {
        #[command(subcommand)]
        kind: MapKind,
    },
    /// Reproduce the sodium defect table.
    Table1(Table1Args),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumSystem {
    Coulomb,
    Oscillator,
    SqdtCoulomb,
    SqdtOscillator,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(value_enum)]
    pub system: SpectrumSystem,
    /// Coulomb dimension.
    #[arg(long = "d", default_value_t = 3)]
    pub d: u32,
    /// Oscillator dimension.
    #[arg(long = "D", default_value_t = 3)]
    pub big_d: u32,
    /// Coulomb angular momentum.
    #[arg(long = "l", default_value_t = 0)]
    pub l: u32,
    /// Oscillator angular momentum.
    #[arg(long = "L", default_value_t = 0)]
    pub big_l: u32,
    /// Largest Coulomb principal number (Coulomb systems only).
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Number of levels.
    #[arg(long, default_value_t = 5)]
    pub count: u32,
    /// Defect profile: a preset name (sodium, sodium-image, zero) or a file.
    #[arg(long)]
    pub profile: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WaveSystem {
    Coulomb,
    Oscillator,
    SqdtCoulomb,
    SqdtOscillator,
    CoulombContinuum,
    RepulsiveContinuum,
    InvertedOscillator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Outgoing,
    Incoming,
}

#[derive(Debug, Args)]
pub struct WavefnArgs {
    #[arg(value_enum)]
    pub system: WaveSystem,
    #[arg(long = "d", default_value_t = 3)]
    pub d: u32,
    #[arg(long = "D", default_value_t = 3)]
    pub big_d: u32,
    #[arg(long = "n", default_value_t = 1)]
    pub n: u32,
    #[arg(long = "N", default_value_t = 0)]
    pub big_n: u32,
    #[arg(long = "l", default_value_t = 0)]
    pub l: u32,
    #[arg(long = "L", default_value_t = 0)]
    pub big_l: u32,
    /// Continuum Coulomb energy in units of E0.
    #[arg(long = "E", allow_hyphen_values = true)]
    pub energy: Option<f64>,
    /// Inverted-oscillator energy in units of F0.
    #[arg(long = "F", allow_hyphen_values = true)]
    pub big_f: Option<f64>,
    #[arg(long, value_enum, default_value_t = SignArg::Outgoing)]
    pub sign: SignArg,
    #[arg(long)]
    pub profile: Option<String>,
    /// Grid as LO,HI,POINTS (geometric for bound states, uniform for waves).
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<(f64, f64, usize)>,
    /// Explicit radii, comma separated; overrides --grid.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub at: Option<Vec<f64>>,
}

fn parse_grid(s: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected LO,HI,POINTS".into());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|e| format!("LO: {e}"))?;
    let hi: f64 = parts[1].trim().parse().map_err(|e| format!("HI: {e}"))?;
    let points: usize = parts[2].trim().parse().map_err(|e| format!("POINTS: {e}"))?;
    if !(lo > 0.0 && hi > lo && points >= 1) {
        return Err("need 0 < LO < HI and POINTS >= 1".into());
    }
    Ok((lo, hi, points))
}

#[derive(Debug, Subcommand)]
pub enum MapKind {
    /// Defect-free map onto an even-dimensional oscillator.
    Classic(ClassicArgs),
    /// Map between quantum-defect deformed systems.
    General(GeneralArgs),
    /// Map between two three-dimensional systems.
    ThreeDim(ThreeDimArgs),
    /// Continuum Coulomb wave onto the inverted oscillator.
    Continuum(ContinuumArgs),
    /// Repulsive Coulomb wave onto the inverted oscillator at F < 0.
    Repulsive(ContinuumArgs),
}

#[derive(Debug, Args)]
pub struct ClassicArgs {
    #[arg(long = "d")]
    pub d: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: i32,
    #[arg(long = "n")]
    pub n: u32,
    #[arg(long = "l")]
    pub l: u32,
}

#[derive(Debug, Args)]
pub struct GeneralArgs {
    #[arg(long = "d")]
    pub d: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: i32,
    #[arg(long = "n")]
    pub n: u32,
    #[arg(long = "l")]
    pub l: u32,
    /// Coulomb profile preset or file; overrides --i/--delta/--j.
    #[arg(long)]
    pub coulomb_profile: Option<String>,
    /// Oscillator profile preset or file; overrides --I/--Delta/--J.
    #[arg(long)]
    pub oscillator_profile: Option<String>,
    #[arg(long = "i", default_value_t = 0)]
    pub i: u32,
    #[arg(long = "delta", default_value_t = 0.0, allow_hyphen_values = true)]
    pub delta: f64,
    #[arg(long = "j", default_value_t = 0, allow_hyphen_values = true)]
    pub j: i32,
    #[arg(long = "I", default_value_t = 0)]
    pub big_i: u32,
    #[arg(long = "Delta", default_value_t = 0.0, allow_hyphen_values = true)]
    pub big_delta: f64,
    #[arg(long = "J", default_value_t = 0, allow_hyphen_values = true)]
    pub big_j: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ThreeDimCaseArg {
    OscillatorExact,
    CoulombExact,
    Sodium,
}

#[derive(Debug, Args)]
pub struct ThreeDimArgs {
    #[arg(long)]
    pub lambda: i32,
    #[arg(long = "case", value_enum)]
    pub case: ThreeDimCaseArg,
    #[arg(long = "n")]
    pub n: u32,
    #[arg(long = "l")]
    pub l: u32,
}

#[derive(Debug, Args)]
pub struct ContinuumArgs {
    #[arg(long = "d", default_value_t = 3)]
    pub d: u32,
    #[arg(long = "E", allow_hyphen_values = true)]
    pub energy: f64,
    #[arg(long = "l", default_value_t = 0)]
    pub l: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub lambda: i32,
    /// Also emit the transported wave on the oscillator grid.
    #[arg(long)]
    pub samples: bool,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Compare against the reference values and set the exit status.
    #[arg(long)]
    pub check: bool,
    #[arg(long, default_value_t = 1)]
    pub lambda: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Orthonormality,
    Residuals,
    Susy,
    Maps,
    FdOracle,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Restrict the SUSY suite to this Coulomb dimension.
    #[arg(long = "d")]
    pub d: Option<u32>,
    /// Restrict the SUSY suite to this oscillator dimension.
    #[arg(long = "D")]
    pub big_d: Option<u32>,
    #[arg(long = "l")]
    pub l: Option<u32>,
    #[arg(long = "L")]
    pub big_l: Option<u32>,
    /// Coulomb profile for the finite-difference oracle.
    #[arg(long)]
    pub profile: Option<String>,
    /// Grid points for the finite-difference oracle.
    #[arg(long, default_value_t = 4000)]
    pub grid_points: usize,
    /// Truncation radius for the finite-difference oracle.
    #[arg(long, default_value_t = 200.0)]
    pub y_max: f64,
    /// Include passing checks in the report.
    #[arg(long)]
    pub full: bool,
}
