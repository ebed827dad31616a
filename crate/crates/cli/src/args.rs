use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "harmonic-qubits",
    version,
    about = "Qubit states as planar flows with topological defects"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a state and write it as JSON.
    State(StateArgs),
    /// Map a state file to its field.
    Map(MapArgs),
    /// Defects, halos and separability of a state.
    Analyze(AnalyzeArgs),
    /// Build the derivative inner product and report its conditioning.
    Gram(GramArgs),
    /// Run a JSON circuit and emit the field after every step.
    Circuit(CircuitArgs),
    /// Sample a field file on a grid and write SVG and/or CSV.
    Render(RenderArgs),
    /// Lift a field to the sphere and classify the north pole.
    Sphere(SphereArgs),
    /// Necessary and sufficient charge bounds for n qubits.
    Bounds(BoundsArgs),
    /// Linear-independence report for a family of basis fields.
    Checkli(CheckliArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Charge,
    Position,
}

#[derive(Args, Debug, Clone)]
pub struct RepArgs {
    /// Representation used for the mapping.
    #[arg(long, value_enum, default_value = "position")]
    pub rep: Rep,
    /// Defect charge d (defaults: position 1 for n ≤ 2 and 3 for n = 3, 4; charge 3).
    #[arg(long)]
    pub d: Option<u32>,
    /// Basis defect positions as `re,im` pairs separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub defects: Option<String>,
}

#[derive(Args, Debug)]
pub struct StateArgs {
    /// Named state: ghz, w, bell00+, bell00-, bell01+, bell01-.
    #[arg(long, conflicts_with_all = ["basis", "amplitudes"])]
    pub named: Option<String>,
    /// Computational basis state as a bitstring, qubit 1 first.
    #[arg(long, conflicts_with = "amplitudes")]
    pub basis: Option<String>,
    /// Amplitudes as `re,im` pairs separated by `;`, in index order.
    #[arg(long, allow_hyphen_values = true)]
    pub amplitudes: Option<String>,
    /// Qubit count for named states.
    #[arg(long)]
    pub n: Option<usize>,
    /// Apply the quantum Fourier transform to the built state.
    #[arg(long)]
    pub qft: bool,
    /// Scale to unit norm.
    #[arg(long)]
    pub normalize: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    pub state: PathBuf,
    #[command(flatten)]
    pub rep: RepArgs,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    pub state: PathBuf,
    /// Defect charge d for the position mapping.
    #[arg(long)]
    pub d: Option<u32>,
    /// Basis defect positions as `re,im` pairs separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub defects: Option<String>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GramArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub rep: RepArgs,
    /// Write the full context (α, B, P) as JSON.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// Plot window `x_min,x_max,y_min,y_max`.
    #[arg(long, allow_hyphen_values = true)]
    pub bbox: Option<String>,
    /// Samples per axis, `N` or `NX,NY`.
    #[arg(long, default_value = "48")]
    pub res: String,
    /// Velocity magnitude above which arrows are clipped.
    #[arg(long, default_value_t = 10.0)]
    pub clip: f64,
}

#[derive(Args, Debug)]
pub struct CircuitArgs {
    pub circuit: PathBuf,
    /// Initial state file; defaults to |0…0⟩.
    #[arg(long)]
    pub initial: Option<PathBuf>,
    #[command(flatten)]
    pub rep: RepArgs,
    /// Directory for one SVG frame per step.
    #[arg(long)]
    pub render: Option<PathBuf>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Write the per-step states and fields as JSON.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    pub field: PathBuf,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Skip halo detection and draw all zeros alike.
    #[arg(long)]
    pub no_halos: bool,
}

#[derive(Args, Debug)]
pub struct SphereArgs {
    pub field: PathBuf,
    #[arg(long, default_value_t = 24)]
    pub n_theta: usize,
    #[arg(long, default_value_t = 48)]
    pub n_phi: usize,
    /// Write the sphere samples as JSON.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct CheckliArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub rep: RepArgs,
    /// Use the 3^n − 1 variable-particle monomials (charge mapping only).
    #[arg(long)]
    pub variable_particle: bool,
}
