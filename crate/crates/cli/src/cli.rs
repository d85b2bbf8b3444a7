use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "heatcount", version, about = "Character-sum counts and heat-kernel series for finite and compact groups")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized steps (character-table splitting, Monte Carlo).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads (default: machine parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solutions of ∏[x_j, y_j]·∏z_j = target with z_j in given classes.
    Count(SurfaceArgs),
    /// Number of solutions of the surface word landing in each class.
    Pushforward(SurfaceArgs),
    /// Solutions of the nested commutator [[x_1, x_2], …, x_n] = target.
    Ncomm(NcommArgs),
    /// Solutions of ∏ x_j u_j x_j⁻¹ = e with u_j in given subgroups.
    Subgroups(SubgroupArgs),
    /// Solutions of ∏[x_j, y_j]·w² = e.
    Square(GenusArgs),
    /// Solutions of ∏[x_j, y_j]·w z w⁻¹ z = e.
    Klein(GenusArgs),
    /// Character-weighted sum over solutions of the surface word.
    Weighted(WeightedArgs),
    /// Exhaustive count of a word equation.
    Oracle(OracleArgs),
    /// Certified character table, with CSV export and import.
    Chartable(ChartableArgs),
    /// Finite-group heat kernels and heat-regularized counts.
    Heat(HeatArgs),
    /// Witten zeta sum Σ d_λ^{−s}.
    Zeta(ZetaArgs),
    /// λ-series and prefactor of the moduli-space volume formula.
    Volume(VolumeArgs),
    /// Push-forward densities on SU(2) and SU(3).
    Density(DensityArgs),
    /// Torus heat kernel H(t, c, e) along decreasing t.
    Vanishing(VanishingArgs),
    /// Monte-Carlo histogram of SU(2) torus angles.
    Mc(McArgs),
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Group spec, e.g. symmetric:3, dihedral:4, perm:[(1,2),(1,2,3)].
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long, default_value_t = 1)]
    pub genus: usize,
    /// Marked-point class, given by any element of it (repeatable).
    #[arg(long = "class")]
    pub classes: Vec<String>,
    /// Target element index.
    #[arg(long, default_value = "0")]
    pub target: String,
}

#[derive(Debug, Args)]
pub struct NcommArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "0")]
    pub target: String,
}

#[derive(Debug, Args)]
pub struct SubgroupArgs {
    #[command(flatten)]
    pub group: GroupArg,
    /// Subgroup by generator indices `1,3`, or `e` / `all` (repeatable).
    #[arg(long = "subgroup", required = true)]
    pub subgroups: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GenusArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
}

#[derive(Debug, Args)]
pub struct WeightedArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long, default_value_t = 1)]
    pub genus: usize,
    #[arg(long = "class")]
    pub classes: Vec<String>,
    /// `<coordinate>:<irrep>`, e.g. `1:chi2` weights x1 by the character chi2 (repeatable).
    #[arg(long = "weight")]
    pub weights: Vec<String>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub group: GroupArg,
    /// Word equation, e.g. `x1*y1*inv(x1)*inv(y1) => 0`.
    #[arg(long)]
    pub word: String,
    #[arg(long = "subgroup")]
    pub subgroups: Vec<String>,
    /// Largest search space explored.
    #[arg(long)]
    pub cap: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ChartableArgs {
    #[command(flatten)]
    pub group: GroupArg,
    #[arg(long)]
    pub export: Option<std::path::PathBuf>,
    #[arg(long = "import")]
    pub import: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Surface,
    Ncomm,
    Subgroups,
}

#[derive(Debug, Args)]
pub struct HeatArgs {
    #[command(flatten)]
    pub group: GroupArg,
    /// Times, comma separated; nonincreasing when --family is given.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<f64>,
    /// Symmetric generating set for the Cayley weight (default: the group's walk set).
    #[arg(long, value_delimiter = ',')]
    pub generators: Vec<String>,
    /// One eigenvalue per irrep instead of a Cayley weight.
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<f64>,
    /// Report heat-regularized counts of this family instead of kernel values.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long, default_value_t = 1)]
    pub genus: usize,
    #[arg(long = "class")]
    pub classes: Vec<String>,
    #[arg(long, default_value = "0")]
    pub target: String,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long = "subgroup")]
    pub subgroups: Vec<String>,
}

#[derive(Debug, Args)]
pub struct RootArg {
    /// Root system: A1 or A2.
    #[arg(long)]
    pub root: String,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[command(flatten)]
    pub root: RootArg,
    #[arg(long)]
    pub s: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Report the raw partial sum up to this Casimir value instead.
    #[arg(long)]
    pub cutoff: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    #[command(flatten)]
    pub root: RootArg,
    #[arg(long)]
    pub genus: usize,
    /// Marked point, e.g. `A1:theta=1.2` (repeatable).
    #[arg(long = "point")]
    pub points: Vec<String>,
    #[arg(long, default_value_t = 0.0)]
    pub t: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub root: RootArg,
    #[arg(long)]
    pub point: String,
    #[arg(long, default_value_t = 0.0)]
    pub t: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Commutator density of this genus.
    #[arg(long, conflicts_with_all = ["slots", "ncomm"])]
    pub genus: Option<usize>,
    /// Conjugate-subgroup density with slots from torus, full, trivial.
    #[arg(long, value_delimiter = ',', conflicts_with = "ncomm")]
    pub slots: Vec<String>,
    /// Nested-commutator density [[x_1, x_2], …, x_n] (A1, n = 2 or 3).
    #[arg(long)]
    pub ncomm: Option<usize>,
    /// Quadrature nodes for --ncomm.
    #[arg(long, default_value_t = 512)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct VanishingArgs {
    #[command(flatten)]
    pub root: RootArg,
    #[arg(long)]
    pub point: String,
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<f64>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Commutator,
    Identity,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 50)]
    pub bins: usize,
    #[arg(long, value_enum, default_value_t = MapArg::Commutator)]
    pub map: MapArg,
    /// Regularization of the reference commutator density.
    #[arg(long, default_value_t = 0.005)]
    pub t: f64,
}
