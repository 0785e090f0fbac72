use clap::{Args, Parser, Subcommand, ValueEnum};
use knoedel_core::montecarlo::DEFAULT_SEED;
use knoedel_core::{ModelKind, State, DEFAULT_ORDER};

#[derive(Parser, Debug)]
#[command(name = "knoedel", version, about = "Exact enumeration of ternary Knödel walks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact state distributions for steps 0..=STEPS, from the dynamic program.
    Table(TableArgs),
    /// A single probability, from the dynamic program or the closed forms.
    Coeff(CoeffArgs),
    /// Run every cross-check suite; exit status 1 if any fails.
    Verify(VerifyArgs),
    /// Seeded simulation compared against the exact distribution.
    Simulate(SimulateArgs),
    /// Coefficients of a series in x = z^3.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    DoubleLarge,
    DoubleSmall,
}

impl From<Model> for ModelKind {
    fn from(m: Model) -> Self {
        match m {
            Model::DoubleLarge => ModelKind::DoubleLarge,
            Model::DoubleSmall => ModelKind::DoubleSmall,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Dp,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// t(x), the inverse of x = (27/4) t (1 - t)^2
    T,
    /// 1 / (1 - t)
    Inv1mt,
    /// the kernel root 2 / (3 (1 - t))
    U1,
    /// return probabilities of the double-large walk
    F0,
    /// return probabilities of the double-small walk
    G0,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::T => "t",
            Which::Inv1mt => "inv1mt",
            Which::U1 => "u1",
            Which::F0 => "f0",
            Which::G0 => "g0",
        }
    }
}

#[derive(Args, Debug)]
pub struct Render {
    /// Output format.
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Significant digits of the advisory decimal column.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..=200))]
    pub digits: u16,
    /// Leave the decimal column empty.
    #[arg(long)]
    pub no_decimal: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    /// Last step to tabulate.
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    /// Red-edge probability (a/b or decimal); defaults to the balanced value.
    #[arg(long)]
    pub p: Option<String>,
    #[command(flatten)]
    pub render: Render,
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    /// Target state: a non-negative integer or "beta".
    #[arg(long)]
    pub state: State,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Source::ClosedForm)]
    pub source: Source,
    /// Red-edge probability; closed forms only accept the balanced value.
    #[arg(long)]
    pub p: Option<String>,
    #[command(flatten)]
    pub render: Render,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Truncation order for series checks.
    #[arg(long, default_value_t = DEFAULT_ORDER as u64, value_parser = clap::value_parser!(u64).range(2..))]
    pub order: u64,
    /// Largest step count checked against the dynamic program.
    #[arg(long, default_value_t = 30)]
    pub max_steps: usize,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub p: Option<String>,
    #[command(flatten)]
    pub render: Render,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    /// Number of coefficients (powers 0..ORDER-1).
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[command(flatten)]
    pub render: Render,
}
