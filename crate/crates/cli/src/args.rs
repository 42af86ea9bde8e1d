use clap::{Args, Parser, Subcommand, ValueEnum};
use polya_core::group::DEFAULT_MAX_ORDER;
use polya_core::oracle::DEFAULT_LIMIT;

#[derive(Debug, Parser)]
#[command(name = "polya", version, about = "Count colorings up to symmetry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the cycle index of the group.
    CycleIndex(Options),
    /// Print the pattern inventory for the given colors.
    Inventory(Options),
    /// Print the number of distinct colorings.
    Count(Options),
    /// Print the number of distinct colorings with a given composition.
    Coeff(Options),
    /// List orbits of colorings by brute force.
    Orbits(Options),
    /// Print the elements of the group.
    Group(Options),
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// cyclic:N, dihedral:N, symmetric:N, trivial:N or gens:<perm>[;<perm>...]@N
    #[arg(long)]
    pub group: String,
    /// Comma-separated color names, e.g. r,w,b
    #[arg(long, conflicts_with = "num_colors")]
    pub colors: Option<String>,
    /// Number of colors, named c1..ck where names are needed
    #[arg(long)]
    pub num_colors: Option<usize>,
    /// Color counts, e.g. r=2,w=1,b=1
    #[arg(long)]
    pub composition: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum number of colorings the orbit enumeration may visit
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    pub limit: usize,
    /// Maximum order of a group built from generators
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}
