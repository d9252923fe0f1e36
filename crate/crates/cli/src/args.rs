use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use solvlie_core::Limits;

use crate::sweep::Suite;

#[derive(Debug, Parser)]
#[command(name = "solvlie", version, about = "Exact conjugacy checks for maximal subalgebras of solvable Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Add wall-clock time to the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Command {
    /// Parse a document and check the Jacobi identity and solvability.
    Validate(ValidateArgs),
    /// Structural queries on a document.
    Query(QueryArgs),
    /// Decide whether two maximal subalgebras are conjugate.
    Conjugacy(ConjugacyArgs),
    /// Run theorem sweeps.
    Theorems(TheoremsArgs),
    /// Emit a catalog algebra as a document.
    Fixture(FixtureArgs),
    /// Emit a seeded random solvable algebra as a document.
    Random(RandomArgs),
}

#[derive(Clone, Debug, Default, Args, Serialize)]
pub struct CapArgs {
    /// Subspace enumeration cap [env: SOLVLIE_MAX_SUBSPACES].
    #[arg(long)]
    pub max_subspaces: Option<u128>,
    /// Group and orbit closure cap.
    #[arg(long)]
    pub max_group: Option<usize>,
    /// Conjugator and element search cap.
    #[arg(long)]
    pub max_search: Option<u128>,
}

impl CapArgs {
    /// Flags take precedence over the environment, which takes precedence
    /// over the defaults.
    pub fn limits(&self) -> Limits {
        let mut lim = Limits::from_env();
        if let Some(v) = self.max_subspaces {
            lim.max_subspaces = v;
        }
        if let Some(v) = self.max_group {
            lim.max_group = v;
        }
        if let Some(v) = self.max_search {
            lim.max_search = v;
        }
        lim
    }
}

#[derive(Debug, Args, Serialize)]
pub struct ValidateArgs {
    pub file: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryKind {
    Core,
    Centralizer,
    ChiefSeries,
    Maximals,
    MinimalIdeals,
}

#[derive(Debug, Args, Serialize)]
pub struct QueryArgs {
    pub file: PathBuf,
    #[arg(value_enum)]
    pub what: QueryKind,
    /// Subspace as semicolon-separated rows, e.g. "0,1,0;1,0,2".
    #[arg(long)]
    pub subspace: Option<String>,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Core,
    Brute,
    Both,
}

#[derive(Debug, Args, Serialize)]
pub struct ConjugacyArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub m: String,
    #[arg(long)]
    pub k: String,
    #[arg(long, value_enum, default_value = "both")]
    pub method: MethodArg,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args, Serialize)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["catalog", "file"]))]
pub struct TheoremsArgs {
    /// Catalog selection such as "gf2,gf3,dim<=4".
    #[arg(long)]
    pub catalog: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random algebras satisfying the hypothesis to add to a catalog sweep.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    /// Eligible elements for the automorphism suite, spread over algebras.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct FixtureArgs {
    /// dim2_nonabelian, heisenberg3, dim3_almost_abelian, dim3_scaled(λ),
    /// upper_triangular(n) or example4.
    pub name: String,
    #[arg(long, default_value = "gf2")]
    pub field: String,
}

#[derive(Debug, Args, Serialize)]
pub struct RandomArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value = "gf2")]
    pub field: String,
    #[arg(long, default_value_t = 3)]
    pub ambient: usize,
}
