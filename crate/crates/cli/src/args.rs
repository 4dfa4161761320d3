use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use scp_core::experiment::OutputFormat;
use scp_core::{InvariantKind, ProblemKind, StructureKind};

#[derive(Debug, Parser)]
#[command(name = "scp", version, about = "Simultaneous conjugacy in braid groups")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Garside structure: artin or bkl (default artin; table1 runs both, table2 bkl).
    #[arg(long, global = true)]
    pub structure: Option<StructureKind>,
    /// Number of strands.
    #[arg(long, global = true, default_value_t = 4)]
    pub n: usize,
    /// Orbit size above which a computation gives up.
    #[arg(long, global = true, default_value_t = scp_core::solver::DEFAULT_CAP)]
    pub cap: usize,
    /// Keep one representative per τ-orbit (`--mod-tau=false` to disable).
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    pub mod_tau: Option<bool>,
    /// Expand orbits with minimal simple elements only.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    pub minimal_simples: bool,
    /// Single worker thread, for reproducible witnesses and timings.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Output format: json or text (bench: csv or json).
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// A tuple is given as words separated by `;`, e.g. `"1 2 -1; 2"` or `"(2,1) -(3,1); (3,2)"`.
#[derive(Debug, Args)]
pub struct Pair {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub c: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two tuples are simultaneously conjugate.
    Decide(Pair),
    /// Find x with a^x = c.
    Search(Pair),
    /// Compute an invariant set of a tuple.
    Invariant {
        #[arg(long)]
        a: String,
        #[arg(long, default_value = "lsss")]
        kind: InvariantKind,
        /// Include every member in the output.
        #[arg(long)]
        members: bool,
    },
    /// Recover the shared secret of a random protocol instance.
    Attack {
        #[arg(long)]
        problem: ProblemKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        public_length: Option<usize>,
        #[arg(long)]
        private_length: Option<usize>,
    },
    /// Set-size experiments.
    Bench {
        #[command(subcommand)]
        which: Bench,
    },
}

#[derive(Debug, Args)]
pub struct Sweep {
    /// Rank(s) of the tuples, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<usize>>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Atom length of random words; ⌈2N·log₂N⌉ by default.
    #[arg(long)]
    pub word_length: Option<usize>,
    /// Kinds to compute, comma separated (LL_interval, inf_sup, LSS, LSSS).
    #[arg(long, value_delimiter = ',')]
    pub kinds: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Bench {
    /// Both structures at fixed r (defaults: r=8, 100 trials).
    Table1(Sweep),
    /// BKL across ranks (defaults: r=4,8,16,32,64, 100 trials, LSS and LSSS).
    Table2(Sweep),
    /// Run a JSON experiment configuration.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
}

pub fn output_format(text: Option<&str>, default: OutputFormat) -> anyhow::Result<OutputFormat> {
    Ok(match text {
        None => default,
        Some(t) => t.parse()?,
    })
}
