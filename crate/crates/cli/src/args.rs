//! Argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "zariski", version, about = "Certificates for cyclotomic curve strata and their groups")]
pub struct Cli {
    /// Print the full JSON certificate instead of a summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON certificate to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the strata labels for degree d and the arithmetic tuple sizes.
    Strata {
        d: u32,
    },
    /// Build a Fermat curve with three flex tangents and verify its label.
    Construct(ConstructArgs),
    /// Check family membership of a curve file and report its label.
    Verify {
        curve: PathBuf,
    },
    /// Compute the linking invariant of a hat curve file.
    Link(LinkArgs),
    /// Run checks on a builtin or user supplied presentation.
    Group(GroupArgs),
    /// Run a JSON list of jobs in parallel, one certificate file per job.
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub d: u32,
    /// 1: lines L_{x,t1}, L_{y,t2}, L_{z,t3}; 2: L_{x,t1}, L_{x,t2}, L_{z,t3};
    /// 3: L_{x,t1}, L_{x,t2}, L_{x,t3} (concurrent).
    #[arg(long, default_value_t = 1)]
    pub variant: u8,
    /// Three d-th roots of -1 as `n:k` (for zeta_n^k), comma separated.
    /// Defaults to zeta_{2d} three times, or its first three odd powers for
    /// variants 2 and 3.
    #[arg(long, value_delimiter = ',')]
    pub taus: Vec<String>,
    /// Member t (rational, e.g. `1/100`) of the family degenerating variant 3.
    #[arg(long, value_name = "T")]
    pub degeneration: Option<String>,
    /// Write the curve specification to this file.
    #[arg(long, value_name = "FILE")]
    pub curve_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    pub curve: PathBuf,
    /// Also track the branch numerically, optionally with this many steps.
    #[arg(long, num_args = 0..=1, default_missing_value = "256", value_name = "STEPS")]
    pub numeric: Option<usize>,
    /// Samples per segment; overrides the value given to --numeric.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, default_value_t = 1e-3)]
    pub clearance: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tolerance: f64,
    /// Number of randomly perturbed paths to compare against.
    #[arg(long, default_value_t = 0)]
    pub perturbations: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run the loop backwards.
    #[arg(long)]
    pub reverse: bool,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Builtin name (G, Gtilde, K1hat, Ktilde, Kh, TriplePoint, B3S2,
    /// Artin244), or `custom` with --presentation.
    pub name: String,
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    #[arg(long)]
    pub h: Option<u32>,
    /// Presentation text, or `@FILE` for a text or JSON file.
    #[arg(long)]
    pub presentation: Option<String>,
    /// Enumerate cosets of the trivial subgroup.
    #[arg(long)]
    pub order: bool,
    /// Derived series of the finite group (implies --order).
    #[arg(long)]
    pub derived_series: bool,
    /// Derive the kernel presentation from Gtilde(d) and compare it with K1hat(d).
    #[arg(long)]
    pub rs: bool,
    /// Search for the pairwise commutators of the generators.
    #[arg(long)]
    pub witness: bool,
    /// Check that this generator is central in the class-2 quotient.
    #[arg(long, value_name = "GEN")]
    pub central: Option<String>,
    /// Words to certify as consequences of the relators.
    #[arg(long, value_name = "WORD")]
    pub consequence: Vec<String>,
    #[arg(long, default_value_t = 6)]
    pub depth: usize,
    #[arg(long, default_value_t = 20_000)]
    pub max_states: usize,
    #[arg(long, default_value_t = zariski::groups::DEFAULT_COSET_CAP)]
    pub coset_cap: usize,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// JSON array of `{"name": ..., "args": [...]}` jobs.
    pub jobs: PathBuf,
    #[arg(long, value_name = "DIR")]
    pub out_dir: PathBuf,
    #[arg(long)]
    pub threads: Option<usize>,
}
