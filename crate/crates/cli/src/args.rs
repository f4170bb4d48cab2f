use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symcay::characters::cache::CACHE_DIR_ENV;

#[derive(Debug, Parser)]
#[command(name = "symcay", version, about = "Spectra of normal Cayley graphs on symmetric groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Character-table cache directory.
    #[arg(long, env = CACHE_DIR_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// More logging (repeat for debug output).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, energy and nullity of Cay(Sym(n), S) for a union S of classes.
    Spectrum(SpectrumArgs),
    /// Character table of Sym(n).
    Chartable(ChartableArgs),
    /// Check predicted spectra of the n-cycle graphs against the closed forms
    /// and the brute-force oracles.
    Verify(VerifyArgs),
    /// Evaluate the binomial identities and the energy bound.
    Identities(IdentitiesArgs),
    /// Manage the character-table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub n: usize,
    /// Cycle types, e.g. "4" or "3,1;2,2".
    #[arg(long)]
    pub classes: String,
    /// Also write the explicit graph as an edge list (n <= 6).
    #[arg(long)]
    pub export_edges: Option<PathBuf>,
    /// Allow n = 7 for the edge-list export.
    #[arg(long)]
    pub enable_n7: bool,
}

#[derive(Debug, Args)]
pub struct ChartableArgs {
    #[arg(long)]
    pub n: usize,
    /// Always recompute; neither read nor write the cache.
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A single n or an inclusive range "a..b".
    #[arg(long)]
    pub n: NRange,
    /// Highest moment for exact matching; defaults to p(n) + 2.
    #[arg(long = "K")]
    pub k: Option<usize>,
    /// Tolerance for the floating-point eigensolve.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Also run the Jacobi eigensolve (n <= 6).
    #[arg(long)]
    pub with_float: bool,
    /// Allow exact moment matching at n = 6.
    #[arg(long)]
    pub enable_exact_n6: bool,
    /// Allow the eigensolve at n = 7.
    #[arg(long)]
    pub enable_n7: bool,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long)]
    pub n: NRange,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Delete every cached table.
    Clear,
}

/// `"5"` or `"a..b"`, inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
}

impl NRange {
    pub fn iter(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected n or a..b, got {s:?}"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(NRange { start, end })
    }
}
