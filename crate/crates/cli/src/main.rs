mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starcore::FieldConfig;

/// Tight-closure invariants of the maximal ideal in Stanley-Reisner rings.
#[derive(Debug, Parser)]
#[command(name = "starcore", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ideal-theoretic summary: I_Δ, minimal primes, τ, powers of 𝔪.
    Info(Common),
    /// *-spread of 𝔪 with a sampled witness reduction.
    Spread(Common),
    /// Facet-rank certificate for a linear ideal.
    Check(WithMatrix),
    /// Diagonal form of a reduction with respect to a minimal prime.
    Diagonalize(Diagonalize),
    /// *core(𝔪) by closed form, sampling or exhaustive search.
    Core(CoreArgs),
    /// Exhaustive intersection of all minimal linear reductions over a small field.
    Oracle(OracleArgs),
    /// Checks 𝔪^{d+1} ⊆ J and τ𝔪 ⊆ J on sampled reductions.
    Verify(Common),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Facet file: one facet per line, or JSON with "vertices" and "facets".
    #[arg(long, value_name = "FILE", group = "input")]
    pub facets: Option<std::path::PathBuf>,
    /// Cycle graph on n vertices.
    #[arg(long, value_name = "N", group = "input")]
    pub cycle: Option<usize>,
    /// Complete (d-1)-skeleton of the simplex on n vertices, given as d,n.
    #[arg(long, value_name = "D,N", group = "input")]
    pub skeleton: Option<String>,
    /// Inline spec, e.g. "cycle(4) + facets(a b c; c d)".
    #[arg(long, value_name = "SPEC", group = "input")]
    pub complex: Option<String>,
    /// A prime modulus, or "rational".
    #[arg(long, default_value = "2147483647", value_parser = parse_field)]
    pub field: FieldConfig,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = starcore::core_engine::DEFAULT_SAMPLES as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Emit one JSON document instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct WithMatrix {
    #[command(flatten)]
    pub common: Common,
    /// Coefficient rows, e.g. "1,1,2;1,2,1".
    #[arg(long, group = "ideal")]
    pub matrix: Option<String>,
    /// Generators as polynomials, e.g. "x1+x2+2*x3; x1-x3"; only linear parts count.
    #[arg(long, group = "ideal")]
    pub generators: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Diagonalize {
    #[command(flatten)]
    pub ideal: WithMatrix,
    /// Minimal prime index (facet order); all primes when omitted.
    #[arg(long)]
    pub prime: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoreMode {
    Auto,
    Special,
    #[value(alias = "monte-carlo")]
    Mc,
    #[value(alias = "brute-force")]
    Bruteforce,
}

#[derive(Debug, Clone, Args)]
pub struct CoreArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = CoreMode::Auto)]
    pub mode: CoreMode,
    /// Cap on p^(d·n) for exhaustive search.
    #[arg(long, default_value_t = starcore::core_engine::BRUTE_FORCE_BUDGET)]
    pub budget: u128,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = starcore::core_engine::BRUTE_FORCE_BUDGET)]
    pub budget: u128,
}

fn parse_field(s: &str) -> Result<FieldConfig, String> {
    s.parse().map_err(|e: starcore::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, result) = match &cli.command {
        Command::Info(c) => (c.json, commands::info(c)),
        Command::Spread(c) => (c.json, commands::spread(c)),
        Command::Check(a) => (a.common.json, commands::check(a)),
        Command::Diagonalize(a) => (a.ideal.common.json, commands::diagonalize(a)),
        Command::Core(a) => (a.common.json, commands::core(a)),
        Command::Oracle(a) => (a.common.json, commands::oracle(a)),
        Command::Verify(c) => (c.json, commands::verify(c)),
    };
    match result {
        Ok(out) => {
            if json {
                println!("{}", out.render_json());
            } else {
                print!("{}", out.human);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
