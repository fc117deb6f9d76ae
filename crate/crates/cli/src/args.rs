use clap::{Args, Parser, Subcommand, ValueEnum};
use intrinsic_arrangements::combinatorics::IntPartition;
use intrinsic_arrangements::verify::Suite;

/// Intrinsic hyperplane arrangements of irreducible representations of S_n.
#[derive(Parser, Debug)]
#[command(name = "intrinsic", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest n accepted by any verb.
    #[arg(long, env = "INTRINSIC_MAX_N", default_value_t = 7, global = true)]
    pub max_n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build 𝒜_λ and print its hyperplanes, flats or lattice summary.
    Arrangement {
        #[arg(long, value_parser = parse_partition)]
        lambda: IntPartition,
        #[arg(long, value_enum, default_value_t = Emit::Normals)]
        emit: Emit,
    },
    /// Characteristic polynomial of 𝒜_λ.
    CharPoly {
        #[arg(long, value_parser = parse_partition)]
        lambda: IntPartition,
    },
    /// Kostka number K_{λμ}.
    Kostka {
        #[arg(long, value_parser = parse_partition)]
        lambda: IntPartition,
        #[arg(long, value_parser = parse_partition)]
        mu: IntPartition,
    },
    /// The arrangement 𝒞 in Λ^k ℚ^n cut out by the boundary map.
    Hook {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        check: Option<HookCheck>,
        /// Largest support searched by `--check cycles`.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// The lattice S^Y(V_λ) of Young-subgroup invariants.
    Lattice {
        #[arg(long, value_parser = parse_partition)]
        lambda: IntPartition,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Largest n swept; each suite has its own default.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Normals,
    Flats,
    Lattice,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookCheck {
    Pi1,
    Product,
    Cycles,
}

fn parse_partition(s: &str) -> Result<IntPartition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e| format!("{e}"))
}
