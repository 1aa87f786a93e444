use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::record::Method;

#[derive(Debug, Parser)]
#[command(
    name = "critgroup",
    version,
    about = "Critical groups and spanning-tree counts of multigraphs, with closed forms for K_m x C_n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical group (sandpile group) of a graph.
    Group(GraphArgs),
    /// Number of spanning trees of a graph.
    Trees(GraphArgs),
    /// Smith normal form of an integer matrix.
    Snf(SnfArgs),
    /// Compare closed forms with direct computation over a grid of K_m x C_n.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Path,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["km", "file", "family"])))]
pub struct GraphArgs {
    /// Number of vertices of the complete factor K_m.
    #[arg(long, value_name = "M", requires = "cn")]
    pub km: Option<usize>,
    /// Length of the cycle factor C_n.
    #[arg(long, value_name = "N", requires = "km")]
    pub cn: Option<usize>,
    /// Edge-list file: vertex count on the first line, then `u v [multiplicity]` lines.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, requires = "size")]
    pub family: Option<Family>,
    #[arg(long, value_name = "K", requires = "family")]
    pub size: Option<usize>,
    /// Defaults to `both` for K_m x C_n and `snf` otherwise.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SnfArgs {
    /// Matrix file: `rows cols` on the first line, then one row per line.
    #[arg(long, value_name = "PATH")]
    pub matrix: PathBuf,
    /// Also print the unimodular transforms and check them.
    #[arg(long)]
    pub witness: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Inclusive range of m, written `A..B`.
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    pub m_range: (usize, usize),
    /// Inclusive range of n, written `C..D`.
    #[arg(long, value_name = "C..D", value_parser = parse_range)]
    pub n_range: (usize, usize),
    /// Worker threads; the report does not depend on this.
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[arg(long)]
    pub json: bool,
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if a < 1 || a > b {
        return Err(format!("range {s:?} must satisfy 1 <= A <= B"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6"), Ok((3, 6)));
        assert_eq!(parse_range("2..2"), Ok((2, 2)));
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("3-6").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn exactly_one_source() {
        assert!(Cli::try_parse_from(["critgroup", "group", "--km", "3", "--cn", "3"]).is_ok());
        assert!(Cli::try_parse_from(["critgroup", "group"]).is_err());
        assert!(Cli::try_parse_from(["critgroup", "group", "--km", "3"]).is_err());
        assert!(Cli::try_parse_from([
            "critgroup", "group", "--km", "3", "--cn", "3", "--family", "cycle", "--size", "4"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["critgroup", "trees", "--family", "path"]).is_err());
    }
}
