//! `capcycle` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid allocation input,
//! 3 strategy space too large.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alloc::{enumerate_compositions, enumerate_partitions, Allocation, SpaceLimit, SPACE_LIMIT_ENV};
use crate::error::Error;
use crate::graph::{build_graph, counter_strategy};
use crate::matchup::{matchup_table, TiePolicy};
use crate::report::{self, AnalysisFormat, Labels};
use crate::sim::{simulate_best_of, simulate_games, SimConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_ALLOCATION: i32 = 2;
pub const EXIT_SPACE_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "capcycle", version, about = "Exact analysis of cap-constrained intransitive allocation games")]
struct Cli {
    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Head-to-head grid between two allocations.
    Matchup {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = MatchupFormat::Grid)]
        format: MatchupFormat,
        #[arg(long, default_value = "A")]
        label_a: String,
        #[arg(long, default_value = "B")]
        label_b: String,
    },
    /// List every allocation under the cap.
    Enumerate {
        #[command(flatten)]
        space: SpaceArgs,
        /// List canonical (non-increasing) allocations only.
        #[arg(long)]
        partitions: bool,
    },
    /// Export the dominance graph.
    Graph {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Strongest same-cap counter to an allocation.
    Counter {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Defaults to the sum of the allocation.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Full strategy-space report.
    Analyze {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = AnalyzeFormat::Text)]
        format: AnalyzeFormat,
    },
    /// Seeded Monte Carlo games or best-of series.
    Simulate {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 10_000)]
        games: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PolicyArg::Reroll)]
        tie_policy: PolicyArg,
        #[arg(long)]
        best_of: Option<u64>,
        #[arg(long, default_value_t = 1)]
        series: u64,
        #[arg(long, value_enum, default_value_t = AnalyzeFormat::Text)]
        format: AnalyzeFormat,
    },
}

#[derive(Debug, Args)]
struct SpaceArgs {
    #[arg(long, default_value_t = 6)]
    budget: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatchupFormat {
    Grid,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AnalyzeFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    Reroll,
    Nogame,
}

impl From<PolicyArg> for TiePolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Reroll => TiePolicy::Reroll,
            PolicyArg::Nogame => TiePolicy::CountAsNoGame,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EmptyAllocation | Error::NegativeEntry { .. } | Error::Parse { .. } | Error::AllTies => {
            EXIT_INVALID_ALLOCATION
        }
        Error::SpaceTooLarge { .. } => EXIT_SPACE_TOO_LARGE,
        Error::Overflow(_) | Error::DimensionMismatch { .. } | Error::InvalidConfig(_) => EXIT_USAGE,
    }
}

fn space_limit() -> Result<SpaceLimit, String> {
    match std::env::var(SPACE_LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(SpaceLimit)
            .map_err(|_| format!("{SPACE_LIMIT_ENV} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(SpaceLimit::default()),
    }
}

/// Parses `args` (including the program name), runs the command, and returns
/// the process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run_cli`] with explicit output streams.
pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let limit = match space_limit() {
        Ok(l) => l,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let text = match execute(&cli.command, limit) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out
            .write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn parse_alloc(s: &str) -> Result<Allocation, Error> {
    s.parse()
}

fn execute(cmd: &Command, limit: SpaceLimit) -> Result<String, Error> {
    match cmd {
        Command::Matchup {
            a,
            b,
            format,
            label_a,
            label_b,
        } => {
            let (a, b) = (parse_alloc(a)?, parse_alloc(b)?);
            let t = matchup_table(&a, &b)?;
            let labels = Labels::new(label_a.as_str(), label_b.as_str());
            Ok(match format {
                MatchupFormat::Grid => report::emit_matchup_text(&a, &b, &t, &labels),
                MatchupFormat::Json => report::emit_matchup_json(&a, &b, &t, &labels),
                MatchupFormat::Csv => report::emit_matchup_csv(&a, &b, &t, &labels),
            })
        }
        Command::Enumerate { space, partitions } => {
            let k = space.k as usize;
            let mut out = String::new();
            if *partitions {
                for p in enumerate_partitions(space.budget, k, limit)? {
                    out.push_str(&p.to_string());
                    out.push('\n');
                }
            } else {
                for c in enumerate_compositions(space.budget, k, limit)? {
                    out.push_str(&c.to_string());
                    out.push('\n');
                }
            }
            Ok(out)
        }
        Command::Graph { space, format } => {
            let g = build_graph(space.budget, space.k as usize, limit)?;
            Ok(match format {
                GraphFormat::Dot => report::emit_dot(&g),
                GraphFormat::Json => report::emit_graph_json(&g),
            })
        }
        Command::Counter { a, budget } => {
            let a = parse_alloc(a)?;
            let budget = budget.unwrap_or(a.budget());
            let mut out = String::new();
            if budget != a.budget() {
                out.push_str(&format!(
                    "note: searching budget {budget}, allocation sums to {}\n",
                    a.budget()
                ));
            }
            match counter_strategy(&a, budget, limit)? {
                Some(c) => out.push_str(&format!("counter: {} (margin {})\n", c.strategy, c.margin())),
                None => out.push_str(&format!(
                    "counter: none (no allocation of {budget} strictly dominates {a})\n"
                )),
            }
            Ok(out)
        }
        Command::Analyze { space, format } => {
            let format = match format {
                AnalyzeFormat::Text => AnalysisFormat::Text,
                AnalyzeFormat::Json => AnalysisFormat::Json,
            };
            report::emit_analysis(space.budget, space.k as usize, format, limit)
        }
        Command::Simulate {
            a,
            b,
            games,
            seed,
            tie_policy,
            best_of,
            series,
            format,
        } => {
            let (a, b) = (parse_alloc(a)?, parse_alloc(b)?);
            let config = SimConfig {
                seed: *seed,
                n_games: *games,
                tie_policy: (*tie_policy).into(),
                best_of: *best_of,
                n_series: *series,
            };
            let stats = if best_of.is_some() {
                simulate_best_of(&a, &b, &config)?
            } else {
                simulate_games(&a, &b, &config)?
            };
            let exact = matchup_table(&a, &b)?.counts().win_probability(config.tie_policy)?;
            Ok(match format {
                AnalyzeFormat::Text => report::emit_simulation_text(&a, &b, &config, &stats, exact),
                AnalyzeFormat::Json => report::emit_simulation_json(&config, &stats, exact),
            })
        }
    }
}
