//! Exact analysis of budget-constrained intransitive allocation games.
//!
//! Each side splits the same budget across `k` categories. Two allocations
//! meet as if they were `k`-faced dice: every category value of one side is
//! compared with every value of the other, and whoever wins more of the
//! `k²` cells takes the series. The relation is not transitive, so the
//! crate builds the full dominance graph over a cap and reports its cycles,
//! strongly connected components, undominated strategies and best counters.
//!
//! ```
//! use capcycle::{matchup_table, Allocation, SeriesOutcome};
//!
//! let mtl: Allocation = "1,1,4".parse().unwrap();
//! let ny: Allocation = "3,3,0".parse().unwrap();
//! let t = matchup_table(&mtl, &ny).unwrap();
//! assert_eq!((t.wins_a(), t.wins_b()), (5, 4));
//! assert_eq!(t.outcome(), SeriesOutcome::AWins);
//! ```
//!
//! The `examples/` directory has one runnable program per capability; see the
//! README for the list.

pub mod alloc;
pub mod cli;
pub mod error;
pub mod graph;
pub mod matchup;
pub mod report;
pub mod sim;

pub use alloc::{
    composition_count, enumerate_compositions, enumerate_partitions, Allocation, Partition, SpaceLimit,
};
pub use error::{Error, Result};
pub use graph::{
    build_graph, counter_strategy, find_three_cycles, strongly_connected_components, undominated,
    verify_universal_counter_claim, ClaimVerdict, Counter, CycleReport, DominanceGraph, Edge,
};
pub use matchup::{
    dominates, matchup_counts, matchup_table, series_outcome, win_probability, Cell, Fraction,
    MatchupCounts, MatchupTable, SeriesOutcome, TiePolicy,
};
pub use sim::{prng_next, sample_cell, simulate_best_of, simulate_games, SeriesStats, SimConfig, SplitMix64};
