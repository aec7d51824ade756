//! Seeded Monte Carlo play between two allocations.
//!
//! A game is one joint roll: each side shows a uniformly chosen category
//! value and the larger one wins. The generator is splitmix64 and index
//! sampling uses rejection, so results are bit-identical on every platform.

use serde::{Deserialize, Serialize};

use crate::alloc::Allocation;
use crate::error::{Error, Result};
use crate::matchup::{matchup_counts, Cell, TiePolicy};

pub const MAX_BEST_OF: u64 = 1_000_000;
pub const MAX_SERIES: u64 = 1_000_000;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// One splitmix64 step: returns `(new_state, output)`.
pub fn prng_next(state: u64) -> (u64, u64) {
    let state = state.wrapping_add(GOLDEN_GAMMA);
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (state, z ^ (z >> 31))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u64(&mut self) -> u64 {
        let (state, out) = prng_next(self.state);
        self.state = state;
        out
    }

    /// Uniform index in `0..n`. Outputs at or above the largest multiple of
    /// `n` that fits in 2^64 are rejected.
    pub fn next_index(&mut self, n: usize) -> usize {
        assert!(n > 0, "cannot sample from an empty range");
        let n = n as u128;
        let zone = ((1u128 << 64) / n) * n;
        loop {
            let x = u128::from(self.next_u64());
            if x < zone {
                return (x % n) as usize;
            }
        }
    }
}

/// Samples one cell: a uniform category of `a` against a uniform category of
/// `b`, drawn in that order.
pub fn sample_cell(a: &Allocation, b: &Allocation, rng: &mut SplitMix64) -> Result<Cell> {
    if a.k() != b.k() {
        return Err(Error::DimensionMismatch {
            left: a.k(),
            right: b.k(),
        });
    }
    Ok(roll(a.values(), b.values(), rng))
}

fn roll(a: &[u64], b: &[u64], rng: &mut SplitMix64) -> Cell {
    let i = rng.next_index(a.len());
    let j = rng.next_index(b.len());
    Cell::compare(a[i], b[j])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimConfig {
    pub seed: u64,
    pub n_games: u64,
    pub tie_policy: TiePolicy,
    /// Series length; must be odd when present.
    pub best_of: Option<u64>,
    pub n_series: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            seed: 0,
            n_games: 1,
            tie_policy: TiePolicy::Reroll,
            best_of: None,
            n_series: 1,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_games == 0 {
            return Err(Error::InvalidConfig("n_games must be at least 1".into()));
        }
        if self.n_series == 0 || self.n_series > MAX_SERIES {
            return Err(Error::InvalidConfig(format!(
                "n_series must be in 1..={MAX_SERIES}"
            )));
        }
        if let Some(n) = self.best_of {
            if n % 2 == 0 || n > MAX_BEST_OF {
                return Err(Error::InvalidConfig(format!(
                    "best_of must be an odd number in 1..={MAX_BEST_OF}, got {n}"
                )));
            }
        }
        Ok(())
    }
}

/// Tallies from a simulation run.
///
/// Under [`TiePolicy::Reroll`] only decisive rolls count as games and
/// `tie_games` records the discarded rolls. Under
/// [`TiePolicy::CountAsNoGame`] every roll is a game.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SeriesStats {
    pub games_played: u64,
    pub a_game_wins: u64,
    pub b_game_wins: u64,
    pub tie_games: u64,
    pub a_series_wins: u64,
    pub b_series_wins: u64,
}

impl SeriesStats {
    /// `a_game_wins / (a_game_wins + b_game_wins)`, when any game was decisive.
    pub fn empirical_a_frequency(&self) -> Option<f64> {
        let decisive = self.a_game_wins + self.b_game_wins;
        (decisive > 0).then(|| self.a_game_wins as f64 / decisive as f64)
    }

    pub fn a_series_frequency(&self) -> Option<f64> {
        let total = self.a_series_wins + self.b_series_wins;
        (total > 0).then(|| self.a_series_wins as f64 / total as f64)
    }

    fn merge(&mut self, other: &SeriesStats) {
        self.games_played += other.games_played;
        self.a_game_wins += other.a_game_wins;
        self.b_game_wins += other.b_game_wins;
        self.tie_games += other.tie_games;
        self.a_series_wins += other.a_series_wins;
        self.b_series_wins += other.b_series_wins;
    }
}

fn ensure_decisive(a: &Allocation, b: &Allocation, policy: TiePolicy, required: bool) -> Result<()> {
    let counts = matchup_counts(a, b)?;
    if counts.decisive() == 0 && (required || policy == TiePolicy::Reroll) {
        return Err(Error::AllTies);
    }
    Ok(())
}

/// Plays one game. Under reroll, tied rolls are repeated and counted in
/// `stats.tie_games`.
fn play_game(a: &[u64], b: &[u64], policy: TiePolicy, rng: &mut SplitMix64, stats: &mut SeriesStats) -> Cell {
    loop {
        let cell = roll(a, b, rng);
        match (cell, policy) {
            (Cell::Tie, TiePolicy::Reroll) => stats.tie_games += 1,
            (Cell::Tie, TiePolicy::CountAsNoGame) => {
                stats.tie_games += 1;
                stats.games_played += 1;
                return cell;
            }
            (Cell::AWin, _) => {
                stats.a_game_wins += 1;
                stats.games_played += 1;
                return cell;
            }
            (Cell::BWin, _) => {
                stats.b_game_wins += 1;
                stats.games_played += 1;
                return cell;
            }
        }
    }
}

/// Plays `config.n_games` games from a single stream seeded with
/// `config.seed`.
pub fn simulate_games(a: &Allocation, b: &Allocation, config: &SimConfig) -> Result<SeriesStats> {
    config.validate()?;
    ensure_decisive(a, b, config.tie_policy, false)?;
    let mut rng = SplitMix64::new(config.seed);
    let mut stats = SeriesStats::default();
    for _ in 0..config.n_games {
        play_game(a.values(), b.values(), config.tie_policy, &mut rng, &mut stats);
    }
    Ok(stats)
}

/// Starting state of series `i`: the `(i+1)`-th splitmix64 output of the
/// master seed.
pub fn series_seeds(master: u64) -> impl Iterator<Item = u64> {
    let mut rng = SplitMix64::new(master);
    std::iter::repeat_with(move || rng.next_u64())
}

/// Runs `config.n_series` independent best-of series; each ends as soon as
/// one side reaches `(best_of + 1) / 2` decisive wins. Game tallies are
/// summed over all series.
pub fn simulate_best_of(a: &Allocation, b: &Allocation, config: &SimConfig) -> Result<SeriesStats> {
    config.validate()?;
    let best_of = config
        .best_of
        .ok_or_else(|| Error::InvalidConfig("best_of is required for a series simulation".into()))?;
    // a series needs decisive games to finish under either policy
    ensure_decisive(a, b, config.tie_policy, true)?;
    let needed = best_of.div_ceil(2);
    let mut total = SeriesStats::default();
    for seed in series_seeds(config.seed).take(config.n_series as usize) {
        let mut rng = SplitMix64::new(seed);
        let mut stats = SeriesStats::default();
        while stats.a_game_wins < needed && stats.b_game_wins < needed {
            play_game(a.values(), b.values(), config.tie_policy, &mut rng, &mut stats);
        }
        if stats.a_game_wins == needed {
            stats.a_series_wins = 1;
        } else {
            stats.b_series_wins = 1;
        }
        total.merge(&stats);
    }
    Ok(total)
}
