//! Seeded simulation of single games and best-of series, converging on the
//! exact cell odds as series grow longer.
//!
//! cargo run -p capcycle --release --example series_simulation

use capcycle::{matchup_table, simulate_best_of, simulate_games, Allocation, SimConfig, TiePolicy};

fn main() -> capcycle::Result<()> {
    let mtl: Allocation = "1,1,4".parse()?;
    let ny: Allocation = "3,3,0".parse()?;
    let exact = matchup_table(&mtl, &ny)?.counts().win_probability(TiePolicy::Reroll)?;
    println!("exact P(MTL wins a game) = {}", exact.display_with_decimal());

    for n in [100u64, 1_000, 10_000, 100_000] {
        let cfg = SimConfig { seed: 42, n_games: n, ..SimConfig::default() };
        let s = simulate_games(&mtl, &ny, &cfg)?;
        let f = s.empirical_a_frequency().unwrap_or(f64::NAN);
        println!("{n:>7} games: MTL share {f:.4} (error {:+.4})", f - exact.to_f64());
    }

    for best_of in [1u64, 7, 31, 101, 301] {
        let cfg = SimConfig { seed: 7, best_of: Some(best_of), n_series: 1000, ..SimConfig::default() };
        let s = simulate_best_of(&mtl, &ny, &cfg)?;
        println!("best of {best_of:>3}: MTL takes {:>4} of 1000 series", s.a_series_wins);
    }
    Ok(())
}
