//! For each canonical allocation, the strongest same-cap counter (largest
//! win margin, ties to the lexicographically smallest split).
//!
//! cargo run -p capcycle --example counter_search -- [budget] [k]

use capcycle::{counter_strategy, enumerate_partitions, SpaceLimit};

fn main() -> capcycle::Result<()> {
    let mut args = std::env::args().skip(1);
    let budget: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    for p in enumerate_partitions(budget, k, SpaceLimit::default())? {
        match counter_strategy(&p, budget, SpaceLimit::default())? {
            Some(c) => println!(
                "{:<14} countered by {:<14} {}-{} (margin {})",
                p.tuple(),
                c.strategy.tuple(),
                c.wins,
                c.losses,
                c.margin()
            ),
            None => println!("{:<14} has no strict same-cap counter", p.tuple()),
        }
    }
    Ok(())
}
