//! Enumerates every legal allocation under a cap, ordered and canonical.
//!
//! cargo run -p capcycle --example strategy_space -- [budget] [k]

use capcycle::{composition_count, enumerate_compositions, enumerate_partitions, SpaceLimit};

fn main() -> capcycle::Result<()> {
    let mut args = std::env::args().skip(1);
    let budget: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let comps = enumerate_compositions(budget, k, SpaceLimit::default())?;
    let parts = enumerate_partitions(budget, k, SpaceLimit::default())?;
    println!(
        "budget {budget}, {k} categories: {} ordered allocations (C({}, {}) = {}), {} canonical",
        comps.len(),
        budget as usize + k - 1,
        k - 1,
        composition_count(budget, k)?,
        parts.len()
    );
    for p in &parts {
        let class = comps.iter().filter(|c| c.canonicalize() == *p).count();
        println!("  {:<12} {class} orderings", p.tuple());
    }
    Ok(())
}
