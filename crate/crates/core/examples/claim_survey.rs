//! Tests whether every strategy has a same-cap strict dominator, across a
//! range of caps and category counts.
//!
//! cargo run -p capcycle --release --example claim_survey

use capcycle::{verify_universal_counter_claim, SpaceLimit};

fn main() -> capcycle::Result<()> {
    println!("{:>6} {:>3}  verdict", "budget", "k");
    for k in 2..=4 {
        for budget in 1..=24 {
            let v = verify_universal_counter_claim(budget, k, SpaceLimit::default())?;
            let detail = if v.holds {
                "every strategy can be beaten".to_string()
            } else {
                let names: Vec<String> = v.counterexamples.iter().map(|p| p.tuple()).collect();
                format!("unbeatable: {}", names.join(" "))
            };
            println!("{budget:>6} {k:>3}  {detail}");
        }
    }
    Ok(())
}
