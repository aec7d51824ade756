//! Head-to-head grids for the goalie-heavy, balanced and offence-defence
//! teams under a cap of 6, showing the intransitive loop.
//!
//! cargo run -p capcycle --example three_team_grids

use capcycle::report::{emit_matchup_grid, summary_line, Labels};
use capcycle::{matchup_table, Allocation, TiePolicy};

fn main() -> capcycle::Result<()> {
    let mtl: Allocation = "1,1,4".parse()?;
    let bos: Allocation = "2,2,2".parse()?;
    let ny: Allocation = "3,3,0".parse()?;

    for (a, la, b, lb) in [(&mtl, "MTL", &bos, "BOS"), (&bos, "BOS", &ny, "NY"), (&mtl, "MTL", &ny, "NY")] {
        let t = matchup_table(a, b)?;
        let labels = Labels::new(la, lb);
        print!("{}", emit_matchup_grid(a, b, &t, &labels));
        println!("{}", summary_line(&t, &labels));
        let p = t.counts().win_probability(TiePolicy::Reroll)?;
        println!("P({la} wins a game) = {}\n", p.display_with_decimal());
    }
    println!("NY > BOS and BOS > MTL, yet MTL > NY.");
    Ok(())
}
