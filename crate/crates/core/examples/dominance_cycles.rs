//! Builds the dominance graph, lists its 3-cycles and strongly connected
//! components, and writes a Graphviz file.
//!
//! cargo run -p capcycle --example dominance_cycles -- [budget] [k]
//! dot -Tsvg target/dominance.dot > dominance.svg

use capcycle::report::emit_dot;
use capcycle::{build_graph, find_three_cycles, strongly_connected_components, SpaceLimit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let budget: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let g = build_graph(budget, k, SpaceLimit::default())?;
    println!(
        "{} strategies, {} strict edges, {} draws",
        g.len(),
        g.edges().len(),
        g.draws().len()
    );

    let cycles = find_three_cycles(&g);
    println!("{} three-cycles", cycles.len());
    for c in cycles.iter().take(10) {
        let e = |x: usize, y: usize| g.edge(x, y).expect("cycle edge");
        println!(
            "  {} beats {} ({}-{}), which beats {} ({}-{}), which beats {} ({}-{})",
            g.node(c[0]).tuple(),
            g.node(c[1]).tuple(),
            e(c[0], c[1]).winner_wins,
            e(c[0], c[1]).loser_wins,
            g.node(c[2]).tuple(),
            e(c[1], c[2]).winner_wins,
            e(c[1], c[2]).loser_wins,
            g.node(c[0]).tuple(),
            e(c[2], c[0]).winner_wins,
            e(c[2], c[0]).loser_wins,
        );
    }

    for comp in strongly_connected_components(&g) {
        if comp.len() > 1 {
            let members: Vec<String> = comp.iter().map(|&v| g.node(v).tuple()).collect();
            println!("cyclic component of {}: {}", comp.len(), members.join(" "));
        }
    }

    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../target/dominance.dot");
    std::fs::write(&path, emit_dot(&g))?;
    println!("wrote {}", path.display());
    Ok(())
}
