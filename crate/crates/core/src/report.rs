//! Text, CSV, DOT and JSON renderings of matchups, graphs, analyses and
//! simulations. Every emitter is deterministic for fixed input.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alloc::{composition_count, Allocation, SpaceLimit};
use crate::error::Result;
use crate::graph::{build_graph, strongly_connected_components, DominanceGraph};
use crate::matchup::{matchup_counts, Cell, Fraction, MatchupTable, SeriesOutcome, TiePolicy};
use crate::sim::{SeriesStats, SimConfig};

/// Display names for the two sides of a matchup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labels {
    pub a: String,
    pub b: String,
}

impl Default for Labels {
    fn default() -> Self {
        Labels {
            a: "A".into(),
            b: "B".into(),
        }
    }
}

impl Labels {
    pub fn new(a: impl Into<String>, b: impl Into<String>) -> Self {
        Labels { a: a.into(), b: b.into() }
    }

    fn cell(&self, c: Cell) -> &str {
        match c {
            Cell::AWin => &self.a,
            Cell::BWin => &self.b,
            Cell::Tie => "tie",
        }
    }

    pub fn outcome(&self, o: SeriesOutcome) -> &str {
        match o {
            SeriesOutcome::AWins => &self.a,
            SeriesOutcome::BWins => &self.b,
            SeriesOutcome::Draw => "draw",
        }
    }
}

/// Renders the `(k+1) × (k+1)` chart: `b`'s values across the top, `a`'s
/// values down the side, each cell naming the winner or `tie`.
///
/// ```text
/// MTL\NY |   3   3   0
/// -------+------------
///      1 |  NY  NY MTL
///      1 |  NY  NY MTL
///      4 | MTL MTL MTL
/// ```
pub fn emit_matchup_grid(a: &Allocation, b: &Allocation, t: &MatchupTable, labels: &Labels) -> String {
    let corner = format!("{}\\{}", labels.a, labels.b);
    let width = b
        .values()
        .iter()
        .map(|v| v.to_string().len())
        .chain([labels.a.len(), labels.b.len(), 3])
        .max()
        .unwrap_or(3);
    let side = a
        .values()
        .iter()
        .map(|v| v.to_string().len())
        .chain([corner.len()])
        .max()
        .unwrap_or(1);

    let mut out = String::new();
    let _ = write!(out, "{corner:>side$} |");
    for v in b.values() {
        let _ = write!(out, " {v:>width$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}-+-{}", "-".repeat(side), "-".repeat((width + 1) * t.k() - 1));
    for (v, row) in a.values().iter().zip(t.rows()) {
        let _ = write!(out, "{v:>side$} |");
        for &c in row {
            let _ = write!(out, " {:>width$}", labels.cell(c));
        }
        out.push('\n');
    }
    out
}

/// One-line tally, e.g. `A wins 5, B wins 4, ties 0; outcome: A`.
pub fn summary_line(t: &MatchupTable, labels: &Labels) -> String {
    format!(
        "{} wins {}, {} wins {}, ties {}; outcome: {}",
        labels.a,
        t.wins_a(),
        labels.b,
        t.wins_b(),
        t.ties(),
        labels.outcome(t.outcome())
    )
}

/// Full text report for the `matchup` command.
pub fn emit_matchup_text(a: &Allocation, b: &Allocation, t: &MatchupTable, labels: &Labels) -> String {
    let mut out = emit_matchup_grid(a, b, t, labels);
    out.push_str(&summary_line(t, labels));
    out.push('\n');
    if let Ok(p) = t.counts().win_probability(TiePolicy::Reroll) {
        let _ = writeln!(
            out,
            "P({} wins a game, ties rerolled) = {}",
            labels.a,
            p.display_with_decimal()
        );
    }
    if a.budget() != b.budget() {
        let _ = writeln!(
            out,
            "note: unequal budgets ({} {} vs {} {})",
            labels.a,
            a.budget(),
            labels.b,
            b.budget()
        );
    }
    out
}

/// CSV form of the grid: a header row of `b`'s values, then one row per value
/// of `a`.
pub fn emit_matchup_csv(a: &Allocation, b: &Allocation, t: &MatchupTable, labels: &Labels) -> String {
    let mut out = format!("{}\\{}", labels.a, labels.b);
    for v in b.values() {
        let _ = write!(out, ",{v}");
    }
    out.push('\n');
    for (v, row) in a.values().iter().zip(t.rows()) {
        let _ = write!(out, "{v}");
        for &c in row {
            let _ = write!(out, ",{}", labels.cell(c));
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchupRecord {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub label_a: String,
    pub label_b: String,
    pub cells: Vec<Vec<String>>,
    pub wins_a: u64,
    pub wins_b: u64,
    pub ties: u64,
    pub outcome: SeriesOutcome,
    pub unequal_budgets: bool,
    pub p_reroll: Option<Fraction>,
    pub p_nogame: Fraction,
}

pub fn emit_matchup_json(a: &Allocation, b: &Allocation, t: &MatchupTable, labels: &Labels) -> String {
    let cells = t
        .rows()
        .map(|row| {
            row.iter()
                .map(|&c| {
                    match c {
                        Cell::AWin => "a",
                        Cell::BWin => "b",
                        Cell::Tie => "tie",
                    }
                    .to_string()
                })
                .collect()
        })
        .collect();
    let counts = t.counts();
    let rec = MatchupRecord {
        a: a.values().to_vec(),
        b: b.values().to_vec(),
        label_a: labels.a.clone(),
        label_b: labels.b.clone(),
        cells,
        wins_a: t.wins_a(),
        wins_b: t.wins_b(),
        ties: t.ties(),
        outcome: t.outcome(),
        unequal_budgets: a.budget() != b.budget(),
        p_reroll: counts.win_probability(TiePolicy::Reroll).ok(),
        p_nogame: counts
            .win_probability(TiePolicy::CountAsNoGame)
            .expect("no-game probability always defined"),
    };
    to_json_pretty(&rec)
}

/// Graphviz rendering: strict edges labelled `winner-loser`, draws as
/// undirected dashed edges.
pub fn emit_dot(g: &DominanceGraph) -> String {
    let mut out = String::from("digraph dominance {\n");
    let _ = writeln!(out, "  label=\"budget {}, k {}\";", g.budget(), g.k());
    for (i, p) in g.nodes().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", p.tuple());
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}-{}\"];",
            e.winner, e.loser, e.winner_wins, e.loser_wins
        );
    }
    for &(i, j) in g.draws() {
        let _ = writeln!(out, "  n{i} -> n{j} [dir=none, style=dashed];");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub winner: usize,
    pub loser: usize,
    pub margin: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub holds: bool,
    pub counterexamples: Vec<Vec<u64>>,
}

/// Graph export. Cycles and components refer to node indices; undominated
/// strategies and counterexamples are written out as tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub budget: u64,
    pub k: usize,
    pub nodes: Vec<Vec<u64>>,
    pub edges: Vec<EdgeRecord>,
    pub draws: Vec<[usize; 2]>,
    pub three_cycles: Vec<[usize; 3]>,
    pub scc: Vec<Vec<usize>>,
    pub undominated: Vec<Vec<u64>>,
    pub claim: ClaimRecord,
}

impl GraphExport {
    pub fn from_graph(g: &DominanceGraph) -> Self {
        let report = g.cycle_report();
        let verdict = g.claim_verdict();
        GraphExport {
            budget: g.budget(),
            k: g.k(),
            nodes: g.nodes().iter().map(|p| p.values().to_vec()).collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    winner: e.winner,
                    loser: e.loser,
                    margin: e.margin(),
                })
                .collect(),
            draws: g.draws().iter().map(|&(i, j)| [i, j]).collect(),
            three_cycles: report.three_cycles,
            scc: strongly_connected_components(g),
            undominated: report
                .undominated
                .iter()
                .map(|&v| g.node(v).values().to_vec())
                .collect(),
            claim: ClaimRecord {
                holds: verdict.holds,
                counterexamples: verdict
                    .counterexamples
                    .iter()
                    .map(|p| p.values().to_vec())
                    .collect(),
            },
        }
    }
}

pub fn emit_graph_json(g: &DominanceGraph) -> String {
    to_json_compact(&GraphExport::from_graph(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterRecord {
    pub strategy: Vec<u64>,
    pub counter: Option<Vec<u64>>,
    pub margin: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeamRecord {
    pub label: String,
    pub allocation: Vec<u64>,
    pub dominated: bool,
    pub counter: Option<Vec<u64>>,
    pub margin: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairResult {
    pub winner: String,
    pub loser: String,
    pub winner_wins: u64,
    pub loser_wins: u64,
}

/// The three-team reading: only the named example strategies are checked for
/// a same-cap dominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleTeams {
    pub teams: Vec<TeamRecord>,
    pub results: Vec<PairResult>,
    pub all_dominated: bool,
}

/// Goalie-heavy, balanced, and offence-defence teams under a cap of 6.
pub const EXAMPLE_TEAMS: [(&str, [u64; 3]); 3] =
    [("MTL", [1, 1, 4]), ("BOS", [2, 2, 2]), ("NY", [3, 3, 0])];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    #[serde(flatten)]
    pub graph: GraphExport,
    pub composition_count: Option<u64>,
    pub partition_count: usize,
    pub scc_sizes: Vec<usize>,
    pub counters: Vec<CounterRecord>,
    pub example_teams: Option<ExampleTeams>,
}

impl AnalysisReport {
    pub fn build(budget: u64, k: usize, limit: SpaceLimit) -> Result<Self> {
        let g = build_graph(budget, k, limit)?;
        Ok(Self::from_graph(&g))
    }

    pub fn from_graph(g: &DominanceGraph) -> Self {
        let graph = GraphExport::from_graph(g);
        let counters = (0..g.len())
            .map(|v| {
                let best = g.best_counter(v);
                CounterRecord {
                    strategy: g.node(v).values().to_vec(),
                    counter: best.map(|e| g.node(e.winner).values().to_vec()),
                    margin: best.map(|e| e.margin()),
                }
            })
            .collect();
        let example_teams = (g.budget() == 6 && g.k() == 3).then(|| example_teams(g));
        AnalysisReport {
            scc_sizes: graph.scc.iter().map(Vec::len).collect(),
            composition_count: composition_count(g.budget(), g.k()).ok(),
            partition_count: g.len(),
            graph,
            counters,
            example_teams,
        }
    }
}

fn example_teams(g: &DominanceGraph) -> ExampleTeams {
    let alloc = |v: &[u64; 3]| Allocation::new(v.to_vec()).expect("fixed example allocation");
    let teams: Vec<TeamRecord> = EXAMPLE_TEAMS
        .iter()
        .map(|(label, v)| {
            let node = g.index_of(&alloc(v)).expect("example team lies in the space");
            let best = g.best_counter(node);
            TeamRecord {
                label: label.to_string(),
                allocation: v.to_vec(),
                dominated: best.is_some(),
                counter: best.map(|e| g.node(e.winner).values().to_vec()),
                margin: best.map(|e| e.margin()),
            }
        })
        .collect();
    // MTL-BOS, BOS-NY, MTL-NY
    let results = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .map(|&(i, j)| {
            let (la, va) = EXAMPLE_TEAMS[i];
            let (lb, vb) = EXAMPLE_TEAMS[j];
            let c = matchup_counts(&alloc(&va), &alloc(&vb)).expect("equal dimensions");
            let (winner, loser, ww, lw) = if c.wins_a >= c.wins_b {
                (la, lb, c.wins_a, c.wins_b)
            } else {
                (lb, la, c.wins_b, c.wins_a)
            };
            PairResult {
                winner: winner.into(),
                loser: loser.into(),
                winner_wins: ww,
                loser_wins: lw,
            }
        })
        .collect();
    ExampleTeams {
        all_dominated: teams.iter().all(|t| t.dominated),
        teams,
        results,
    }
}

/// Output format for [`emit_analysis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalysisFormat {
    Json,
    Text,
}

const TEXT_CYCLE_LIMIT: usize = 20;

pub fn emit_analysis(budget: u64, k: usize, format: AnalysisFormat, limit: SpaceLimit) -> Result<String> {
    let report = AnalysisReport::build(budget, k, limit)?;
    Ok(match format {
        AnalysisFormat::Json => to_json_compact(&report),
        AnalysisFormat::Text => analysis_text(&report),
    })
}

fn tuple(v: &[u64]) -> String {
    let inner: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

fn tuple_list(vs: &[Vec<u64>]) -> String {
    if vs.is_empty() {
        return "none".into();
    }
    vs.iter().map(|v| tuple(v)).collect::<Vec<_>>().join(", ")
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let g = &r.graph;
    let mut out = String::new();
    let _ = writeln!(out, "strategy space: budget {}, {} categories", g.budget, g.k);
    match r.composition_count {
        Some(c) => {
            let _ = writeln!(out, "compositions: {c}");
        }
        None => out.push_str("compositions: exceeds u64\n"),
    }
    let _ = writeln!(out, "partitions: {}", r.partition_count);
    let _ = writeln!(out, "strict edges: {}", g.edges.len());
    let _ = writeln!(out, "draw pairs: {}", g.draws.len());
    let _ = writeln!(out, "three-cycles: {}", g.three_cycles.len());
    for c in g.three_cycles.iter().take(TEXT_CYCLE_LIMIT) {
        let _ = writeln!(
            out,
            "  {} -> {} -> {} -> {}",
            tuple(&g.nodes[c[0]]),
            tuple(&g.nodes[c[1]]),
            tuple(&g.nodes[c[2]]),
            tuple(&g.nodes[c[0]])
        );
    }
    if g.three_cycles.len() > TEXT_CYCLE_LIMIT {
        let _ = writeln!(out, "  ... {} more", g.three_cycles.len() - TEXT_CYCLE_LIMIT);
    }
    let sizes: Vec<String> = r.scc_sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "SCC sizes: {}", sizes.join(" "));
    let _ = writeln!(out, "undominated: {}", tuple_list(&g.undominated));
    if g.claim.holds {
        out.push_str("universal counter claim: HOLDS (every strategy has a same-cap strict dominator)\n");
    } else {
        let _ = writeln!(
            out,
            "universal counter claim: DOES NOT HOLD ({} undominated: {})",
            g.claim.counterexamples.len(),
            tuple_list(&g.claim.counterexamples)
        );
    }
    out.push_str("counter-strategies:\n");
    for c in &r.counters {
        match (&c.counter, c.margin) {
            (Some(p), Some(m)) => {
                let _ = writeln!(out, "  {}: {} margin {m}", tuple(&c.strategy), tuple(p));
            }
            _ => {
                let _ = writeln!(out, "  {}: none", tuple(&c.strategy));
            }
        }
    }
    if let Some(ex) = &r.example_teams {
        let results: Vec<String> = ex
            .results
            .iter()
            .map(|p| format!("{} beats {} {}-{}", p.winner, p.loser, p.winner_wins, p.loser_wins))
            .collect();
        let _ = writeln!(out, "three example teams: {}", results.join("; "));
        let _ = writeln!(
            out,
            "every example team has a same-cap dominator: {}",
            if ex.all_dominated { "yes" } else { "no" }
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationRecord {
    pub seed: u64,
    pub n_games: u64,
    pub tie_policy: TiePolicy,
    pub best_of: Option<u64>,
    pub n_series: u64,
    pub a_game_wins: u64,
    pub b_game_wins: u64,
    pub tie_games: u64,
    pub a_series_wins: u64,
    pub b_series_wins: u64,
    pub exact_p: Fraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub simulation: SimulationRecord,
}

impl SimulationReport {
    pub fn new(config: &SimConfig, stats: &SeriesStats, exact_p: Fraction) -> Self {
        SimulationReport {
            simulation: SimulationRecord {
                seed: config.seed,
                n_games: config.n_games,
                tie_policy: config.tie_policy,
                best_of: config.best_of,
                n_series: config.n_series,
                a_game_wins: stats.a_game_wins,
                b_game_wins: stats.b_game_wins,
                tie_games: stats.tie_games,
                a_series_wins: stats.a_series_wins,
                b_series_wins: stats.b_series_wins,
                exact_p,
            },
        }
    }
}

pub fn emit_simulation_json(config: &SimConfig, stats: &SeriesStats, exact_p: Fraction) -> String {
    to_json_pretty(&SimulationReport::new(config, stats, exact_p))
}

pub fn emit_simulation_text(
    a: &Allocation,
    b: &Allocation,
    config: &SimConfig,
    stats: &SeriesStats,
    exact_p: Fraction,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "A={a} vs B={b} (seed {}, tie policy {})",
        config.seed, config.tie_policy
    );
    let tie_word = match config.tie_policy {
        TiePolicy::Reroll => "tied rolls rerolled",
        TiePolicy::CountAsNoGame => "tied games",
    };
    let _ = writeln!(
        out,
        "games: {}  A {}  B {}  {tie_word} {}",
        stats.games_played, stats.a_game_wins, stats.b_game_wins, stats.tie_games
    );
    match stats.empirical_a_frequency() {
        Some(f) => {
            let _ = writeln!(out, "empirical A share of decisive games: {f:.4}");
        }
        None => out.push_str("empirical A share of decisive games: undefined (no decisive games)\n"),
    }
    let _ = writeln!(out, "exact P(A wins a game): {}", exact_p.display_with_decimal());
    if let Some(n) = config.best_of {
        let _ = writeln!(
            out,
            "series (best of {n}, {} series): A {}  B {}",
            config.n_series, stats.a_series_wins, stats.b_series_wins
        );
    }
    out
}

fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn to_json_compact<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchup::matchup_table;

    fn alloc(v: &[u64]) -> Allocation {
        Allocation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn grid_matches_chart_layout() {
        let (a, b) = (alloc(&[1, 1, 4]), alloc(&[3, 3, 0]));
        let t = matchup_table(&a, &b).unwrap();
        let grid = emit_matchup_grid(&a, &b, &t, &Labels::new("MTL", "NY"));
        let want = "\
MTL\\NY |   3   3   0
-------+------------
     1 |  NY  NY MTL
     1 |  NY  NY MTL
     4 | MTL MTL MTL
";
        assert_eq!(grid, want);
        let body: Vec<&str> = grid.lines().skip(2).flat_map(|l| l.split('|').nth(1).unwrap().split_whitespace()).collect();
        assert_eq!(body.iter().filter(|c| **c == "NY").count(), 4);
        assert_eq!(body.iter().filter(|c| **c == "MTL").count(), 5);
    }

    #[test]
    fn grid_identical_and_single_cell() {
        let a = alloc(&[2, 2, 2]);
        let t = matchup_table(&a, &a).unwrap();
        let grid = emit_matchup_grid(&a, &a, &t, &Labels::default());
        let cells: Vec<&str> = grid.lines().skip(2).flat_map(|l| l.split('|').nth(1).unwrap().split_whitespace()).collect();
        assert_eq!(cells, vec!["tie"; 9]);

        let (x, y) = (alloc(&[2]), alloc(&[1]));
        let t = matchup_table(&x, &y).unwrap();
        assert_eq!(emit_matchup_grid(&x, &y, &t, &Labels::default()), "A\\B |   1\n----+----\n  2 |   A\n");
    }

    #[test]
    fn summary_and_csv() {
        let (a, b) = (alloc(&[1, 1, 4]), alloc(&[3, 3, 0]));
        let t = matchup_table(&a, &b).unwrap();
        assert_eq!(summary_line(&t, &Labels::default()), "A wins 5, B wins 4, ties 0; outcome: A");
        let csv = emit_matchup_csv(&a, &b, &t, &Labels::default());
        let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.len() == 4));
        assert_eq!(rows[0][1..], ["3", "3", "0"]);
        assert_eq!(rows.iter().skip(1).map(|r| r[0]).collect::<Vec<_>>(), ["1", "1", "4"]);
        assert_eq!(rows[3][1..], ["A", "A", "A"]);
    }

    #[test]
    fn matchup_json_fields() {
        let (a, b) = (alloc(&[1, 1, 4]), alloc(&[3, 3, 0]));
        let t = matchup_table(&a, &b).unwrap();
        let json = emit_matchup_json(&a, &b, &t, &Labels::default());
        let rec: MatchupRecord = serde_json::from_str(&json).unwrap();
        assert_eq!((rec.wins_a, rec.wins_b, rec.ties), (5, 4, 0));
        assert_eq!(rec.p_reroll, Some(Fraction::new(5, 9)));
        assert_eq!(rec.outcome, SeriesOutcome::AWins);
        assert!(!rec.unequal_budgets);
    }

    #[test]
    fn unequal_budget_note() {
        let (a, b) = (alloc(&[1, 1, 4]), alloc(&[3, 3, 1]));
        let t = matchup_table(&a, &b).unwrap();
        assert!(emit_matchup_text(&a, &b, &t, &Labels::default()).contains("note: unequal budgets"));
    }

    #[test]
    fn dot_counts() {
        let g = build_graph(6, 3, SpaceLimit::default()).unwrap();
        let dot = emit_dot(&g);
        let nodes = dot.lines().filter(|l| l.contains("[label=\"(")).count();
        let dashed = dot.lines().filter(|l| l.contains("style=dashed")).count();
        let directed = dot.lines().filter(|l| l.contains("->") && !l.contains("dashed")).count();
        assert_eq!((nodes, directed, dashed), (7, 14, 7));
        assert!(dot.contains("n6 -> n3 [label=\"6-3\"];"), "(2,2,2) beats (4,1,1) 6-3");
        assert_eq!(dot, emit_dot(&g));

        let g0 = build_graph(0, 3, SpaceLimit::default()).unwrap();
        let dot0 = emit_dot(&g0);
        assert_eq!(dot0.lines().filter(|l| l.contains("[label=\"(")).count(), 1);
        assert!(!dot0.contains("->"));
    }

    #[test]
    fn analysis_json_at_six_three() {
        let json = emit_analysis(6, 3, AnalysisFormat::Json, SpaceLimit::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["partition_count"], 7);
        assert_eq!(v["composition_count"], 28);
        assert_eq!(v["edges"].as_array().unwrap().len(), 14);
        assert_eq!(v["three_cycles"].as_array().unwrap().len(), 2);
        assert_eq!(v["undominated"], serde_json::json!([[4, 2, 0]]));
        assert_eq!(v["claim"]["holds"], false);
        assert_eq!(v["claim"]["counterexamples"], serde_json::json!([[4, 2, 0]]));
        let report: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, AnalysisReport::build(6, 3, SpaceLimit::default()).unwrap());
    }

    #[test]
    fn analysis_text_at_six_three() {
        let text = emit_analysis(6, 3, AnalysisFormat::Text, SpaceLimit::default()).unwrap();
        assert!(text.contains("three example teams: BOS beats MTL 6-3; NY beats BOS 6-3; MTL beats NY 5-4"));
        assert!(text.contains("universal counter claim: DOES NOT HOLD (1 undominated: (4,2,0))"));
        assert!(text.contains("every example team has a same-cap dominator: yes"));
        assert!(text.contains("  (2,2,2) -> (4,1,1) -> (3,3,0) -> (2,2,2)"));
        assert!(text.contains("  (6,0,0): (2,2,2) margin 3"));
        assert!(text.contains("  (4,2,0): none"));
    }

    #[test]
    fn analysis_singleton_space() {
        let r = AnalysisReport::build(0, 1, SpaceLimit::default()).unwrap();
        assert!(!r.graph.claim.holds);
        assert_eq!(r.graph.claim.counterexamples, vec![vec![0]]);
        assert!(r.example_teams.is_none());
    }

    #[test]
    fn simulation_json_schema() {
        let cfg = SimConfig {
            seed: 42,
            n_games: 10,
            ..SimConfig::default()
        };
        let stats = SeriesStats {
            games_played: 10,
            a_game_wins: 6,
            b_game_wins: 4,
            ..SeriesStats::default()
        };
        let json = emit_simulation_json(&cfg, &stats, Fraction::new(5, 9));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let sim = &v["simulation"];
        let mut keys: Vec<&str> = sim.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        let mut want = [
            "seed", "n_games", "tie_policy", "best_of", "n_series", "a_game_wins",
            "b_game_wins", "tie_games", "a_series_wins", "b_series_wins", "exact_p",
        ];
        want.sort_unstable();
        assert_eq!(keys, want);
        assert_eq!(sim["exact_p"], serde_json::json!({"num": 5, "den": 9}));
        assert_eq!(sim["tie_policy"], "reroll");
        assert_eq!(sim["best_of"], serde_json::Value::Null);
    }
}
