//! Strict-dominance digraph over every canonical allocation under a cap.
//!
//! Nodes are partitions in lexicographically descending order, so node 0 is
//! `(B,0,..,0)` and the last node is the most balanced split. Every unordered
//! pair of nodes is either a directed edge (winner to loser) or a draw.

use crate::alloc::{enumerate_partitions, Allocation, Partition, SpaceLimit};
use crate::error::Result;
use crate::matchup::{sorted_counts, MatchupCounts, SeriesOutcome};

/// `winner` beats `loser` by `winner_wins` cells to `loser_wins`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub winner: usize,
    pub loser: usize,
    pub winner_wins: u64,
    pub loser_wins: u64,
}

impl Edge {
    pub fn margin(&self) -> u64 {
        self.winner_wins - self.loser_wins
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceGraph {
    budget: u64,
    k: usize,
    nodes: Vec<Partition>,
    edges: Vec<Edge>,
    draws: Vec<(usize, usize)>,
    // indices into `edges`
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

/// Directed 3-cycle `x -> y -> z -> x`, rotated so `x` is the
/// lexicographically smallest partition.
pub type ThreeCycle = [usize; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub three_cycles: Vec<ThreeCycle>,
    pub scc_sizes: Vec<usize>,
    pub undominated: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimVerdict {
    pub holds: bool,
    pub counterexamples: Vec<Partition>,
    pub budget: u64,
    pub k: usize,
}

/// A same-cap strict dominator and how decisively it wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counter {
    pub strategy: Partition,
    pub wins: u64,
    pub losses: u64,
}

impl Counter {
    pub fn margin(&self) -> u64 {
        self.wins - self.losses
    }
}

/// Builds the graph for every partition of `budget` into `k` parts.
pub fn build_graph(budget: u64, k: usize, limit: SpaceLimit) -> Result<DominanceGraph> {
    let nodes = enumerate_partitions(budget, k, limit)?;
    Ok(DominanceGraph::from_nodes(budget, k, nodes))
}

impl DominanceGraph {
    fn from_nodes(budget: u64, k: usize, nodes: Vec<Partition>) -> Self {
        let n = nodes.len();
        let mut edges = Vec::new();
        let mut draws = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let c = sorted_counts(nodes[i].values(), nodes[j].values());
                match c.outcome() {
                    SeriesOutcome::AWins => edges.push(Edge {
                        winner: i,
                        loser: j,
                        winner_wins: c.wins_a,
                        loser_wins: c.wins_b,
                    }),
                    SeriesOutcome::BWins => edges.push(Edge {
                        winner: j,
                        loser: i,
                        winner_wins: c.wins_b,
                        loser_wins: c.wins_a,
                    }),
                    SeriesOutcome::Draw => draws.push((i, j)),
                }
            }
        }
        edges.sort_unstable_by_key(|e| (e.winner, e.loser));
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            out_edges[e.winner].push(idx);
            in_edges[e.loser].push(idx);
        }
        DominanceGraph {
            budget,
            k,
            nodes,
            edges,
            draws,
            out_edges,
            in_edges,
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Partition {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sorted by `(winner, loser)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Unordered draw pairs `(i, j)` with `i < j`, sorted.
    pub fn draws(&self) -> &[(usize, usize)] {
        &self.draws
    }

    /// Position of the canonical form of `a`, if it belongs to this space.
    pub fn index_of(&self, a: &Allocation) -> Option<usize> {
        let p = a.canonicalize();
        self.nodes.binary_search_by(|q| p.cmp(q)).ok()
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_edges[v].iter().map(|&e| self.edges[e].loser)
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges[v].iter().map(|&e| self.edges[e].winner)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    pub fn has_edge(&self, winner: usize, loser: usize) -> bool {
        self.edge(winner, loser).is_some()
    }

    pub fn edge(&self, winner: usize, loser: usize) -> Option<&Edge> {
        self.out_edges[winner]
            .binary_search_by_key(&loser, |&e| self.edges[e].loser)
            .ok()
            .map(|pos| &self.edges[self.out_edges[winner][pos]])
    }

    /// Recomputes the counts for a pair of nodes.
    pub fn counts(&self, a: usize, b: usize) -> MatchupCounts {
        sorted_counts(self.nodes[a].values(), self.nodes[b].values())
    }

    /// Strongest strict dominator of node `v`: largest margin, then the
    /// lexicographically smallest partition.
    pub fn best_counter(&self, v: usize) -> Option<&Edge> {
        // smaller partitions have larger indices
        self.in_edges[v]
            .iter()
            .map(|&e| &self.edges[e])
            .max_by_key(|e| (e.margin(), e.winner))
    }

    pub fn cycle_report(&self) -> CycleReport {
        CycleReport {
            three_cycles: find_three_cycles(self),
            scc_sizes: strongly_connected_components(self)
                .iter()
                .map(Vec::len)
                .collect(),
            undominated: undominated(self),
        }
    }
}

struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            words,
            bits: vec![0; words * n],
        }
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1 << (col % 64);
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }
}

/// Every directed 3-cycle, each listed once starting at its lexicographically
/// smallest partition. The list is sorted by the partitions along the cycle.
pub fn find_three_cycles(g: &DominanceGraph) -> Vec<ThreeCycle> {
    let n = g.len();
    let mut out_bits = BitMatrix::new(n);
    let mut in_bits = BitMatrix::new(n);
    for e in &g.edges {
        out_bits.set(e.winner, e.loser);
        in_bits.set(e.loser, e.winner);
    }
    let mut cycles = Vec::new();
    let mut candidates = vec![0u64; out_bits.words];
    // ascending partition order is descending index order
    for x in (0..n).rev() {
        let mut ys: Vec<usize> = g.successors(x).filter(|&y| y < x).collect();
        ys.sort_unstable_by(|a, b| b.cmp(a));
        for y in ys {
            // z must beat x, lose to y, and sort after x
            for (w, slot) in candidates.iter_mut().enumerate() {
                *slot = out_bits.row(y)[w] & in_bits.row(x)[w];
            }
            for w in (0..candidates.len()).rev() {
                let mut word = candidates[w];
                while word != 0 {
                    let bit = 63 - word.leading_zeros() as usize;
                    word &= !(1u64 << bit);
                    let z = w * 64 + bit;
                    if z < x {
                        cycles.push([x, y, z]);
                    }
                }
            }
        }
    }
    cycles
}

/// Strongly connected components over strict edges (iterative Tarjan).
///
/// Members of each component are listed in ascending partition order and
/// components are ordered by their smallest member.
pub fn strongly_connected_components(g: &DominanceGraph) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = g.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.successors(v).collect()).collect();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0usize;
    // (node, position in its adjacency list)
    let mut work: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        work.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = work.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }

    for comp in &mut comps {
        comp.sort_unstable_by(|a, b| b.cmp(a));
    }
    comps.sort_unstable_by(|a, b| b[0].cmp(&a[0]));
    comps
}

/// Nodes with no incoming strict edge, in node order.
pub fn undominated(g: &DominanceGraph) -> Vec<usize> {
    (0..g.len()).filter(|&v| g.in_degree(v) == 0).collect()
}

/// Best same-cap counter to `a` among all partitions of `budget`: maximum
/// margin, ties broken toward the lexicographically smallest partition.
/// `None` when nothing strictly dominates `a`.
pub fn counter_strategy(a: &Allocation, budget: u64, limit: SpaceLimit) -> Result<Option<Counter>> {
    let target = a.canonicalize();
    let mut best: Option<Counter> = None;
    // descending enumeration: on equal margin the later partition is smaller
    for p in enumerate_partitions(budget, a.k(), limit)? {
        let c = sorted_counts(p.values(), target.values());
        if c.wins_a <= c.wins_b {
            continue;
        }
        let margin = c.wins_a - c.wins_b;
        if best.as_ref().is_none_or(|b| margin >= b.margin()) {
            best = Some(Counter {
                strategy: p,
                wins: c.wins_a,
                losses: c.wins_b,
            });
        }
    }
    Ok(best)
}

/// Checks whether every partition of `budget` into `k` parts has a strict
/// same-cap dominator.
pub fn verify_universal_counter_claim(budget: u64, k: usize, limit: SpaceLimit) -> Result<ClaimVerdict> {
    let g = build_graph(budget, k, limit)?;
    Ok(g.claim_verdict())
}

impl DominanceGraph {
    pub fn claim_verdict(&self) -> ClaimVerdict {
        let counterexamples: Vec<Partition> = undominated(self)
            .into_iter()
            .map(|v| self.nodes[v].clone())
            .collect();
        ClaimVerdict {
            holds: counterexamples.is_empty(),
            counterexamples,
            budget: self.budget,
            k: self.k,
        }
    }
}
