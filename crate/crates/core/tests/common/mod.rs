//! Brute-force reference computations shared by the integration suites.
//! Nothing here calls into the library's enumeration, counting or graph code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

/// Every k-tuple over `0..=budget` that sums to `budget`, by odometer.
pub fn brute_compositions(budget: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut digits = vec![0u64; k];
    loop {
        if digits.iter().sum::<u64>() == budget {
            out.push(digits.clone());
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return out;
            }
            if digits[pos] < budget {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Sorted-descending, deduplicated compositions, listed in descending order.
pub fn brute_partitions(budget: u64, k: usize) -> Vec<Vec<u64>> {
    let set: BTreeSet<Vec<u64>> = brute_compositions(budget, k)
        .into_iter()
        .map(|mut v| {
            v.sort();
            v.reverse();
            v
        })
        .collect();
    set.into_iter().rev().collect()
}

/// Naive double loop: (wins for a, wins for b, ties).
pub fn naive_counts(a: &[u64], b: &[u64]) -> (u64, u64, u64) {
    let (mut wa, mut wb, mut t) = (0, 0, 0);
    for x in a {
        for y in b {
            if x > y {
                wa += 1;
            } else if y > x {
                wb += 1;
            } else {
                t += 1;
            }
        }
    }
    (wa, wb, t)
}

pub struct NaiveGraph {
    pub nodes: Vec<Vec<u64>>,
    /// (winner, loser, margin) over node positions.
    pub edges: Vec<(usize, usize, u64)>,
    pub draws: Vec<(usize, usize)>,
}

impl NaiveGraph {
    pub fn build(budget: u64, k: usize) -> Self {
        let nodes = brute_partitions(budget, k);
        let mut edges = Vec::new();
        let mut draws = Vec::new();
        for i in 0..nodes.len() {
            for j in 0..nodes.len() {
                if i >= j {
                    continue;
                }
                let (wa, wb, _) = naive_counts(&nodes[i], &nodes[j]);
                if wa > wb {
                    edges.push((i, j, wa - wb));
                } else if wb > wa {
                    edges.push((j, i, wb - wa));
                } else {
                    draws.push((i, j));
                }
            }
        }
        NaiveGraph { nodes, edges, draws }
    }

    pub fn beats(&self, x: usize, y: usize) -> bool {
        self.edges.iter().any(|&(w, l, _)| w == x && l == y)
    }

    /// All directed triangles as sets of partitions, by scanning every triple.
    pub fn triangles(&self) -> Vec<[Vec<u64>; 3]> {
        let n = self.nodes.len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if x == y || y == z || x == z {
                        continue;
                    }
                    if self.beats(x, y) && self.beats(y, z) && self.beats(z, x) {
                        // rotate so the smallest tuple comes first
                        let mut rot = [x, y, z];
                        let start = (0..3).min_by_key(|&i| self.nodes[rot[i]].clone()).unwrap();
                        rot.rotate_left(start);
                        if seen.insert(rot) {
                            out.push(rot.map(|i| self.nodes[i].clone()));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Components via mutual reachability (Floyd-Warshall closure).
    pub fn scc_sizes(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(w, l, _) in &self.edges {
            reach[w][l] = true;
        }
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][m] && reach[m][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        let mut assigned = vec![false; n];
        let mut sizes = Vec::new();
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let comp: Vec<usize> = (0..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
            for &j in &comp {
                assigned[j] = true;
            }
            sizes.push(comp.len());
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn undominated(&self) -> Vec<Vec<u64>> {
        (0..self.nodes.len())
            .filter(|&v| !self.edges.iter().any(|&(_, l, _)| l == v))
            .map(|v| self.nodes[v].clone())
            .collect()
    }
}

/// Exhaustive best counter: maximal margin, lexicographically smallest tuple
/// among those achieving it.
pub fn brute_counter(target: &[u64], budget: u64) -> Option<(Vec<u64>, u64)> {
    let mut beaters: Vec<(u64, Vec<u64>)> = brute_partitions(budget, target.len())
        .into_iter()
        .filter_map(|p| {
            let (w, l, _) = naive_counts(&p, target);
            (w > l).then(|| (w - l, p))
        })
        .collect();
    let best = beaters.iter().map(|(m, _)| *m).max()?;
    beaters.retain(|(m, _)| *m == best);
    beaters.sort();
    let (m, p) = beaters.remove(0);
    Some((p, m))
}

/// splitmix64 via 128-bit arithmetic reduced by hand, kept apart from the
/// library's wrapping implementation.
pub fn reference_splitmix(state: u64) -> (u64, u64) {
    const MASK: u128 = (1u128 << 64) - 1;
    let s = (u128::from(state) + 0x9E37_79B9_7F4A_7C15u128) & MASK;
    let mut z = s;
    z = ((z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9u128) & MASK;
    z = ((z ^ (z >> 27)) * 0x94D0_49BB_1331_11EBu128) & MASK;
    (s as u64, (z ^ (z >> 31)) as u64)
}
